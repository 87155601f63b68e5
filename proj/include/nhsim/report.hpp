#ifndef NHSIM_REPORT_HPP
#define NHSIM_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhsim/scenario.hpp"
#include "nhsim/simulation.hpp"
#include "nhsim/stats.hpp"

namespace nhsim {

// Paper-style fixed precision: Mbps and milliseconds get one decimal, packet
// loss ratios two decimals (as percentages).
inline std::string fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline double round1(double v) { return std::round(v * 10.0) / 10.0; }
inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

// ---------------------------------------------------------------------------
// Derived per-run aggregates

inline double run_total_throughput(const RunResult& run) {
  double total = 0.0;
  for (const auto& f : run.flows) total += f.throughput_mbps;
  return total;
}

inline double run_mean_plr_percent(const RunResult& run) {
  if (run.flows.empty()) return 0.0;
  double total = 0.0;
  for (const auto& f : run.flows) total += f.plr * 100.0;
  return total / static_cast<double>(run.flows.size());
}

inline bool conservation_holds(const RunResult& run) {
  for (const auto& f : run.flows) {
    std::uint64_t dropped = 0;
    for (const auto& [cause, n] : f.drops_by_cause) dropped += n;
    if (f.offered_pkts != f.delivered_pkts + dropped) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Metrics CSV

inline std::string metrics_csv(const Scenario& scenario, const std::vector<RunResult>& runs) {
  std::ostringstream out;
  out << "scenario,run,seed,flow_id,slice,protocol,throughput_mbps,plr,offered_mbits,delivered_mbits\n";
  for (const auto& run : runs) {
    for (const auto& f : run.flows) {
      out << scenario.name << ',' << run.run_index << ',' << run.seed << ',' << f.flow_id << ','
          << f.slice.to_string() << ',' << protocol_name(f.protocol) << ','
          << fixed1(f.throughput_mbps) << ',' << fixed2(f.plr * 100.0) << ','
          << fixed1(f.offered_mbits) << ',' << fixed1(f.delivered_mbits) << '\n';
    }
  }
  return out.str();
}

// Per-slice interface log CSV (requires packet logging).
inline std::string packet_log_csv(const RunResult& run) {
  std::ostringstream out;
  out << "time,slice_sst,slice_sd,flow_id,direction,size_bytes,outcome\n";
  for (const auto& [slice, summary] : run.slice_traffic) {
    for (const auto& e : summary.entries) {
      char ts[32];
      std::snprintf(ts, sizeof(ts), "%.9f", e.at.to_seconds());
      out << ts << ',' << static_cast<int>(slice.sst) << ',' << slice.sd << ','
          << run.flows.at(e.flow).flow_id << ',' << direction_name(e.direction) << ','
          << e.size_bytes << ',' << outcome_name(e.outcome) << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Summary JSON

inline nlohmann::ordered_json stat_json(const StatSummary& s, bool mbps) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["mean"] = mbps ? round1(s.mean) : round2(s.mean);
  if (s.ci95_halfwidth) j["ci95"] = mbps ? round1(*s.ci95_halfwidth) : round2(*s.ci95_halfwidth);
  return j;
}

inline nlohmann::ordered_json summary_json(const Scenario& scenario, const std::vector<RunResult>& runs) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["scenario"] = scenario.name;
  doc["seed"] = scenario.seed;
  doc["runs"] = runs.size();

  if (!runs.empty() && !runs.front().flows.empty()) {
    std::vector<double> totals, plrs;
    for (const auto& run : runs) {
      totals.push_back(run_total_throughput(run));
      plrs.push_back(run_mean_plr_percent(run));
    }
    doc["total_throughput_mbps"] = stat_json(aggregate(totals), true);
    doc["mean_plr_percent"] = stat_json(aggregate(plrs), false);

    ordered_json flows = ordered_json::object();
    for (std::size_t fi = 0; fi < runs.front().flows.size(); ++fi) {
      std::vector<double> tp, plr;
      for (const auto& run : runs) {
        tp.push_back(run.flows[fi].throughput_mbps);
        plr.push_back(run.flows[fi].plr * 100.0);
      }
      ordered_json fj;
      fj["slice"] = runs.front().flows[fi].slice.to_string();
      fj["protocol"] = protocol_name(runs.front().flows[fi].protocol);
      fj["throughput_mbps"] = stat_json(aggregate(tp), true);
      fj["plr_percent"] = stat_json(aggregate(plr), false);
      if (!runs.front().flows[fi].error.empty()) fj["error"] = runs.front().flows[fi].error;
      flows[runs.front().flows[fi].flow_id] = std::move(fj);
    }
    doc["flows"] = std::move(flows);
  }

  std::map<std::string, std::uint64_t> drops;
  for (const auto& run : runs) {
    for (const auto& [cause, n] : run.drop_histogram) drops[cause] += n;
  }
  doc["drop_causes"] = ordered_json::object();
  for (const auto& [cause, n] : drops) doc["drop_causes"][cause] = n;

  std::vector<double> direct_ms, roaming_ms;
  std::map<std::string, std::uint64_t> rejects;
  for (const auto& run : runs) {
    for (const auto& s : run.auth_samples) {
      if (!s.registered) {
        rejects[s.reject_cause] += 1;
        continue;
      }
      (s.path == AuthPath::direct ? direct_ms : roaming_ms).push_back(s.latency_ms);
    }
  }
  if (!direct_ms.empty() || !roaming_ms.empty()) {
    ordered_json auth;
    if (!direct_ms.empty()) auth["direct_ms"] = stat_json(aggregate(direct_ms), true);
    if (!roaming_ms.empty()) auth["roaming_ms"] = stat_json(aggregate(roaming_ms), true);
    if (!direct_ms.empty() && !roaming_ms.empty()) {
      auth["delta_ms"] = round1(aggregate(roaming_ms).mean - aggregate(direct_ms).mean);
    }
    if (!rejects.empty()) {
      auth["rejections"] = ordered_json::object();
      for (const auto& [cause, n] : rejects) auth["rejections"][cause] = n;
    }
    doc["auth"] = std::move(auth);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Reproduction targets: run the built-in scenario pair for a published table
// and put the simulated numbers next to the reference values.

struct ReproduceRow {
  std::string metric;
  double simulated = 0.0;
  double reference = 0.0;
};

struct ReproduceOutcome {
  std::string target;
  std::vector<ReproduceRow> rows;
  std::vector<std::pair<Scenario, std::vector<RunResult>>> results;

  std::string render() const {
    std::ostringstream out;
    out << "reproduce " << target << "\n";
    out << "  metric                          simulated   reference\n";
    for (const auto& row : rows) {
      char line[128];
      std::snprintf(line, sizeof(line), "  %-30s %9s   %9s\n", row.metric.c_str(),
                    (row.metric.find("plr") != std::string::npos ? fixed2(row.simulated)
                                                                 : fixed1(row.simulated))
                        .c_str(),
                    (row.metric.find("plr") != std::string::npos ? fixed2(row.reference)
                                                                 : fixed1(row.reference))
                        .c_str());
      out << line;
    }
    return out.str();
  }
};

inline ReproduceOutcome reproduce(const std::string& target, SimOptions opts = {}) {
  ReproduceOutcome out;
  out.target = target;
  auto run_builtin = [&](const std::string& name) -> const std::vector<RunResult>& {
    Scenario sc = builtin_scenario(name);
    out.results.emplace_back(sc, run_scenario(sc, opts));
    return out.results.back().second;
  };

  if (target == "auth") {
    const auto& runs = run_builtin("paper-auth");
    std::vector<double> direct, roaming;
    for (const auto& run : runs) {
      for (const auto& s : run.auth_samples) {
        if (!s.registered) continue;
        (s.path == AuthPath::direct ? direct : roaming).push_back(s.latency_ms);
      }
    }
    double d = direct.empty() ? 0.0 : aggregate(direct).mean;
    double r = roaming.empty() ? 0.0 : aggregate(roaming).mean;
    out.rows.push_back({"direct_auth_ms", d, 239.9});
    out.rows.push_back({"roaming_auth_ms", r, 262.4});
    out.rows.push_back({"delta_ms", r - d, 22.5});
    return out;
  }

  auto total_pair = [&](const std::string& single_name, const std::string& four_name,
                        double ref_single, double ref_four) {
    const auto& single = run_builtin(single_name);
    const auto& four = run_builtin(four_name);
    std::vector<double> st, ft;
    for (const auto& run : single) st.push_back(run_total_throughput(run));
    for (const auto& run : four) ft.push_back(run_total_throughput(run));
    double s = aggregate(st).mean, f = aggregate(ft).mean;
    out.rows.push_back({"single_slice_total_mbps", s, ref_single});
    out.rows.push_back({"four_slice_total_mbps", f, ref_four});
    out.rows.push_back({"throughput_ratio", s > 0 ? f / s : 0.0, ref_four / ref_single});
  };

  if (target == "table2") {
    total_pair("paper-table2-single", "paper-table2-four", 177.2, 286.7);
    return out;
  }
  if (target == "table3") {
    total_pair("paper-table3-single", "paper-table3-four", 201.4, 325.7);
    return out;
  }
  if (target == "table4") {
    const auto& single = run_builtin("paper-table4-single");
    const auto& four = run_builtin("paper-table4-four");
    std::vector<double> sp, fp;
    for (const auto& run : single) sp.push_back(run_mean_plr_percent(run));
    for (const auto& run : four) fp.push_back(run_mean_plr_percent(run));
    double s = aggregate(sp).mean, f = aggregate(fp).mean;
    out.rows.push_back({"single_slice_plr_percent", s, 1.11});
    out.rows.push_back({"four_slice_plr_percent", f, 0.036});
    out.rows.push_back({"plr_reduction_percent", s > 0 ? (1.0 - f / s) * 100.0 : 0.0, 96.8});
    return out;
  }
  throw Error(Errc::usage, "unknown reproduce target '" + target +
                               "' (expected table2, table3, table4, or auth)");
}

// ---------------------------------------------------------------------------
// Artifact writing

enum class OutputFormat { csv, json, both };

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(Errc::io, "failed writing " + path.string());
}

inline std::vector<std::string> write_artifacts(const Scenario& scenario,
                                                const std::vector<RunResult>& runs,
                                                const std::string& out_dir, OutputFormat format,
                                                bool packet_logs = false) {
  namespace fs = std::filesystem;
  fs::path dir(out_dir.empty() ? "." : out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::io, "cannot create output directory " + dir.string());
  std::vector<std::string> written;
  if (format == OutputFormat::csv || format == OutputFormat::both) {
    fs::path p = dir / (scenario.name + "-metrics.csv");
    write_file(p, metrics_csv(scenario, runs));
    written.push_back(p.string());
  }
  if (format == OutputFormat::json || format == OutputFormat::both) {
    fs::path p = dir / (scenario.name + "-summary.json");
    write_file(p, summary_json(scenario, runs).dump(2) + "\n");
    written.push_back(p.string());
  }
  if (packet_logs) {
    for (const auto& run : runs) {
      fs::path p = dir / (scenario.name + "-run" + std::to_string(run.run_index) + "-packets.csv");
      write_file(p, packet_log_csv(run));
      written.push_back(p.string());
    }
  }
  return written;
}

}  // namespace nhsim

#endif  // NHSIM_REPORT_HPP
