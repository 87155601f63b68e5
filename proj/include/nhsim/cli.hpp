#ifndef NHSIM_CLI_HPP
#define NHSIM_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nhsim/report.hpp"
#include "nhsim/scenario.hpp"
#include "nhsim/simulation.hpp"

namespace nhsim {

// Exit codes: 0 ok, 1 usage, 2 validation, 3 runtime/io.
inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::usage:
      return 1;
    case Errc::validation:
    case Errc::conflict:
      return 2;
    default:
      return 3;
  }
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"neutral-host 5G slicing simulator"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string format = "both";
  bool quiet = false;
  bool packet_log = false;
  std::int64_t seed_override = -1;
  int runs_override = 0;

  auto add_common = [&](CLI::App* cmd, bool with_overrides) {
    cmd->add_option("--out", out_dir, "output directory for artifacts");
    cmd->add_option("--format", format, "artifact format: csv, json, or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_flag("--quiet", quiet, "suppress progress output");
    cmd->add_flag("--packet-log", packet_log, "record per-slice packet logs (heavy)");
    if (with_overrides) {
      cmd->add_option("--seed", seed_override, "override the scenario seed");
      cmd->add_option("--runs", runs_override, "override the repetition count");
    }
  };

  std::string run_file;
  CLI::App* cmd_run = app.add_subcommand("run", "execute a scenario file");
  cmd_run->add_option("file", run_file, "scenario JSON file")->required();
  add_common(cmd_run, true);

  std::string validate_file;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check a scenario file without running it");
  cmd_validate->add_option("file", validate_file, "scenario JSON file")->required();

  std::string target;
  bool write_out = false;
  CLI::App* cmd_repro =
      app.add_subcommand("reproduce", "run a built-in scenario pair and compare with reference values");
  cmd_repro->add_option("target", target, "table2 | table3 | table4 | auth")->required();
  add_common(cmd_repro, false);
  cmd_repro->add_flag("--write", write_out, "also write metrics/summary artifacts");

  CLI::App* cmd_list = app.add_subcommand("list-scenarios", "list built-in scenarios");
  (void)cmd_list;

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand("list-scenarios")) {
      for (const auto& name : builtin_scenario_names()) out << name << "\n";
      return 0;
    }
    if (app.got_subcommand("validate")) {
      Scenario sc = load_scenario_file(validate_file);
      out << "ok: " << sc.name << " (" << sc.clients.size() << " clients, " << sc.flows.size()
          << " flows, " << sc.registrations.size() << " registrations)\n";
      return 0;
    }
    if (app.got_subcommand("run")) {
      Scenario sc = load_scenario_file(run_file);
      if (seed_override >= 0) sc.seed = static_cast<std::uint64_t>(seed_override);
      if (runs_override > 0) sc.runs = runs_override;
      SimOptions opts;
      opts.packet_logging = packet_log;
      auto runs = run_scenario(sc, opts);
      OutputFormat fmt = format == "csv" ? OutputFormat::csv
                        : format == "json" ? OutputFormat::json
                                           : OutputFormat::both;
      auto files = write_artifacts(sc, runs, out_dir, fmt, packet_log);
      if (!quiet) {
        out << summary_json(sc, runs).dump(2) << "\n";
        for (const auto& f : files) out << "wrote " << f << "\n";
      }
      return 0;
    }
    if (app.got_subcommand("reproduce")) {
      SimOptions opts;
      opts.packet_logging = packet_log;
      ReproduceOutcome outcome = reproduce(target, opts);
      out << outcome.render();
      if (write_out) {
        OutputFormat fmt = format == "csv" ? OutputFormat::csv
                          : format == "json" ? OutputFormat::json
                                             : OutputFormat::both;
        for (const auto& [sc, runs] : outcome.results) {
          for (const auto& f : write_artifacts(sc, runs, out_dir, fmt, false)) {
            if (!quiet) out << "wrote " << f << "\n";
          }
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace nhsim

#endif  // NHSIM_CLI_HPP
