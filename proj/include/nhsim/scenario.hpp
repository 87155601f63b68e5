#ifndef NHSIM_SCENARIO_HPP
#define NHSIM_SCENARIO_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhsim/control_plane.hpp"
#include "nhsim/errors.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"
#include "nhsim/traffic.hpp"

namespace nhsim {

struct Registration {
  Supi supi;
  double time_s = 0.0;

  friend bool operator==(const Registration&, const Registration&) = default;
};

// A complete experiment description. hosts[0] is the core-network host; every
// other host carries one gNB of the shared RAN.
struct Scenario {
  std::string name;
  std::uint64_t seed = 1;
  std::vector<HostResource> hosts;
  LinkSet links;
  std::vector<ClientDescriptor> clients;
  std::map<Supi, std::string> ue_placement;  // UE -> RAN host
  std::vector<FlowSpec> flows;
  std::vector<Registration> registrations;
  double duration_s = 60.0;
  int runs = 10;

  friend bool operator==(const Scenario&, const Scenario&) = default;

  const HostResource& core_host() const { return hosts.front(); }
  std::vector<std::string> ran_host_ids() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < hosts.size(); ++i) out.push_back(hosts[i].host_id);
    return out;
  }
};

// ---------------------------------------------------------------------------
// JSON loading. Unknown fields are rejected with their path; references are
// resolved here so a scenario that loads is a scenario that runs.

namespace detail {

using nlohmann::json;

inline void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw Error(Errc::validation, path + ": expected an object");
}

inline void reject_unknown(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) {
      if (it.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) throw Error(Errc::validation, path + "." + it.key() + ": unknown field");
  }
}

inline std::string get_string(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw Error(Errc::validation, path + "." + key + ": missing required field");
  if (!j[key].is_string()) throw Error(Errc::validation, path + "." + key + ": expected a string");
  return j[key].get<std::string>();
}

inline std::string get_string_or(const json& j, const char* key, const std::string& dflt) {
  if (!j.contains(key)) return dflt;
  return j[key].get<std::string>();
}

inline double get_number(const json& j, const std::string& path, const char* key, double dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number()) throw Error(Errc::validation, path + "." + key + ": expected a number");
  return j[key].get<double>();
}

inline std::int64_t get_int(const json& j, const std::string& path, const char* key, std::int64_t dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number_integer()) throw Error(Errc::validation, path + "." + key + ": expected an integer");
  return j[key].get<std::int64_t>();
}

inline SharedKey parse_key_hex(const std::string& hex, const std::string& path) {
  if (hex.size() != 32) {
    throw Error(Errc::validation, path + ": shared_key must be 32 hex digits");
  }
  SharedKey key{};
  for (std::size_t i = 0; i < 16; ++i) {
    auto nibble = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw Error(Errc::validation, path + ": shared_key has a non-hex digit");
    };
    key[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
  }
  return key;
}

inline std::string key_to_hex(const SharedKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (std::uint8_t b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

inline Plmn parse_plmn_obj(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"mcc", "mnc"});
  return validate_plmn(get_string(j, path, "mcc"), get_string(j, path, "mnc"));
}

inline QosProfile parse_qos(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"session_ambr_mbps", "burst_bytes"});
  QosProfile qos;
  if (j.contains("session_ambr_mbps")) qos.session_ambr_mbps = get_number(j, path, "session_ambr_mbps", 0.0);
  qos.burst_bytes = static_cast<std::uint64_t>(get_int(j, path, "burst_bytes", 3000));
  check_qos(qos);
  return qos;
}

inline SubscriberRecord parse_subscriber(const json& j, const std::string& path, const Plmn& plmn) {
  expect_object(j, path);
  reject_unknown(j, path, {"msin", "shared_key"});
  SubscriberRecord sub;
  sub.supi = make_supi(plmn, get_string(j, path, "msin"));
  if (j.contains("shared_key")) {
    sub.shared_key = parse_key_hex(get_string(j, path, "shared_key"), path);
  } else {
    sub.shared_key = derive_shared_key(sub.supi);
  }
  return sub;
}

inline ClientDescriptor parse_client(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"name", "kind", "plmn", "sepp_endpoint", "subscribers", "home_subscribers", "qos"});
  ClientDescriptor c;
  c.name = get_string(j, path, "name");
  std::string kind = get_string(j, path, "kind");
  if (kind == "operator") {
    c.kind = ClientKind::operator_client;
  } else if (kind == "non_operator") {
    c.kind = ClientKind::non_operator;
  } else {
    throw Error(Errc::validation, path + ".kind: expected 'operator' or 'non_operator', got '" + kind + "'");
  }
  if (!j.contains("plmn")) throw Error(Errc::validation, path + ".plmn: missing required field");
  c.plmn = parse_plmn_obj(j["plmn"], path + ".plmn");
  c.sepp_endpoint = get_string_or(j, "sepp_endpoint", "");
  auto parse_subs = [&](const char* key, std::vector<SubscriberRecord>& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw Error(Errc::validation, path + "." + key + ": expected an array");
    std::size_t i = 0;
    for (const auto& s : j[key]) {
      out.push_back(parse_subscriber(s, path + "." + key + "[" + std::to_string(i) + "]", c.plmn));
      ++i;
    }
  };
  parse_subs("subscribers", c.subscribers);
  parse_subs("home_subscribers", c.home_subscribers);
  if (j.contains("qos")) c.qos = parse_qos(j["qos"], path + ".qos");
  check_client_descriptor(c);
  return c;
}

inline HostResource parse_host(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path,
                 {"host_id", "cores", "per_core_rate_k0_mbps", "per_flow_overhead_c",
                  "multiproc_efficiency_eta", "udp_rate_multiplier_gamma"});
  HostResource h;
  h.host_id = get_string(j, path, "host_id");
  h.cores = static_cast<int>(get_int(j, path, "cores", h.cores));
  h.per_core_rate_k0_mbps = get_number(j, path, "per_core_rate_k0_mbps", h.per_core_rate_k0_mbps);
  h.per_flow_overhead_c = get_number(j, path, "per_flow_overhead_c", h.per_flow_overhead_c);
  h.multiproc_efficiency_eta = get_number(j, path, "multiproc_efficiency_eta", h.multiproc_efficiency_eta);
  h.udp_rate_multiplier_gamma = get_number(j, path, "udp_rate_multiplier_gamma", h.udp_rate_multiplier_gamma);
  check_host(h);
  return h;
}

inline LinkProfile parse_link(const json& j, const std::string& path, const char* name, double dflt) {
  LinkProfile l{name, dflt};
  if (j.contains(name)) {
    expect_object(j[name], path + "." + name);
    reject_unknown(j[name], path + "." + name, {"one_way_delay_ms"});
    l.one_way_delay_ms = get_number(j[name], path + "." + name, "one_way_delay_ms", dflt);
  }
  check_link(l);
  return l;
}

inline FlowSpec parse_flow(const json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"flow_id", "supi", "protocol", "rate_mbps", "window_bytes", "start", "duration"});
  FlowSpec f;
  f.flow_id = get_string(j, path, "flow_id");
  f.supi = parse_supi(get_string(j, path, "supi"));
  std::string proto = get_string(j, path, "protocol");
  if (proto == "greedy") {
    f.protocol = TrafficProtocol::greedy;
  } else if (proto == "cbr") {
    f.protocol = TrafficProtocol::cbr;
  } else {
    throw Error(Errc::validation, path + ".protocol: expected 'greedy' or 'cbr', got '" + proto + "'");
  }
  f.rate_mbps = get_number(j, path, "rate_mbps", 0.0);
  f.window_bytes = static_cast<std::uint64_t>(get_int(j, path, "window_bytes", kDefaultWindowBytes));
  f.start_s = get_number(j, path, "start", 0.0);
  f.duration_s = get_number(j, path, "duration", kDefaultFlowDurationS);
  check_flow_spec(f);
  return f;
}

}  // namespace detail

inline Scenario load_scenario(const nlohmann::json& doc) {
  using detail::get_int;
  using detail::get_number;
  using detail::get_string;
  detail::expect_object(doc, "scenario");
  detail::reject_unknown(doc, "scenario",
                         {"name", "seed", "hosts", "links", "clients", "ue_placement", "flows",
                          "registrations", "duration", "runs"});
  Scenario sc;
  sc.name = get_string(doc, "scenario", "name");
  sc.seed = static_cast<std::uint64_t>(get_int(doc, "scenario", "seed", 1));
  sc.duration_s = get_number(doc, "scenario", "duration", 60.0);
  sc.runs = static_cast<int>(get_int(doc, "scenario", "runs", 10));
  if (!(sc.duration_s > 0)) {
    throw Error(Errc::validation, "scenario.duration: duration must be positive");
  }
  if (sc.runs < 1) throw Error(Errc::validation, "scenario.runs: must be at least 1");

  if (!doc.contains("hosts") || !doc["hosts"].is_array() || doc["hosts"].empty()) {
    throw Error(Errc::validation, "scenario.hosts: at least one host (the core host) is required");
  }
  std::set<std::string> host_ids;
  std::size_t hi = 0;
  for (const auto& h : doc["hosts"]) {
    sc.hosts.push_back(detail::parse_host(h, "scenario.hosts[" + std::to_string(hi) + "]"));
    if (!host_ids.insert(sc.hosts.back().host_id).second) {
      throw Error(Errc::validation, "scenario.hosts: duplicate host_id '" + sc.hosts.back().host_id + "'");
    }
    ++hi;
  }

  if (doc.contains("links")) {
    detail::expect_object(doc["links"], "scenario.links");
    detail::reject_unknown(doc["links"], "scenario.links", {"ran", "n2", "sbi", "n32"});
    sc.links.ran = detail::parse_link(doc["links"], "scenario.links", "ran", 15.0);
    sc.links.n2 = detail::parse_link(doc["links"], "scenario.links", "n2", 5.0);
    sc.links.sbi = detail::parse_link(doc["links"], "scenario.links", "sbi", 2.0);
    sc.links.n32 = detail::parse_link(doc["links"], "scenario.links", "n32", 4.625);
  }

  std::set<std::string> client_names;
  std::set<Plmn> client_plmns;
  std::map<std::string, Supi> known_supis;  // by display string
  if (doc.contains("clients")) {
    if (!doc["clients"].is_array()) throw Error(Errc::validation, "scenario.clients: expected an array");
    std::size_t ci = 0;
    for (const auto& c : doc["clients"]) {
      std::string path = "scenario.clients[" + std::to_string(ci) + "]";
      sc.clients.push_back(detail::parse_client(c, path));
      const auto& cd = sc.clients.back();
      if (!client_names.insert(cd.name).second) {
        throw Error(Errc::validation, path + ".name: duplicate client name '" + cd.name + "'");
      }
      if (!client_plmns.insert(cd.plmn).second) {
        throw Error(Errc::conflict, path + ".plmn: no two clients may share a PLMN (" + cd.plmn.to_string() + ")");
      }
      for (const auto& sub : cd.subscribers) {
        if (!known_supis.emplace(sub.supi.to_string(), sub.supi).second) {
          throw Error(Errc::conflict, path + ": duplicate subscriber " + sub.supi.to_string());
        }
      }
      for (const auto& sub : cd.home_subscribers) {
        if (!known_supis.emplace(sub.supi.to_string(), sub.supi).second) {
          throw Error(Errc::conflict, path + ": duplicate subscriber " + sub.supi.to_string());
        }
      }
      ++ci;
    }
  }

  bool has_activity = false;
  if (doc.contains("ue_placement")) {
    detail::expect_object(doc["ue_placement"], "scenario.ue_placement");
    for (auto it = doc["ue_placement"].begin(); it != doc["ue_placement"].end(); ++it) {
      std::string path = "scenario.ue_placement['" + it.key() + "']";
      auto known = known_supis.find(it.key());
      if (known == known_supis.end()) {
        throw Error(Errc::validation, path + ": references unknown subscriber '" + it.key() + "'");
      }
      if (!it.value().is_string()) throw Error(Errc::validation, path + ": expected a host_id string");
      std::string host = it.value().get<std::string>();
      if (!host_ids.count(host)) {
        throw Error(Errc::validation, path + ": references unknown host '" + host + "'");
      }
      if (host == sc.hosts.front().host_id) {
        throw Error(Errc::validation, path + ": UEs attach to RAN hosts, not the core host '" + host + "'");
      }
      sc.ue_placement[known->second] = host;
      has_activity = true;
    }
  }

  if (doc.contains("flows")) {
    if (!doc["flows"].is_array()) throw Error(Errc::validation, "scenario.flows: expected an array");
    std::set<std::string> flow_ids;
    std::size_t fi = 0;
    for (const auto& f : doc["flows"]) {
      std::string path = "scenario.flows[" + std::to_string(fi) + "]";
      sc.flows.push_back(detail::parse_flow(f, path));
      const auto& fs = sc.flows.back();
      if (!flow_ids.insert(fs.flow_id).second) {
        throw Error(Errc::validation, path + ".flow_id: duplicate flow id '" + fs.flow_id + "'");
      }
      if (!known_supis.count(fs.supi.to_string())) {
        throw Error(Errc::validation,
                    path + ".supi: references unknown subscriber '" + fs.supi.to_string() + "'");
      }
      if (fs.start_s + fs.duration_s > sc.duration_s) {
        throw Error(Errc::validation, path + ": flow must fit inside the scenario duration (start " +
                                          std::to_string(fs.start_s) + " + duration " +
                                          std::to_string(fs.duration_s) + " > " +
                                          std::to_string(sc.duration_s) + ")");
      }
      has_activity = true;
      ++fi;
    }
  }

  if (doc.contains("registrations")) {
    if (!doc["registrations"].is_array()) {
      throw Error(Errc::validation, "scenario.registrations: expected an array");
    }
    std::size_t ri = 0;
    for (const auto& r : doc["registrations"]) {
      std::string path = "scenario.registrations[" + std::to_string(ri) + "]";
      detail::expect_object(r, path);
      detail::reject_unknown(r, path, {"supi", "time"});
      Registration reg;
      std::string supi_text = get_string(r, path, "supi");
      auto known = known_supis.find(supi_text);
      if (known == known_supis.end()) {
        throw Error(Errc::validation, path + ".supi: references unknown subscriber '" + supi_text + "'");
      }
      reg.supi = known->second;
      reg.time_s = get_number(r, path, "time", 0.0);
      if (reg.time_s < 0 || reg.time_s > sc.duration_s) {
        throw Error(Errc::validation, path + ".time: registration time must fall inside the scenario duration");
      }
      sc.registrations.push_back(reg);
      has_activity = true;
      ++ri;
    }
  }

  if (has_activity && sc.hosts.size() < 2) {
    throw Error(Errc::validation,
                "scenario.hosts: UEs, flows, or registrations require at least one RAN host besides the core");
  }
  return sc;
}

inline Scenario load_scenario_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::validation, std::string("scenario: not valid JSON: ") + e.what());
  }
  return load_scenario(doc);
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_scenario_text(buf.str());
}

// Canonical emission: every field present, declaration order, keys sorted
// only where the type itself is a map.
inline nlohmann::ordered_json emit_scenario(const Scenario& sc) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["name"] = sc.name;
  doc["seed"] = sc.seed;
  doc["hosts"] = ordered_json::array();
  for (const auto& h : sc.hosts) {
    ordered_json hj;
    hj["host_id"] = h.host_id;
    hj["cores"] = h.cores;
    hj["per_core_rate_k0_mbps"] = h.per_core_rate_k0_mbps;
    hj["per_flow_overhead_c"] = h.per_flow_overhead_c;
    hj["multiproc_efficiency_eta"] = h.multiproc_efficiency_eta;
    hj["udp_rate_multiplier_gamma"] = h.udp_rate_multiplier_gamma;
    doc["hosts"].push_back(std::move(hj));
  }
  auto link_json = [](const LinkProfile& l) {
    ordered_json lj;
    lj["one_way_delay_ms"] = l.one_way_delay_ms;
    return lj;
  };
  doc["links"]["ran"] = link_json(sc.links.ran);
  doc["links"]["n2"] = link_json(sc.links.n2);
  doc["links"]["sbi"] = link_json(sc.links.sbi);
  doc["links"]["n32"] = link_json(sc.links.n32);
  doc["clients"] = ordered_json::array();
  for (const auto& c : sc.clients) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["kind"] = c.kind == ClientKind::operator_client ? "operator" : "non_operator";
    cj["plmn"] = {{"mcc", c.plmn.mcc}, {"mnc", c.plmn.mnc}};
    if (!c.sepp_endpoint.empty()) cj["sepp_endpoint"] = c.sepp_endpoint;
    auto subs_json = [](const std::vector<SubscriberRecord>& subs) {
      ordered_json arr = ordered_json::array();
      for (const auto& s : subs) {
        ordered_json sj;
        sj["msin"] = s.supi.msin;
        sj["shared_key"] = detail::key_to_hex(s.shared_key);
        arr.push_back(std::move(sj));
      }
      return arr;
    };
    if (!c.subscribers.empty()) cj["subscribers"] = subs_json(c.subscribers);
    if (!c.home_subscribers.empty()) cj["home_subscribers"] = subs_json(c.home_subscribers);
    ordered_json qj;
    if (c.qos.session_ambr_mbps) qj["session_ambr_mbps"] = *c.qos.session_ambr_mbps;
    qj["burst_bytes"] = c.qos.burst_bytes;
    cj["qos"] = std::move(qj);
    doc["clients"].push_back(std::move(cj));
  }
  doc["ue_placement"] = ordered_json::object();
  for (const auto& [supi, host] : sc.ue_placement) doc["ue_placement"][supi.to_string()] = host;
  doc["flows"] = ordered_json::array();
  for (const auto& f : sc.flows) {
    ordered_json fj;
    fj["flow_id"] = f.flow_id;
    fj["supi"] = f.supi.to_string();
    fj["protocol"] = protocol_name(f.protocol);
    if (f.protocol == TrafficProtocol::cbr) fj["rate_mbps"] = f.rate_mbps;
    fj["window_bytes"] = f.window_bytes;
    fj["start"] = f.start_s;
    fj["duration"] = f.duration_s;
    doc["flows"].push_back(std::move(fj));
  }
  doc["registrations"] = ordered_json::array();
  for (const auto& r : sc.registrations) {
    ordered_json rj;
    rj["supi"] = r.supi.to_string();
    rj["time"] = r.time_s;
    doc["registrations"].push_back(std::move(rj));
  }
  doc["duration"] = sc.duration_s;
  doc["runs"] = sc.runs;
  return doc;
}

// ---------------------------------------------------------------------------
// Built-in scenarios: the evaluation topology (one two-core core host, four
// single-core RAN hosts) in its single-slice and four-slice configurations.

namespace detail {

inline std::vector<HostResource> paper_hosts() {
  std::vector<HostResource> hosts;
  HostResource core;
  core.host_id = "core";
  hosts.push_back(core);
  for (int i = 1; i <= 4; ++i) {
    HostResource ran;
    ran.host_id = "ran" + std::to_string(i);
    ran.cores = 1;
    hosts.push_back(ran);
  }
  return hosts;
}

inline SubscriberRecord make_sub(const Plmn& plmn, int index) {
  SubscriberRecord sub;
  sub.supi = make_supi(plmn, "00000000" + std::to_string(index));
  sub.shared_key = derive_shared_key(sub.supi);
  return sub;
}

// One operator plus three non-operator tenants, or one tenant with every UE.
inline Scenario paper_topology(const std::string& name, bool four_slices, int ues_per_ran_host) {
  Scenario sc;
  sc.name = name;
  sc.seed = 42;
  sc.hosts = paper_hosts();
  sc.runs = 10;

  const int total_ues = 4 * ues_per_ran_host;
  std::vector<Supi> ues;
  if (four_slices) {
    for (int c = 0; c < 4; ++c) {
      ClientDescriptor cd;
      cd.plmn = validate_plmn("001", "0" + std::to_string(2 + c));
      std::vector<SubscriberRecord> subs;
      for (int u = 1; u <= ues_per_ran_host; ++u) subs.push_back(make_sub(cd.plmn, u));
      if (c == 0) {
        cd.name = "op-a";
        cd.kind = ClientKind::operator_client;
        cd.sepp_endpoint = "op-a-hsepp";
        cd.home_subscribers = subs;
      } else {
        cd.name = std::string("tenant-") + static_cast<char>('a' + c);
        cd.kind = ClientKind::non_operator;
        cd.subscribers = subs;
      }
      for (const auto& s : subs) {
        ues.push_back(s.supi);
        sc.ue_placement[s.supi] = "ran" + std::to_string(c + 1);
      }
      sc.clients.push_back(std::move(cd));
    }
  } else {
    ClientDescriptor cd;
    cd.name = "tenant-a";
    cd.kind = ClientKind::non_operator;
    cd.plmn = validate_plmn("001", "01");
    for (int u = 1; u <= total_ues; ++u) {
      cd.subscribers.push_back(make_sub(cd.plmn, u));
      ues.push_back(cd.subscribers.back().supi);
      sc.ue_placement[cd.subscribers.back().supi] = "ran" + std::to_string((u - 1) / ues_per_ran_host + 1);
    }
    sc.clients.push_back(std::move(cd));
  }
  for (const auto& supi : ues) sc.registrations.push_back(Registration{supi, 0.0});
  return sc;
}

inline Scenario with_flows(Scenario sc, TrafficProtocol proto, double cbr_rate_mbps) {
  int i = 1;
  for (const auto& reg : sc.registrations) {
    FlowSpec f;
    f.flow_id = "f" + std::to_string(i++);
    f.supi = reg.supi;
    f.protocol = proto;
    if (proto == TrafficProtocol::cbr) f.rate_mbps = cbr_rate_mbps;
    f.start_s = 1.0;
    f.duration_s = 60.0;
    sc.flows.push_back(std::move(f));
  }
  sc.duration_s = 62.0;
  return sc;
}

}  // namespace detail

inline std::vector<std::string> builtin_scenario_names() {
  return {"paper-auth",          "paper-table2-single", "paper-table2-four", "paper-table3-single",
          "paper-table3-four",   "paper-table4-single", "paper-table4-four"};
}

inline Scenario builtin_scenario(const std::string& name) {
  using detail::paper_topology;
  using detail::with_flows;
  if (name == "paper-auth") {
    Scenario sc = paper_topology(name, true, 1);
    // one measured user per client type is enough; keep the four-client
    // topology so the operator path is exercised alongside a direct one
    sc.duration_s = 1.0;
    return sc;
  }
  if (name == "paper-table2-single") {
    return with_flows(paper_topology(name, false, 2), TrafficProtocol::greedy, 0.0);
  }
  if (name == "paper-table2-four") {
    return with_flows(paper_topology(name, true, 2), TrafficProtocol::greedy, 0.0);
  }
  if (name == "paper-table3-single") {
    return with_flows(paper_topology(name, false, 1), TrafficProtocol::greedy, 0.0);
  }
  if (name == "paper-table3-four") {
    return with_flows(paper_topology(name, true, 1), TrafficProtocol::greedy, 0.0);
  }
  if (name == "paper-table4-single") {
    return with_flows(paper_topology(name, false, 2), TrafficProtocol::cbr, 23.1);
  }
  if (name == "paper-table4-four") {
    return with_flows(paper_topology(name, true, 2), TrafficProtocol::cbr, 23.1);
  }
  throw Error(Errc::not_found, "no built-in scenario named '" + name + "'");
}

}  // namespace nhsim

#endif  // NHSIM_SCENARIO_HPP
