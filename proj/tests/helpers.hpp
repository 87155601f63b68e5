#ifndef NHSIM_TESTS_HELPERS_HPP
#define NHSIM_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "nhsim/scenario.hpp"
#include "nhsim/simulation.hpp"

namespace nhsim::test {

inline SubscriberRecord subscriber(const Plmn& plmn, int index) {
  SubscriberRecord sub;
  sub.supi = make_supi(plmn, "00000000" + std::to_string(index));
  sub.shared_key = derive_shared_key(sub.supi);
  return sub;
}

inline ClientDescriptor non_op_client(const std::string& name, const Plmn& plmn, int n_subs) {
  ClientDescriptor c;
  c.name = name;
  c.kind = ClientKind::non_operator;
  c.plmn = plmn;
  for (int i = 1; i <= n_subs; ++i) c.subscribers.push_back(subscriber(plmn, i));
  return c;
}

inline ClientDescriptor op_client(const std::string& name, const Plmn& plmn, int n_subs) {
  ClientDescriptor c;
  c.name = name;
  c.kind = ClientKind::operator_client;
  c.plmn = plmn;
  c.sepp_endpoint = name + "-hsepp";
  for (int i = 1; i <= n_subs; ++i) c.home_subscribers.push_back(subscriber(plmn, i));
  return c;
}

inline HostResource core_host() {
  HostResource h;
  h.host_id = "core";
  return h;
}

inline NeutralHost make_nh(int ran_hosts = 2, bool packet_logging = false) {
  std::vector<std::string> rans;
  for (int i = 1; i <= ran_hosts; ++i) rans.push_back("ran" + std::to_string(i));
  return NeutralHost(core_host(), rans, Plmn{"999", "99"}, packet_logging);
}

// Skeleton with the core host plus RAN hosts, no clients yet.
inline Scenario scenario_skeleton(const std::string& name, int ran_hosts = 2) {
  Scenario sc;
  sc.name = name;
  sc.seed = 7;
  sc.runs = 1;
  sc.hosts.push_back(core_host());
  for (int i = 1; i <= ran_hosts; ++i) {
    HostResource ran;
    ran.host_id = "ran" + std::to_string(i);
    ran.cores = 1;
    sc.hosts.push_back(ran);
  }
  sc.duration_s = 2.0;
  return sc;
}

// One operator client and one non-operator client, one UE each, registering
// at t = 0.
inline Scenario pair_scenario(const std::string& name = "pair") {
  Scenario sc = scenario_skeleton(name, 2);
  sc.clients.push_back(non_op_client("tenant-a", validate_plmn("001", "01"), 1));
  sc.clients.push_back(op_client("op-a", validate_plmn("001", "02"), 1));
  sc.ue_placement[sc.clients[0].subscribers[0].supi] = "ran1";
  sc.ue_placement[sc.clients[1].home_subscribers[0].supi] = "ran2";
  sc.registrations.push_back({sc.clients[0].subscribers[0].supi, 0.0});
  sc.registrations.push_back({sc.clients[1].home_subscribers[0].supi, 0.0});
  return sc;
}

// Random small multi-client scenario with mixed traffic, for isolation and
// conservation properties: 2-4 clients, 1-4 UEs each, short duration.
inline Scenario random_multi_client_scenario(Rng& rng, const std::string& name) {
  int ran_hosts = 2 + static_cast<int>(rng.below(3));
  Scenario sc = scenario_skeleton(name, ran_hosts);
  sc.seed = rng.next_u64() % 100000;
  sc.duration_s = 2.2;
  int n_clients = 2 + static_cast<int>(rng.below(3));
  int flow_counter = 1;
  for (int c = 0; c < n_clients; ++c) {
    Plmn plmn = validate_plmn("001", "0" + std::to_string(c + 2));
    int n_ues = 1 + static_cast<int>(rng.below(4));
    bool is_op = rng.below(3) == 0;
    ClientDescriptor cd = is_op ? op_client("c" + std::to_string(c), plmn, n_ues)
                                : non_op_client("c" + std::to_string(c), plmn, n_ues);
    const auto& subs = is_op ? cd.home_subscribers : cd.subscribers;
    for (const auto& sub : subs) {
      sc.ue_placement[sub.supi] = "ran" + std::to_string(1 + rng.below(static_cast<std::uint64_t>(ran_hosts)));
      sc.registrations.push_back({sub.supi, 0.0});
      FlowSpec f;
      f.flow_id = "f" + std::to_string(flow_counter++);
      f.supi = sub.supi;
      if (rng.below(2) == 0) {
        f.protocol = TrafficProtocol::cbr;
        f.rate_mbps = 0.5 + rng.uniform(0.0, 2.5);
      } else {
        f.protocol = TrafficProtocol::greedy;
        f.window_bytes = 20000 + rng.below(80000);
      }
      f.start_s = 0.4;
      f.duration_s = 1.0 + rng.uniform(0.0, 0.8);
      sc.flows.push_back(std::move(f));
    }
    sc.clients.push_back(std::move(cd));
  }
  return sc;
}

}  // namespace nhsim::test

#endif  // NHSIM_TESTS_HELPERS_HPP
