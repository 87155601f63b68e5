#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "nhsim/control_plane.hpp"
#include "nhsim/simulation.hpp"
#include "oracles.hpp"

using namespace nhsim;
using namespace nhsim::test;

// ---------------------------------------------------------------------------
// NRF

TEST_CASE("nrf registration makes a profile discoverable under its slice") {
  NfRegistry nrf;
  nrf.register_profile({"smf-1", NfType::SMF, validate_plmn("001", "01"), make_snssai(1, 2), "core"});
  auto found = nrf.discover(NfType::SMF, make_snssai(1, 2));
  REQUIRE(found.size() == 1);
  REQUIRE(found[0].instance_id == "smf-1");
}

TEST_CASE("nrf rejects duplicate instance ids") {
  NfRegistry nrf;
  NfProfile p{"smf-1", NfType::SMF, validate_plmn("001", "01"), make_snssai(1, 1), "core"};
  nrf.register_profile(p);
  REQUIRE_THROWS_AS(nrf.register_profile(p), Error);
}

TEST_CASE("nrf enforces the snssai shape per NF type") {
  NfRegistry nrf;
  REQUIRE_THROWS_WITH(
      nrf.register_profile({"upf-x", NfType::UPF, validate_plmn("001", "01"), std::nullopt, "core"}),
      Catch::Matchers::ContainsSubstring("snssai"));
  REQUIRE_THROWS_AS(
      nrf.register_profile({"amf-x", NfType::AMF, validate_plmn("001", "01"), make_snssai(1, 1), "core"}),
      Error);
}

TEST_CASE("nrf discover filters by type and slice in registration order") {
  NfRegistry nrf;
  for (int sd = 1; sd <= 4; ++sd) {
    nrf.register_profile({"smf-" + std::to_string(sd), NfType::SMF, validate_plmn("001", "01"),
                          make_snssai(1, sd), "core"});
  }
  auto found = nrf.discover(NfType::SMF, make_snssai(1, 3));
  REQUIRE(found.size() == 1);
  REQUIRE(found[0].instance_id == "smf-3");
  REQUIRE(nrf.discover(NfType::PCF, make_snssai(1, 9)).empty());
}

TEST_CASE("the architecture exposes a single shared AMF") {
  NeutralHost nh = make_nh();
  auto amfs = nh.nrf().discover(NfType::AMF);
  REQUIRE(amfs.size() == 1);
  REQUIRE(amfs[0].instance_id == "amf");
}

TEST_CASE("nrf discover equals a brute-force filter on randomized registries") {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    NfRegistry nrf;
    int n = 1 + static_cast<int>(rng.below(30));
    for (int i = 0; i < n; ++i) {
      NfType type = static_cast<NfType>(rng.below(8));
      std::optional<SNssai> snssai;
      if (type == NfType::SMF || type == NfType::UPF) {
        snssai = make_snssai(1, 1 + static_cast<std::int64_t>(rng.below(5)));
      } else if (type != NfType::AMF && type != NfType::NRF && rng.below(2) == 0) {
        snssai = make_snssai(1, 1 + static_cast<std::int64_t>(rng.below(5)));
      }
      nrf.register_profile({"nf-" + std::to_string(i), type, validate_plmn("001", "01"), snssai, "core"});
    }
    for (int q = 0; q < 10; ++q) {
      NfType type = static_cast<NfType>(rng.below(8));
      std::optional<SNssai> snssai;
      if (rng.below(2) == 0) snssai = make_snssai(1, 1 + static_cast<std::int64_t>(rng.below(5)));
      auto got = nrf.discover(type, snssai);
      auto expect = discover_oracle(nrf.profiles(), type, snssai);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].instance_id == expect[i].instance_id);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Onboarding

TEST_CASE("onboarding a non-operator client provisions slice, NFs, and subscribers") {
  NeutralHost nh = make_nh();
  auto alloc = nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 2));
  REQUIRE(alloc.slice == make_snssai(1, 1));
  REQUIRE(nh.nrf().discover(NfType::SMF, alloc.slice).size() == 1);
  REQUIRE(nh.nrf().discover(NfType::UPF, alloc.slice).size() == 1);
  REQUIRE(nh.nh_subscriber(make_supi(validate_plmn("001", "01"), "000000001")) != nullptr);
  REQUIRE(nh.nh_subscriber(make_supi(validate_plmn("001", "01"), "000000002")) != nullptr);
  REQUIRE(nh.pcf_policies().count(alloc.slice) == 1);
  for (auto& [host, gnb] : nh.gnbs()) REQUIRE(gnb.broadcasts(validate_plmn("001", "01")));
}

TEST_CASE("onboarding an operator client creates an agreement and no local subscribers") {
  NeutralHost nh = make_nh();
  nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 1));
  auto alloc = nh.onboard_client(op_client("op-a", validate_plmn("001", "02"), 2));
  REQUIRE(alloc.slice == make_snssai(1, 2));
  const auto& agreement = nh.agreements().at(validate_plmn("001", "02"));
  REQUIRE(agreement.status == AgreementStatus::active);
  REQUIRE(agreement.allowed_service_kinds == std::set<ServiceKind>{ServiceKind::authentication});
  // subscribers live in the home stub, not the NH UDM
  Supi op_sub = make_supi(validate_plmn("001", "02"), "000000001");
  REQUIRE(nh.nh_subscriber(op_sub) == nullptr);
  REQUIRE(nh.home_subscriber(op_sub) != nullptr);
}

TEST_CASE("onboarding the same plmn twice is a conflict") {
  NeutralHost nh = make_nh();
  nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 1));
  auto again = non_op_client("tenant-a2", validate_plmn("001", "01"), 1);
  REQUIRE_THROWS_AS(nh.onboard_client(again), Error);
  try {
    nh.onboard_client(again);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::conflict);
  }
}

TEST_CASE("a duplicate supi rejects the onboarding without side effects") {
  NeutralHost nh = make_nh();
  ClientDescriptor dup = non_op_client("tenant-a", validate_plmn("001", "01"), 1);
  dup.subscribers.push_back(dup.subscribers[0]);  // same msin twice
  REQUIRE_THROWS_AS(nh.onboard_client(dup), Error);
  // nothing leaked into the core
  REQUIRE(nh.clients().empty());
  REQUIRE(nh.client_by_plmn(validate_plmn("001", "01")) == nullptr);
  REQUIRE(nh.nrf().discover(NfType::SMF, make_snssai(1, 1)).empty());
}

TEST_CASE("offboarding frees the client's subscribers for re-onboarding") {
  NeutralHost nh = make_nh();
  nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 2));
  nh.offboard_client("tenant-a");
  // the same tenant comes back with the same user base, on a fresh slice
  auto alloc = nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 2));
  REQUIRE(alloc.slice == make_snssai(1, 2));
  REQUIRE(nh.nh_subscriber(make_supi(validate_plmn("001", "01"), "000000001")) != nullptr);
}

TEST_CASE("descriptor shape is enforced per client kind") {
  NeutralHost nh = make_nh();
  auto op = op_client("op-a", validate_plmn("001", "02"), 1);
  op.subscribers.push_back(subscriber(op.plmn, 9));
  REQUIRE_THROWS_WITH(nh.onboard_client(op), Catch::Matchers::ContainsSubstring("subscribers"));
  auto non_op = non_op_client("tenant-a", validate_plmn("001", "01"), 0);
  REQUIRE_THROWS_WITH(nh.onboard_client(non_op), Catch::Matchers::ContainsSubstring("subscriber"));
}

TEST_CASE("ue ip pools of distinct slices are disjoint over any onboarding sequence") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    NeutralHost nh = make_nh();
    int n = 2 + static_cast<int>(rng.below(6));
    std::vector<IpPool> pools;
    for (int i = 0; i < n; ++i) {
      Plmn plmn = validate_plmn("001", i < 9 ? "0" + std::to_string(i + 1) : std::to_string(i + 1));
      auto alloc = rng.below(2) == 0 ? nh.onboard_client(non_op_client("c" + std::to_string(i), plmn, 1))
                                     : nh.onboard_client(op_client("c" + std::to_string(i), plmn, 1));
      pools.push_back(alloc.ue_ip_pool);
    }
    for (std::size_t a = 0; a < pools.size(); ++a) {
      for (std::size_t b = 0; b < pools.size(); ++b) {
        if (a == b) continue;
        REQUIRE(pools[a].network() != pools[b].network());
        REQUIRE_FALSE(pools[a].contains(pools[b].network() | 2));
      }
    }
  }
}

TEST_CASE("slice differentiators are never reused after offboarding") {
  NeutralHost nh = make_nh();
  auto a = nh.onboard_client(non_op_client("a", validate_plmn("001", "01"), 1));
  REQUIRE(a.slice == make_snssai(1, 1));
  nh.offboard_client("a");
  auto b = nh.onboard_client(non_op_client("b", validate_plmn("001", "03"), 1));
  REQUIRE(b.slice == make_snssai(1, 2));
}

// ---------------------------------------------------------------------------
// Registration / authentication

TEST_CASE("direct registration completes in exactly 239.9 ms with default calibration") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  const RegistrationContext* ctx = sim.context_for(sc.clients[0].subscribers[0].supi);
  REQUIRE(ctx != nullptr);
  REQUIRE(ctx->state == RegState::registered);
  REQUIRE(ctx->auth_path == AuthPath::direct);
  REQUIRE(ctx->latency().ticks() == SimTime::millis(239.9).ticks());
  REQUIRE(ctx->allowed_snssai == std::set<SNssai>{make_snssai(1, 1)});
}

TEST_CASE("roaming registration completes in exactly 262.4 ms with default calibration") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  const RegistrationContext* ctx = sim.context_for(sc.clients[1].home_subscribers[0].supi);
  REQUIRE(ctx != nullptr);
  REQUIRE(ctx->state == RegState::registered);
  REQUIRE(ctx->auth_path == AuthPath::roaming);
  REQUIRE(ctx->latency().ticks() == SimTime::millis(262.4).ticks());
}

TEST_CASE("the roaming premium is exactly four crossings worth of n32 and sepp time") {
  // holds for any link parameters, not just the defaults
  Rng rng(31337);
  for (int trial = 0; trial < 5; ++trial) {
    Scenario sc = pair_scenario();
    sc.links.ran.one_way_delay_ms = static_cast<double>(1000 + rng.below(20000)) / 1000.0;
    sc.links.n2.one_way_delay_ms = static_cast<double>(100 + rng.below(9000)) / 1000.0;
    sc.links.sbi.one_way_delay_ms = static_cast<double>(100 + rng.below(4000)) / 1000.0;
    sc.links.n32.one_way_delay_ms = static_cast<double>(500 + rng.below(20000)) / 1000.0;
    Simulation sim(sc, 0);
    sim.run_until(SimTime::seconds(2.0));
    const auto* direct = sim.context_for(sc.clients[0].subscribers[0].supi);
    const auto* roaming = sim.context_for(sc.clients[1].home_subscribers[0].supi);
    REQUIRE(direct->state == RegState::registered);
    REQUIRE(roaming->state == RegState::registered);
    SimOptions opts;
    std::int64_t expected = 4 * (sc.links.n32.one_way().ticks() + 2 * opts.auth_timing.sepp_processing.ticks());
    REQUIRE(roaming->latency().ticks() - direct->latency().ticks() == expected);
    REQUIRE(roaming->latency() > direct->latency());
  }
}

TEST_CASE("unknown msin is rejected") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  Supi ghost = make_supi(validate_plmn("001", "01"), "000000099");
  sim.schedule_registration(ghost, SimTime::zero());
  sim.run_until(SimTime::seconds(1.0));
  const auto* ctx = sim.context_for(ghost);
  REQUIRE(ctx->state == RegState::rejected);
  REQUIRE(ctx->reject_cause == "unknown-subscriber");
}

TEST_CASE("a plmn that is not onboarded is rejected as not served") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  Supi stranger = make_supi(validate_plmn("310", "410"), "000000001");
  sim.schedule_registration(stranger, SimTime::zero());
  sim.run_until(SimTime::seconds(1.0));
  const auto* ctx = sim.context_for(stranger);
  REQUIRE(ctx->state == RegState::rejected);
  REQUIRE(ctx->reject_cause == "plmn-not-served");
}

TEST_CASE("a revoked agreement rejects roaming users with the roaming cause") {
  Scenario sc = pair_scenario();
  sc.registrations.clear();
  Simulation sim(sc, 0);
  sim.core().set_agreement_status(validate_plmn("001", "02"), AgreementStatus::revoked);
  Supi op_sub = sc.clients[1].home_subscribers[0].supi;
  sim.schedule_registration(op_sub, SimTime::zero());
  sim.run_until(SimTime::seconds(1.0));
  const auto* ctx = sim.context_for(op_sub);
  REQUIRE(ctx->state == RegState::rejected);
  REQUIRE(ctx->reject_cause == "no-roaming-agreement");
  bool saw_sepp_reject = false;
  for (const auto& e : sim.trace()) {
    if (e.kind == "sepp.reject.no-agreement") saw_sepp_reject = true;
    REQUIRE(e.kind != "registration.accept");
  }
  REQUIRE(saw_sepp_reject);
}

TEST_CASE("auth path matches the client kind and credentials stay local") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  Supi direct_sub = sc.clients[0].subscribers[0].supi;
  Supi roaming_sub = sc.clients[1].home_subscribers[0].supi;
  REQUIRE(sim.context_for(direct_sub)->auth_path == AuthPath::direct);
  REQUIRE(sim.context_for(roaming_sub)->auth_path == AuthPath::roaming);

  int roaming_crossings = 0;
  for (const auto& e : sim.trace()) {
    if (e.link != "n32") continue;
    REQUIRE(e.supi.has_value());
    REQUIRE(*e.supi != direct_sub);  // non-operator credentials never cross n32
    if (*e.supi == roaming_sub && (e.kind == "auth.challenge" || e.kind == "auth.confirm")) {
      ++roaming_crossings;
    }
  }
  REQUIRE(roaming_crossings == 4);
}

// ---------------------------------------------------------------------------
// SEPP

TEST_CASE("sepp forwards allowed kinds between agreed plmns") {
  NeutralHost nh = make_nh();
  nh.onboard_client(op_client("op-a", validate_plmn("001", "02"), 1));
  auto ok = nh.sepp_check(nh.nh_plmn(), validate_plmn("001", "02"), MsgKind::auth_challenge);
  REQUIRE(ok.forwarded);
  auto no_agreement = nh.sepp_check(nh.nh_plmn(), validate_plmn("310", "410"), MsgKind::auth_challenge);
  REQUIRE_FALSE(no_agreement.forwarded);
  REQUIRE(no_agreement.cause == "no-agreement");
  auto not_allowed =
      nh.sepp_check(nh.nh_plmn(), validate_plmn("001", "02"), MsgKind::session_establish_request);
  REQUIRE_FALSE(not_allowed.forwarded);
  REQUIRE(not_allowed.cause == "service-not-allowed");
}

TEST_CASE("sepp_forward requires n32 plmn pair on the message") {
  NeutralHost nh = make_nh();
  nh.onboard_client(op_client("op-a", validate_plmn("001", "02"), 1));
  ControlMessage msg;
  msg.kind = MsgKind::auth_challenge;
  REQUIRE_THROWS_AS(nh.sepp_forward(msg), Error);
  msg.n32_plmns = {{nh.nh_plmn(), validate_plmn("001", "02")}};
  REQUIRE(nh.sepp_forward(msg).forwarded);
}

// ---------------------------------------------------------------------------
// PDU sessions

TEST_CASE("session establishment binds the slice UPF, pool address, and fresh teids") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  Supi sub = sc.clients[0].subscribers[0].supi;
  const PduSession* session = sim.core().active_session(sub);
  REQUIRE(session != nullptr);
  REQUIRE(session->slice == make_snssai(1, 1));
  REQUIRE(session->upf_id == "tenant-a-upf");
  const auto& alloc = sim.core().slices().at(session->slice);
  REQUIRE(alloc.ue_ip_pool.contains(session->ue_ip));
  // the slice binding invariant: the SMF discovered for the session's slice
  // is the one created at onboarding
  auto smfs = sim.core().nrf().discover(NfType::SMF, session->slice);
  REQUIRE(smfs.size() == 1);
  REQUIRE(smfs[0].instance_id == alloc.smf_id);
}

TEST_CASE("a second session for the same ue gets distinct identifiers") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  Supi sub = sc.clients[0].subscribers[0].supi;
  const RegistrationContext* ctx = sim.context_for(sub);
  PduSession& second = sim.core().establish_pdu_session(*ctx, make_snssai(1, 1));
  // uniqueness scan over all active sessions
  std::set<std::uint64_t> ids;
  std::set<std::uint32_t> ips;
  std::set<std::uint32_t> teids;
  for (const auto& [sid, s] : sim.core().sessions()) {
    if (s.state != SessionState::active) continue;
    REQUIRE(ids.insert(s.session_id).second);
    REQUIRE(ips.insert(s.ue_ip).second);
    if (s.upf_id == second.upf_id) REQUIRE(teids.insert(s.uplink_teid).second);
  }
}

TEST_CASE("a slice outside the allowed set is refused") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  const RegistrationContext* ctx = sim.context_for(sc.clients[0].subscribers[0].supi);
  REQUIRE_THROWS_WITH(sim.core().establish_pdu_session(*ctx, make_snssai(1, 2)),
                      Catch::Matchers::ContainsSubstring("slice-not-allowed"));
}

TEST_CASE("an unregistered ue cannot establish a session") {
  NeutralHost nh = make_nh();
  nh.onboard_client(non_op_client("tenant-a", validate_plmn("001", "01"), 1));
  RegistrationContext idle;
  idle.supi = make_supi(validate_plmn("001", "01"), "000000001");
  idle.state = RegState::idle;
  REQUIRE_THROWS_AS(nh.establish_pdu_session(idle, make_snssai(1, 1)), Error);
}

TEST_CASE("the slice ip pool eventually runs out") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  const RegistrationContext* ctx = sim.context_for(sc.clients[0].subscribers[0].supi);
  // one session exists already; the /24 holds 253 hosts
  for (int i = 0; i < 252; ++i) sim.core().establish_pdu_session(*ctx, make_snssai(1, 1));
  REQUIRE_THROWS_AS(sim.core().establish_pdu_session(*ctx, make_snssai(1, 1)), Error);
}

// ---------------------------------------------------------------------------
// Offboarding

TEST_CASE("offboarding releases sessions and stops serving the plmn") {
  Scenario sc = pair_scenario();
  Simulation sim(sc, 0);
  sim.run_until(SimTime::seconds(1.0));
  Supi sub = sc.clients[0].subscribers[0].supi;
  REQUIRE(sim.core().active_session(sub) != nullptr);
  sim.core().offboard_client("tenant-a");
  REQUIRE(sim.core().active_session(sub) == nullptr);
  REQUIRE(sim.core().nrf().discover(NfType::SMF, make_snssai(1, 1)).empty());
  sim.schedule_registration(sub, sim.now());
  sim.run_until(sim.now() + SimTime::seconds(1.0));
  REQUIRE(sim.context_for(sub)->state == RegState::rejected);
  REQUIRE(sim.context_for(sub)->reject_cause == "plmn-not-served");
}

TEST_CASE("offboarding an unknown client is not found") {
  NeutralHost nh = make_nh();
  REQUIRE_THROWS_AS(nh.offboard_client("nobody"), Error);
}

TEST_CASE("offboarding one client leaves another client's behaviour unchanged") {
  // differential run: (onboard A, onboard B, offboard A) vs (onboard B alone)
  auto trace_routes = [](bool with_a) {
    Scenario sc = scenario_skeleton(with_a ? "ab" : "b-only", 1);
    if (with_a) sc.clients.push_back(non_op_client("tenant-a", validate_plmn("001", "01"), 1));
    sc.clients.push_back(non_op_client("tenant-b", validate_plmn("001", "03"), 1));
    Supi b_sub = make_supi(validate_plmn("001", "03"), "000000001");
    sc.ue_placement[b_sub] = "ran1";
    Simulation sim(sc, 0);
    if (with_a) sim.core().offboard_client("tenant-a");
    sim.schedule_registration(b_sub, SimTime::zero());
    sim.run_until(SimTime::seconds(1.0));
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> route;
    for (const auto& e : sim.trace()) route.emplace_back(e.kind, e.src, e.dst, e.link);
    REQUIRE(sim.context_for(b_sub)->state == RegState::registered);
    REQUIRE(sim.core().active_session(b_sub) != nullptr);
    return route;
  };
  REQUIRE(trace_routes(true) == trace_routes(false));
}
