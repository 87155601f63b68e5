#ifndef NHSIM_SIMULATION_HPP
#define NHSIM_SIMULATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "nhsim/control_plane.hpp"
#include "nhsim/event_queue.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"
#include "nhsim/rng.hpp"
#include "nhsim/scenario.hpp"
#include "nhsim/traffic.hpp"
#include "nhsim/user_plane.hpp"

namespace nhsim {

struct SimOptions {
  bool packet_logging = false;
  double service_jitter = 0.10;  // packet service times vary uniformly by +-10%
  AuthTiming auth_timing;

  friend bool operator==(const SimOptions&, const SimOptions&) = default;
};

struct AuthSample {
  Supi supi;
  AuthPath path = AuthPath::direct;
  bool registered = false;
  std::string reject_cause;
  std::int64_t latency_ticks = 0;
  double latency_ms = 0.0;
};

struct SliceTrafficSummary {
  std::uint64_t delivered_pkts = 0;
  std::uint64_t delivered_bits = 0;
  std::set<std::uint32_t> flows_seen;
  std::vector<SliceInterfaceLog::Entry> entries;  // populated when packet logging is on
};

struct RunResult {
  std::string scenario_name;
  int run_index = 0;
  std::uint64_t seed = 0;
  std::vector<FlowMetrics> flows;
  std::vector<AuthSample> auth_samples;
  std::vector<TraceEntry> trace;
  std::map<std::string, std::uint64_t> drop_histogram;  // cause -> packets
  std::map<SNssai, SliceTrafficSummary> slice_traffic;
  std::uint64_t events_dispatched = 0;
};

// ---------------------------------------------------------------------------
// One seeded execution of a scenario: owns the clock, the neutral-host state,
// the traffic sources, and every per-run counter. Strictly single-threaded;
// independent runs share nothing.

class Simulation {
  // Registration sequence stages. Each control message is charged
  // nf_processing once, at the last NF that handles it; SEPPs charge
  // sepp_processing per traversal. Eleven NF charges happen on the accept
  // path, which together with the link budget fixes the attach latency.
  enum class RegStage : std::uint8_t {
    gnb_got_request,
    amf_got_request,
    ausf_got_challenge_req,
    udm_got_challenge_req,
    ausf_got_vector,
    amf_got_challenge,
    gnb_got_challenge,
    ue_got_challenge,
    gnb_got_response,
    amf_got_response,
    ausf_got_confirm,
    amf_got_result,
    gnb_got_accept,
    ue_got_accept,
    // roaming reroutes through the SEPPs
    vsepp_out_challenge,
    hsepp_in_challenge,
    hsepp_out_vector,
    vsepp_in_vector,
    vsepp_out_confirm,
    hsepp_in_confirm,
    hsepp_out_result,
    vsepp_in_result,
    // rejection plumbing
    amf_got_sepp_reject,
    ausf_got_udm_reject,
    hsepp_out_reject,
    vsepp_in_reject,
    amf_got_auth_reject,
    gnb_got_reject,
    ue_got_reject,
  };

  struct EvRegHop {
    std::uint32_t reg = 0;
    RegStage stage = RegStage::gnb_got_request;
  };
  struct EvFlowStart {
    std::uint32_t flow = 0;
  };
  struct EvFlowStop {
    std::uint32_t flow = 0;
  };
  struct EvEmit {
    std::uint32_t flow = 0;
    std::uint32_t gen = 0;
  };
  struct EvUpfArrival {
    std::uint32_t flow = 0;
    std::uint32_t teid = 0;
    std::uint16_t count = 1;
    SimTime created_at;
  };
  struct EvServiceDone {
    std::uint32_t process = 0;
  };
  struct EvReallocate {};

  using Ev = std::variant<EvRegHop, EvFlowStart, EvFlowStop, EvEmit, EvUpfArrival, EvServiceDone,
                          EvReallocate>;

  struct RegFlow {
    Supi supi;
    std::string gnb_host;
    bool roaming = false;
    std::string reject_cause;
    std::uint32_t ctx = 0;  // index into contexts_
  };

  struct FlowRt {
    FlowSpec spec;
    std::uint32_t index = 0;
    bool active = false;   // source is emitting
    bool bound = false;    // has a live session binding
    std::string error;
    SNssai slice{};
    std::uint64_t session_id = 0;
    std::uint32_t uplink_teid = 0;
    Upf* upf = nullptr;
    std::uint32_t process = 0;  // index into proc_list_
    std::string gnb_host;
    FlowAccount account;
    // emission pacing
    double rate_mbps = 0.0;  // current emission rate (cbr: fixed, greedy: allocated)
    double interval_s = 0.0;
    SimTime emit_anchor;
    std::uint64_t emit_k = 0;
    std::uint32_t emit_gen = 0;
    std::uint64_t cbr_pkt_budget = 0;  // exactly rate * duration worth of packets
    SimTime start_at, end_at, window_start, window_end;
  };

 public:
  Simulation(const Scenario& scenario, int run_index, SimOptions opts = {})
      : scenario_(scenario),
        opts_(opts),
        run_index_(run_index),
        seed_(scenario.seed + static_cast<std::uint64_t>(run_index)),
        rng_(seed_),
        nh_(scenario.core_host(), scenario.ran_host_ids(), Plmn{"999", "99"}, opts.packet_logging) {
    nh_.set_n32_link(scenario_.links.n32);
    for (const auto& client : scenario_.clients) nh_.onboard_client(client);

    for (const auto& reg : scenario_.registrations) {
      schedule_registration(reg.supi, SimTime::seconds(reg.time_s));
    }

    flows_.reserve(scenario_.flows.size());
    for (const auto& spec : scenario_.flows) {
      FlowRt rt;
      rt.spec = spec;
      rt.index = static_cast<std::uint32_t>(flows_.size());
      rt.start_at = SimTime::seconds(spec.start_s);
      rt.end_at = SimTime::seconds(spec.start_s + spec.duration_s);
      double warm = spec.duration_s > kWarmupS ? kWarmupS : 0.0;
      rt.window_start = SimTime::seconds(spec.start_s + warm);
      rt.window_end = rt.end_at;
      flows_.push_back(std::move(rt));
      queue_.schedule(flows_.back().start_at, EvFlowStart{flows_.back().index});
      queue_.schedule(flows_.back().end_at, EvFlowStop{flows_.back().index});
    }

    rebuild_process_list();
  }

  NeutralHost& core() { return nh_; }
  const NeutralHost& core() const { return nh_; }
  SimTime now() const { return queue_.now(); }

  void schedule_registration(const Supi& supi, SimTime at) {
    RegFlow rf;
    rf.supi = supi;
    auto placed = scenario_.ue_placement.find(supi);
    rf.gnb_host = placed != scenario_.ue_placement.end()
                      ? placed->second
                      : (nh_.ran_hosts().empty() ? std::string() : nh_.ran_hosts().front());
    RegistrationContext ctx;
    ctx.supi = supi;
    ctx.serving_plmn = nh_.nh_plmn();
    ctx.state = RegState::idle;
    ctx.started_at = at;
    ctx.gnb_host = rf.gnb_host;
    rf.ctx = static_cast<std::uint32_t>(contexts_.size());
    contexts_.push_back(ctx);
    ctx_by_supi_[supi] = rf.ctx;
    std::uint32_t reg_index = static_cast<std::uint32_t>(regs_.size());
    regs_.push_back(std::move(rf));
    queue_.schedule(at + scenario_.links.ran.one_way(), Ev{EvRegHop{reg_index, RegStage::gnb_got_request}});
  }

  const RegistrationContext* context_for(const Supi& supi) const {
    auto it = ctx_by_supi_.find(supi);
    return it == ctx_by_supi_.end() ? nullptr : &contexts_[it->second];
  }

  const std::vector<RegistrationContext>& contexts() const { return contexts_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  void run_until(SimTime t) {
    events_dispatched_ += queue_.run_until(t, [this](const EventQueue<Ev>::Event& ev) { dispatch(ev.payload); });
  }

  void drain() {
    events_dispatched_ += queue_.drain([this](const EventQueue<Ev>::Event& ev) { dispatch(ev.payload); });
  }

  RunResult run() {
    run_until(SimTime::seconds(scenario_.duration_s));
    drain();
    return finalize();
  }

  RunResult finalize() {
    RunResult out;
    out.scenario_name = scenario_.name;
    out.run_index = run_index_;
    out.seed = seed_;
    out.events_dispatched = events_dispatched_;
    out.trace = trace_;
    for (const auto& ctx : contexts_) {
      if (ctx.state != RegState::registered && ctx.state != RegState::rejected) continue;
      AuthSample s;
      s.supi = ctx.supi;
      s.path = ctx.auth_path;
      s.registered = ctx.state == RegState::registered;
      s.reject_cause = ctx.reject_cause;
      s.latency_ticks = ctx.latency().ticks();
      s.latency_ms = ctx.latency().to_millis();
      out.auth_samples.push_back(std::move(s));
    }
    for (const auto& rt : flows_) {
      FlowMetrics m;
      m.flow_id = rt.spec.flow_id;
      m.slice = rt.slice;
      m.protocol = rt.spec.protocol;
      m.error = rt.error;
      m.offered_pkts = rt.account.offered_pkts;
      m.delivered_pkts = rt.account.delivered_pkts;
      m.offered_mbits = static_cast<double>(rt.account.offered_bits) / 1e6;
      m.delivered_mbits = static_cast<double>(rt.account.delivered_bits) / 1e6;
      double window_s = (rt.window_end - rt.window_start).to_seconds();
      m.throughput_mbps = window_s > 0
                              ? static_cast<double>(rt.account.delivered_bits_in_window) / 1e6 / window_s
                              : 0.0;
      m.plr = rt.account.offered_pkts == 0
                  ? 0.0
                  : 1.0 - static_cast<double>(rt.account.delivered_pkts) /
                              static_cast<double>(rt.account.offered_pkts);
      for (int i = 1; i < kPacketOutcomeCount; ++i) {
        if (rt.account.drops[i] > 0) {
          m.drops_by_cause[outcome_name(static_cast<PacketOutcome>(i))] = rt.account.drops[i];
          out.drop_histogram[outcome_name(static_cast<PacketOutcome>(i))] += rt.account.drops[i];
        }
      }
      out.flows.push_back(std::move(m));
    }
    for (const auto& [slice, log] : nh_.logs()) {
      SliceTrafficSummary s;
      s.delivered_pkts = log.delivered_pkts();
      s.delivered_bits = log.delivered_bits();
      s.flows_seen = log.flows_seen();
      if (log.keeps_entries()) s.entries = log.entries();
      out.slice_traffic.emplace(slice, std::move(s));
    }
    return out;
  }

  // Name of the flow at a dense index, for resolving log entries.
  const std::string& flow_name(std::uint32_t index) const { return flows_.at(index).spec.flow_id; }

  // Rate currently granted to a flow's source (greedy: max-min allocation).
  double allocated_rate_mbps(std::uint32_t index) const { return flows_.at(index).rate_mbps; }

  // Tears down the tunnel binding of every flow riding the session, then
  // releases it in the core. Sources keep emitting until their stop time;
  // their packets now die at the gNB as no-session drops.
  void release_session(std::uint64_t session_id) {
    for (auto& rt : flows_) {
      if (rt.session_id != session_id || !rt.bound) continue;
      if (!rt.gnb_host.empty()) nh_.gnbs().at(rt.gnb_host).remove_forwarding(rt.index);
      rt.bound = false;
      rt.upf = nullptr;
      if (rt.active) {
        proc_list_[rt.process]->active_flows -= 1;
        request_reallocation();
      }
    }
    nh_.release_session(session_id);
  }

  // Onboarding while the clock runs; the new slice process joins the
  // scheduler without disturbing existing indices.
  const SliceAllocation& onboard_client(const ClientDescriptor& spec) {
    const SliceAllocation& alloc = nh_.onboard_client(spec);
    if (!proc_index_.count(alloc.slice)) {
      proc_index_[alloc.slice] = static_cast<std::uint32_t>(proc_list_.size());
      proc_list_.push_back(&nh_.processes().at(alloc.slice));
    }
    return alloc;
  }

  // Offboarding while the clock runs: unbind the client's flows first so no
  // runtime state points at the NFs being torn down.
  void offboard_client(const std::string& client_id) {
    const ClientRecord* rec = nh_.client_by_id(client_id);
    if (rec) {
      std::vector<std::uint64_t> to_release;
      for (const auto& [sid, s] : nh_.sessions()) {
        if (s.slice == rec->slice && s.state == SessionState::active) to_release.push_back(sid);
      }
      for (std::uint64_t sid : to_release) release_session(sid);
    }
    nh_.offboard_client(client_id);
  }

 private:
  // ------------------------------------------------------------------ trace
  void record(const char* kind, std::string src, std::string dst, const char* link,
              std::optional<Supi> supi = std::nullopt, std::optional<SNssai> slice = std::nullopt) {
    TraceEntry e;
    e.at = queue_.now();
    e.kind = kind;
    e.src = std::move(src);
    e.dst = std::move(dst);
    e.link = link;
    e.supi = std::move(supi);
    e.slice = std::move(slice);
    trace_.push_back(std::move(e));
  }

  std::string ue_name(const Supi& supi) const { return "ue-" + supi.to_string(); }
  std::string gnb_name(const std::string& host) const { return "gnb-" + host; }
  std::string home_nf(const char* nf, const Plmn& plmn) const {
    return std::string(nf) + "@" + plmn.to_string();
  }
  // the operator names its own SEPP endpoint at onboarding
  std::string home_sepp_name(const Plmn& plmn) const {
    auto it = nh_.home_stubs().find(plmn);
    return it != nh_.home_stubs().end() ? it->second.sepp_id : home_nf("sepp", plmn);
  }

  // ------------------------------------------------------------- dispatcher
  void dispatch(const Ev& ev) {
    std::visit([this](const auto& e) { handle(e); }, ev);
  }

  void next_hop(std::uint32_t reg, RegStage stage, SimTime charge, SimTime link) {
    queue_.schedule(queue_.now() + charge + link, Ev{EvRegHop{reg, stage}});
  }

  // Registration message walk. Stage handlers fire when the message arrives
  // somewhere; they record the hop, apply the local processing charge, and
  // schedule the next arrival.
  void handle(const EvRegHop& hop) {
    RegFlow& rf = regs_[hop.reg];
    RegistrationContext& ctx = contexts_[rf.ctx];
    const Supi& supi = rf.supi;
    const SimTime p_nf = opts_.auth_timing.nf_processing;
    const SimTime p_sepp = opts_.auth_timing.sepp_processing;
    const SimTime d_ran = scenario_.links.ran.one_way();
    const SimTime d_n2 = scenario_.links.n2.one_way();
    const SimTime d_sbi = scenario_.links.sbi.one_way();
    const SimTime d_n32 = scenario_.links.n32.one_way();
    const SimTime local = SimTime::zero();
    const ClientRecord* client = nh_.client_by_plmn(supi.plmn);
    const Plmn home = supi.plmn;

    switch (hop.stage) {
      case RegStage::gnb_got_request: {
        record("registration.request", ue_name(supi), gnb_name(rf.gnb_host), "ran", supi);
        ctx.state = RegState::authenticating;
        next_hop(hop.reg, RegStage::amf_got_request, p_nf, d_n2);
        break;
      }
      case RegStage::amf_got_request: {
        record("registration.request", gnb_name(rf.gnb_host), "amf", "n2", supi);
        bool served = client != nullptr && !rf.gnb_host.empty();
        if (served) {
          auto git = nh_.gnbs().find(rf.gnb_host);
          served = git != nh_.gnbs().end() && git->second.broadcasts(supi.plmn);
        }
        if (!served) {
          rf.reject_cause = "plmn-not-served";
          next_hop(hop.reg, RegStage::gnb_got_reject, p_nf, d_n2);
          break;
        }
        rf.roaming = client->kind == ClientKind::operator_client;
        ctx.auth_path = rf.roaming ? AuthPath::roaming : AuthPath::direct;
        if (rf.roaming) {
          next_hop(hop.reg, RegStage::vsepp_out_challenge, p_nf, d_sbi);
        } else {
          next_hop(hop.reg, RegStage::ausf_got_challenge_req, p_nf, d_sbi);
        }
        break;
      }

      // --- challenge acquisition, SEPP legs (roaming only) ---
      case RegStage::vsepp_out_challenge: {
        record("auth.challenge", "amf", "sepp", "sbi", supi);
        auto decision = nh_.sepp_check(nh_.nh_plmn(), home, MsgKind::auth_challenge);
        if (!decision.forwarded) {
          record(("sepp.reject." + decision.cause).c_str(), "sepp", "amf", "sbi", supi);
          rf.reject_cause = decision.cause == "no-agreement" ? "no-roaming-agreement" : decision.cause;
          next_hop(hop.reg, RegStage::amf_got_sepp_reject, p_sepp, d_sbi);
          break;
        }
        next_hop(hop.reg, RegStage::hsepp_in_challenge, p_sepp, d_n32);
        break;
      }
      case RegStage::hsepp_in_challenge: {
        record("auth.challenge", "sepp", home_sepp_name(home), "n32", supi);
        next_hop(hop.reg, RegStage::ausf_got_challenge_req, p_sepp, local);
        break;
      }

      case RegStage::ausf_got_challenge_req: {
        if (rf.roaming) {
          record("auth.challenge", home_sepp_name(home), home_nf("ausf", home), "local", supi);
        } else {
          record("auth.challenge", "amf", "ausf", "sbi", supi);
        }
        next_hop(hop.reg, RegStage::udm_got_challenge_req, p_nf, d_sbi);
        break;
      }
      case RegStage::udm_got_challenge_req: {
        record("auth.challenge", rf.roaming ? home_nf("ausf", home) : "ausf",
               rf.roaming ? home_nf("udm", home) : "udm", "sbi", supi);
        const SubscriberRecord* sub = rf.roaming ? nh_.home_subscriber(supi) : nh_.nh_subscriber(supi);
        if (!sub) {
          rf.reject_cause = "unknown-subscriber";
          next_hop(hop.reg, RegStage::ausf_got_udm_reject, p_nf, d_sbi);
          break;
        }
        ctx.nonce = rng_.next_u64();
        ctx.expected_response = auth_response_hash(ctx.nonce, sub->shared_key);
        next_hop(hop.reg, RegStage::ausf_got_vector, p_nf, d_sbi);
        break;
      }
      case RegStage::ausf_got_vector: {
        record("auth.challenge", rf.roaming ? home_nf("udm", home) : "udm",
               rf.roaming ? home_nf("ausf", home) : "ausf", "sbi", supi);
        if (rf.roaming) {
          next_hop(hop.reg, RegStage::hsepp_out_vector, p_nf, local);
        } else {
          next_hop(hop.reg, RegStage::amf_got_challenge, p_nf, d_sbi);
        }
        break;
      }
      case RegStage::hsepp_out_vector: {
        record("auth.challenge", home_nf("ausf", home), home_sepp_name(home), "local", supi);
        next_hop(hop.reg, RegStage::vsepp_in_vector, p_sepp, d_n32);
        break;
      }
      case RegStage::vsepp_in_vector: {
        record("auth.challenge", home_sepp_name(home), "sepp", "n32", supi);
        next_hop(hop.reg, RegStage::amf_got_challenge, p_sepp, d_sbi);
        break;
      }

      case RegStage::amf_got_challenge: {
        record("auth.challenge", rf.roaming ? "sepp" : "ausf", "amf", "sbi", supi);
        next_hop(hop.reg, RegStage::gnb_got_challenge, p_nf, d_n2);
        break;
      }
      case RegStage::gnb_got_challenge: {
        record("auth.challenge", "amf", gnb_name(rf.gnb_host), "n2", supi);
        next_hop(hop.reg, RegStage::ue_got_challenge, p_nf, d_ran);
        break;
      }
      case RegStage::ue_got_challenge: {
        record("auth.challenge", gnb_name(rf.gnb_host), ue_name(supi), "ran", supi);
        // the UE holds the same shared key its home network provisioned
        next_hop(hop.reg, RegStage::gnb_got_response, opts_.auth_timing.ue_compute, d_ran);
        break;
      }
      case RegStage::gnb_got_response: {
        record("auth.response", ue_name(supi), gnb_name(rf.gnb_host), "ran", supi);
        // relay: the response is charged at the AMF, its terminal NF
        next_hop(hop.reg, RegStage::amf_got_response, SimTime::zero(), d_n2);
        break;
      }
      case RegStage::amf_got_response: {
        record("auth.response", gnb_name(rf.gnb_host), "amf", "n2", supi);
        if (rf.roaming) {
          next_hop(hop.reg, RegStage::vsepp_out_confirm, p_nf, d_sbi);
        } else {
          next_hop(hop.reg, RegStage::ausf_got_confirm, p_nf, d_sbi);
        }
        break;
      }

      // --- confirmation, SEPP legs (roaming only) ---
      case RegStage::vsepp_out_confirm: {
        record("auth.confirm", "amf", "sepp", "sbi", supi);
        next_hop(hop.reg, RegStage::hsepp_in_confirm, p_sepp, d_n32);
        break;
      }
      case RegStage::hsepp_in_confirm: {
        record("auth.confirm", "sepp", home_sepp_name(home), "n32", supi);
        next_hop(hop.reg, RegStage::ausf_got_confirm, p_sepp, local);
        break;
      }
      case RegStage::ausf_got_confirm: {
        record("auth.confirm", rf.roaming ? home_sepp_name(home) : "amf",
               rf.roaming ? home_nf("ausf", home) : "ausf", rf.roaming ? "local" : "sbi", supi);
        const SubscriberRecord* sub = rf.roaming ? nh_.home_subscriber(supi) : nh_.nh_subscriber(supi);
        std::uint64_t response = sub ? auth_response_hash(ctx.nonce, sub->shared_key) : 0;
        bool ok = sub && response == ctx.expected_response;
        if (!ok) {
          rf.reject_cause = "auth-failure";
          if (rf.roaming) {
            next_hop(hop.reg, RegStage::hsepp_out_reject, p_nf, local);
          } else {
            next_hop(hop.reg, RegStage::amf_got_auth_reject, p_nf, d_sbi);
          }
          break;
        }
        if (rf.roaming) {
          next_hop(hop.reg, RegStage::hsepp_out_result, p_nf, local);
        } else {
          next_hop(hop.reg, RegStage::amf_got_result, p_nf, d_sbi);
        }
        break;
      }
      case RegStage::hsepp_out_result: {
        record("auth.confirm", home_nf("ausf", home), home_sepp_name(home), "local", supi);
        next_hop(hop.reg, RegStage::vsepp_in_result, p_sepp, d_n32);
        break;
      }
      case RegStage::vsepp_in_result: {
        record("auth.confirm", home_sepp_name(home), "sepp", "n32", supi);
        next_hop(hop.reg, RegStage::amf_got_result, p_sepp, d_sbi);
        break;
      }
      case RegStage::amf_got_result: {
        record("auth.confirm", rf.roaming ? "sepp" : "ausf", "amf", "sbi", supi);
        next_hop(hop.reg, RegStage::gnb_got_accept, p_nf, d_n2);
        break;
      }
      case RegStage::gnb_got_accept: {
        record("registration.accept", "amf", gnb_name(rf.gnb_host), "n2", supi);
        next_hop(hop.reg, RegStage::ue_got_accept, p_nf, d_ran);
        break;
      }
      case RegStage::ue_got_accept: {
        record("registration.accept", gnb_name(rf.gnb_host), ue_name(supi), "ran", supi);
        ctx.state = RegState::registered;
        ctx.finished_at = queue_.now();
        if (client) ctx.allowed_snssai.insert(client->slice);
        establish_session_for(ctx);
        break;
      }

      // --- rejection plumbing ---
      case RegStage::amf_got_sepp_reject: {
        next_hop(hop.reg, RegStage::gnb_got_reject, p_nf, d_n2);
        break;
      }
      case RegStage::ausf_got_udm_reject: {
        record("registration.reject", rf.roaming ? home_nf("udm", home) : "udm",
               rf.roaming ? home_nf("ausf", home) : "ausf", "sbi", supi);
        if (rf.roaming) {
          next_hop(hop.reg, RegStage::hsepp_out_reject, p_nf, local);
        } else {
          next_hop(hop.reg, RegStage::amf_got_auth_reject, p_nf, d_sbi);
        }
        break;
      }
      case RegStage::hsepp_out_reject: {
        next_hop(hop.reg, RegStage::vsepp_in_reject, p_sepp, d_n32);
        break;
      }
      case RegStage::vsepp_in_reject: {
        record("registration.reject", home_sepp_name(home), "sepp", "n32", supi);
        next_hop(hop.reg, RegStage::amf_got_auth_reject, p_sepp, d_sbi);
        break;
      }
      case RegStage::amf_got_auth_reject: {
        next_hop(hop.reg, RegStage::gnb_got_reject, p_nf, d_n2);
        break;
      }
      case RegStage::gnb_got_reject: {
        record(("reject." + rf.reject_cause).c_str(), "amf", gnb_name(rf.gnb_host), "n2", supi);
        next_hop(hop.reg, RegStage::ue_got_reject, p_nf, d_ran);
        break;
      }
      case RegStage::ue_got_reject: {
        record(("reject." + rf.reject_cause).c_str(), gnb_name(rf.gnb_host), ue_name(supi), "ran", supi);
        ctx.state = RegState::rejected;
        ctx.reject_cause = rf.reject_cause;
        ctx.finished_at = queue_.now();
        break;
      }
    }
  }

  void establish_session_for(RegistrationContext& ctx) {
    const ClientRecord* client = nh_.client_by_plmn(ctx.supi.plmn);
    if (!client) return;
    auto smfs = nh_.nrf().discover(NfType::SMF, client->slice);
    std::string smf = smfs.empty() ? "smf" : smfs.front().instance_id;
    record("session.establish.request", "amf", smf, "sbi", ctx.supi, client->slice);
    nh_.establish_pdu_session(ctx, client->slice);
    record("session.establish.accept", smf, "amf", "sbi", ctx.supi, client->slice);
  }

  // --------------------------------------------------------------- traffic
  void rebuild_process_list() {
    proc_list_.clear();
    proc_index_.clear();
    for (auto& [slice, proc] : nh_.processes()) {
      proc_index_[slice] = static_cast<std::uint32_t>(proc_list_.size());
      proc_list_.push_back(&proc);
    }
  }

  void handle(const EvFlowStart& ev) {
    FlowRt& rt = flows_[ev.flow];
    const PduSession* session = nh_.active_session(rt.spec.supi);
    if (!session) {
      rt.error = "no-session";
      return;
    }
    rt.slice = session->slice;
    rt.session_id = session->session_id;
    rt.uplink_teid = session->uplink_teid;
    rt.gnb_host = session->gnb_host;
    auto uit = nh_.upfs().find(session->upf_id);
    auto pit = proc_index_.find(session->slice);
    if (uit == nh_.upfs().end() || pit == proc_index_.end()) {
      rt.error = "no-session";
      return;
    }
    rt.upf = &uit->second;
    rt.process = pit->second;
    rt.active = true;
    rt.bound = true;
    if (!rt.gnb_host.empty()) {
      nh_.gnbs().at(rt.gnb_host).install_forwarding(rt.index, Gnb::Tunnel{rt.uplink_teid, session->upf_id});
    }
    proc_list_[rt.process]->active_flows += 1;
    if (rt.spec.protocol == TrafficProtocol::cbr) {
      rt.rate_mbps = rt.spec.rate_mbps;
      rt.interval_s = static_cast<double>(kCbrBurstPackets * kCbrPacketBytes * 8) / (rt.rate_mbps * 1e6);
      rt.cbr_pkt_budget = static_cast<std::uint64_t>(std::llround(
          rt.spec.rate_mbps * 1e6 * rt.spec.duration_s / (kCbrPacketBytes * 8)));
      rt.emit_anchor = queue_.now();
      rt.emit_k = 0;
      queue_.schedule(queue_.now(), Ev{EvEmit{rt.index, rt.emit_gen}});
    }
    request_reallocation();
  }

  void handle(const EvFlowStop& ev) {
    FlowRt& rt = flows_[ev.flow];
    if (!rt.active) return;
    rt.active = false;
    if (rt.bound) {
      proc_list_[rt.process]->active_flows -= 1;
      request_reallocation();
    }
  }

  void request_reallocation() {
    if (realloc_pending_) return;
    realloc_pending_ = true;
    queue_.schedule(queue_.now(), Ev{EvReallocate{}});
  }

  // Refresh every process capacity from the host model, then re-split each
  // process's greedy budget max-min fairly among its active greedy flows.
  void handle(const EvReallocate&) {
    realloc_pending_ = false;
    const HostResource& host = nh_.core_host();
    int n_active = 0;
    for (SliceProcess* p : proc_list_) {
      if (p->active_flows > 0) ++n_active;
    }
    int share_n = std::max(1, n_active);
    for (std::size_t pi = 0; pi < proc_list_.size(); ++pi) {
      SliceProcess* p = proc_list_[pi];
      int f = p->active_flows;
      p->capacity_greedy_mbps = process_capacity_mbps(host, share_n, f, TrafficProtocol::greedy);
      p->capacity_cbr_mbps = process_capacity_mbps(host, share_n, f, TrafficProtocol::cbr);

      std::vector<std::uint32_t> greedy;
      double cbr_util = 0.0;
      for (auto& rt : flows_) {
        if (!rt.active || rt.process != pi) continue;
        if (rt.spec.protocol == TrafficProtocol::greedy) {
          greedy.push_back(rt.index);
        } else {
          cbr_util += rt.rate_mbps / p->capacity_cbr_mbps;
        }
      }
      if (greedy.empty()) continue;
      double budget = p->capacity_greedy_mbps * std::max(0.0, 1.0 - cbr_util);
      double rtt_s = 2.0 * (scenario_.links.ran.one_way() + scenario_.links.n2.one_way()).to_seconds();
      std::vector<double> caps;
      caps.reserve(greedy.size());
      for (std::uint32_t fi : greedy) {
        double cap = rtt_s > 0
                         ? static_cast<double>(flows_[fi].spec.window_bytes) * 8.0 / rtt_s / 1e6
                         : budget;
        caps.push_back(cap);
      }
      std::vector<double> rates = waterfill_rates(budget, caps);
      for (std::size_t i = 0; i < greedy.size(); ++i) {
        FlowRt& rt = flows_[greedy[i]];
        if (rt.rate_mbps == rates[i] && rt.interval_s > 0) continue;
        rt.rate_mbps = rates[i];
        ++rt.emit_gen;
        if (rt.rate_mbps <= 0) continue;
        rt.interval_s = static_cast<double>(kGreedyPacketBytes * 8) / (rt.rate_mbps * 1e6);
        rt.emit_anchor = queue_.now();
        rt.emit_k = 0;
        queue_.schedule(queue_.now(), Ev{EvEmit{rt.index, rt.emit_gen}});
      }
    }
  }

  void handle(const EvEmit& ev) {
    FlowRt& rt = flows_[ev.flow];
    if (!rt.active || ev.gen != rt.emit_gen) return;
    if (queue_.now() >= rt.end_at) return;

    int count = 1;
    if (rt.spec.protocol == TrafficProtocol::cbr) {
      std::uint64_t left = rt.cbr_pkt_budget - rt.account.offered_pkts;
      if (left == 0) return;
      count = static_cast<int>(std::min<std::uint64_t>(kCbrBurstPackets, left));
    }
    const std::size_t bytes =
        rt.spec.protocol == TrafficProtocol::cbr ? kCbrPacketBytes : kGreedyPacketBytes;
    rt.account.offered_pkts += static_cast<std::uint64_t>(count);
    rt.account.offered_bits += static_cast<std::uint64_t>(count) * bytes * 8;

    std::optional<Gnb::Tunnel> tunnel;
    if (!rt.gnb_host.empty()) tunnel = nh_.gnbs().at(rt.gnb_host).match(rt.index);
    if (!tunnel) {
      rt.account.drops[static_cast<int>(PacketOutcome::dropped_no_session)] +=
          static_cast<std::uint64_t>(count);
    } else {
      SimTime arrival = queue_.now() + scenario_.links.ran.one_way() + scenario_.links.n2.one_way();
      queue_.schedule(arrival, Ev{EvUpfArrival{rt.index, tunnel->uplink_teid,
                                               static_cast<std::uint16_t>(count), queue_.now()}});
    }

    ++rt.emit_k;
    SimTime next = rt.emit_anchor +
                   SimTime::seconds(static_cast<double>(rt.emit_k) * rt.interval_s);
    if (next < rt.end_at) queue_.schedule(next, Ev{EvEmit{rt.index, rt.emit_gen}});
  }

  void handle(const EvUpfArrival& ev) {
    FlowRt& rt = flows_[ev.flow];
    if (!rt.upf) {
      // tunnel torn down while the packets were in flight
      rt.account.drops[static_cast<int>(PacketOutcome::dropped_invalid_tunnel)] += ev.count;
      return;
    }
    const std::size_t bytes =
        rt.spec.protocol == TrafficProtocol::cbr ? kCbrPacketBytes : kGreedyPacketBytes;
    SliceProcess* proc = proc_list_[rt.process];
    SliceInterfaceLog& log = nh_.log_for(rt.slice);
    for (int i = 0; i < ev.count; ++i) {
      UserPacket pkt;
      pkt.flow = ev.flow;
      pkt.teid = ev.teid;
      pkt.size_bytes = static_cast<std::uint16_t>(bytes);
      pkt.direction = Direction::uplink;
      pkt.protocol = rt.spec.protocol;
      pkt.created_at = ev.created_at;
      auto verdict = rt.upf->admit(pkt, queue_.now());
      if (verdict) {
        rt.account.drops[static_cast<int>(*verdict)] += 1;
        if (*verdict != PacketOutcome::dropped_invalid_tunnel) log.record(queue_.now(), pkt, *verdict);
        continue;
      }
      if (proc->queue_full()) {
        rt.account.drops[static_cast<int>(PacketOutcome::dropped_queue_overflow)] += 1;
        log.record(queue_.now(), pkt, PacketOutcome::dropped_queue_overflow);
        continue;
      }
      proc->push(pkt);
      if (!proc->busy) start_service(rt.process);
    }
  }

  void start_service(std::uint32_t proc_index) {
    SliceProcess* proc = proc_list_[proc_index];
    proc->busy = true;
    const UserPacket& head = proc->peek();
    double rate_mbps = head.protocol == TrafficProtocol::cbr ? proc->capacity_cbr_mbps
                                                             : proc->capacity_greedy_mbps;
    if (rate_mbps <= 0) {
      // nothing is allocated; fall back to the host model at this activity level
      rate_mbps = effective_service_rate(nh_.core_host(), std::max(proc->active_flows, 0),
                                         head.protocol);
    }
    double service_s = static_cast<double>(head.size_bytes) * 8.0 / (rate_mbps * 1e6);
    if (opts_.service_jitter > 0) {
      service_s *= 1.0 + opts_.service_jitter * (2.0 * rng_.uniform01() - 1.0);
    }
    queue_.schedule(queue_.now() + SimTime::seconds(service_s), Ev{EvServiceDone{proc_index}});
  }

  void handle(const EvServiceDone& ev) {
    SliceProcess* proc = proc_list_[ev.process];
    if (proc->queue_empty()) {
      proc->busy = false;
      return;
    }
    UserPacket pkt = proc->pop();
    FlowRt& rt = flows_[pkt.flow];
    rt.account.delivered_pkts += 1;
    std::uint64_t bits = std::uint64_t{pkt.size_bytes} * 8;
    rt.account.delivered_bits += bits;
    if (queue_.now() >= rt.window_start && queue_.now() <= rt.window_end) {
      rt.account.delivered_bits_in_window += bits;
    }
    nh_.log_for(rt.slice).record(queue_.now(), pkt, PacketOutcome::delivered);
    if (!proc->queue_empty()) {
      start_service(ev.process);
    } else {
      proc->busy = false;
    }
  }

  Scenario scenario_;
  SimOptions opts_;
  int run_index_;
  std::uint64_t seed_;
  Rng rng_;
  NeutralHost nh_;
  EventQueue<Ev> queue_;
  std::vector<RegFlow> regs_;
  std::vector<RegistrationContext> contexts_;
  std::map<Supi, std::uint32_t> ctx_by_supi_;
  std::vector<FlowRt> flows_;
  std::vector<SliceProcess*> proc_list_;
  std::map<SNssai, std::uint32_t> proc_index_;
  std::vector<TraceEntry> trace_;
  bool realloc_pending_ = false;
  std::uint64_t events_dispatched_ = 0;
};

// Seeded repetitions, run in index order; run i uses seed scenario.seed + i.
inline std::vector<RunResult> run_scenario(const Scenario& scenario, SimOptions opts = {}) {
  std::vector<RunResult> out;
  out.reserve(static_cast<std::size_t>(scenario.runs));
  for (int i = 0; i < scenario.runs; ++i) {
    Simulation sim(scenario, i, opts);
    out.push_back(sim.run());
  }
  return out;
}

}  // namespace nhsim

#endif  // NHSIM_SIMULATION_HPP
