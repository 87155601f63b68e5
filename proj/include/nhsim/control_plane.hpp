#ifndef NHSIM_CONTROL_PLANE_HPP
#define NHSIM_CONTROL_PLANE_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nhsim/errors.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"
#include "nhsim/time.hpp"
#include "nhsim/user_plane.hpp"

namespace nhsim {

// ---------------------------------------------------------------------------
// Links

struct LinkProfile {
  std::string name;
  double one_way_delay_ms = 0.0;

  SimTime one_way() const { return SimTime::millis(one_way_delay_ms); }
  friend bool operator==(const LinkProfile&, const LinkProfile&) = default;
};

inline void check_link(const LinkProfile& l) {
  if (!std::isfinite(l.one_way_delay_ms) || l.one_way_delay_ms < 0) {
    throw Error(Errc::validation, "link " + l.name + ": one_way_delay_ms must be finite and nonnegative");
  }
}

// The four link classes of the evaluation topology. Defaults are the timing
// calibration that yields 239.9 ms direct / 262.4 ms roaming registration.
struct LinkSet {
  LinkProfile ran{"ran", 15.0};   // UE <-> gNB
  LinkProfile n2{"n2", 5.0};      // gNB <-> core host
  LinkProfile sbi{"sbi", 2.0};    // NF <-> NF inside a core
  LinkProfile n32{"n32", 4.625};  // SEPP <-> SEPP between cores

  friend bool operator==(const LinkSet&, const LinkSet&) = default;
};

// Fixed processing costs along the registration sequence. Each of the eleven
// control messages of one attach is charged nf_processing once, at the last
// network function that handles it; SEPPs charge sepp_processing per
// traversal instead. The quantum is expressed in clock ticks so the default
// totals come out exact.
struct AuthTiming {
  SimTime ue_compute = SimTime::millis(30.0);
  SimTime nf_processing = SimTime::from_ticks(117'900'000);  // 117.9/11 ms
  SimTime sepp_processing = SimTime::millis(0.5);

  friend bool operator==(const AuthTiming&, const AuthTiming&) = default;
};

// ---------------------------------------------------------------------------
// NF registry (NRF)

enum class NfType { AMF, AUSF, UDM, NRF, PCF, SMF, UPF, SEPP };

inline const char* nf_type_name(NfType t) {
  switch (t) {
    case NfType::AMF: return "AMF";
    case NfType::AUSF: return "AUSF";
    case NfType::UDM: return "UDM";
    case NfType::NRF: return "NRF";
    case NfType::PCF: return "PCF";
    case NfType::SMF: return "SMF";
    case NfType::UPF: return "UPF";
    case NfType::SEPP: return "SEPP";
  }
  return "?";
}

struct NfProfile {
  std::string instance_id;
  NfType nf_type = NfType::AMF;
  Plmn plmn;
  std::optional<SNssai> snssai;
  std::string host_id;
};

class NfRegistry {
 public:
  const std::string& register_profile(NfProfile profile) {
    if (profile.instance_id.empty()) {
      throw Error(Errc::validation, "nf profile: instance_id must be non-empty");
    }
    if ((profile.nf_type == NfType::SMF || profile.nf_type == NfType::UPF) && !profile.snssai) {
      throw Error(Errc::validation,
                  profile.instance_id + ": " + nf_type_name(profile.nf_type) + " profile requires an snssai");
    }
    if ((profile.nf_type == NfType::AMF || profile.nf_type == NfType::NRF) && profile.snssai) {
      throw Error(Errc::validation,
                  profile.instance_id + ": " + nf_type_name(profile.nf_type) + " profile must not carry an snssai");
    }
    if (by_id_.count(profile.instance_id)) {
      throw Error(Errc::conflict, "nf instance already registered: " + profile.instance_id);
    }
    profiles_.push_back(std::move(profile));
    by_id_[profiles_.back().instance_id] = profiles_.size() - 1;
    return profiles_.back().instance_id;
  }

  void deregister(const std::string& instance_id) {
    auto it = by_id_.find(instance_id);
    if (it == by_id_.end()) {
      throw Error(Errc::not_found, "nf instance not registered: " + instance_id);
    }
    profiles_.erase(profiles_.begin() + static_cast<std::ptrdiff_t>(it->second));
    by_id_.clear();
    for (std::size_t i = 0; i < profiles_.size(); ++i) by_id_[profiles_[i].instance_id] = i;
  }

  // Matching profiles in registration order.
  std::vector<NfProfile> discover(NfType type, std::optional<SNssai> snssai = std::nullopt) const {
    std::vector<NfProfile> out;
    for (const auto& p : profiles_) {
      if (p.nf_type != type) continue;
      if (snssai && p.snssai != snssai) continue;
      out.push_back(p);
    }
    return out;
  }

  const NfProfile* find(const std::string& instance_id) const {
    auto it = by_id_.find(instance_id);
    return it == by_id_.end() ? nullptr : &profiles_[it->second];
  }

  const std::vector<NfProfile>& profiles() const { return profiles_; }

 private:
  std::vector<NfProfile> profiles_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// ---------------------------------------------------------------------------
// Roaming

enum class AgreementStatus { pending, active, revoked };
enum class ServiceKind { authentication, session };

struct RoamingAgreement {
  Plmn nh_plmn;
  Plmn client_plmn;
  std::set<ServiceKind> allowed_service_kinds{ServiceKind::authentication};
  LinkProfile n32_link{"n32", 4.625};
  AgreementStatus status = AgreementStatus::active;
};

// ---------------------------------------------------------------------------
// Messages

enum class MsgKind : std::uint8_t {
  registration_request,
  auth_challenge,
  auth_response,
  auth_confirm,
  registration_accept,
  registration_reject,
  session_establish_request,
  session_establish_accept,
  n32_forward,
};

inline const char* msg_kind_id(MsgKind k) {
  switch (k) {
    case MsgKind::registration_request: return "registration.request";
    case MsgKind::auth_challenge: return "auth.challenge";
    case MsgKind::auth_response: return "auth.response";
    case MsgKind::auth_confirm: return "auth.confirm";
    case MsgKind::registration_accept: return "registration.accept";
    case MsgKind::registration_reject: return "registration.reject";
    case MsgKind::session_establish_request: return "session.establish.request";
    case MsgKind::session_establish_accept: return "session.establish.accept";
    case MsgKind::n32_forward: return "n32.forward";
  }
  return "?";
}

inline ServiceKind service_kind_of(MsgKind k) {
  switch (k) {
    case MsgKind::session_establish_request:
    case MsgKind::session_establish_accept:
      return ServiceKind::session;
    default:
      return ServiceKind::authentication;
  }
}

struct ControlMessage {
  MsgKind kind = MsgKind::registration_request;
  std::string src;
  std::string dst;
  std::optional<SNssai> slice;
  std::optional<Supi> supi;
  std::uint64_t nonce = 0;
  std::uint64_t response = 0;
  std::string cause;
  // set while the message rides an N32 leg
  std::optional<std::pair<Plmn, Plmn>> n32_plmns;
};

// Challenge-response over the subscriber's shared key. Routing is the point
// here, not cryptography, so a mixing hash stands in for the real thing.
inline std::uint64_t auth_response_hash(std::uint64_t nonce, const SharedKey& key) {
  std::uint64_t h = nonce ^ 0x9e3779b97f4a7c15ULL;
  for (std::uint8_t b : key) h = (h ^ b) * 0x100000001b3ULL;
  return splitmix64(h);
}

// ---------------------------------------------------------------------------
// Registration and sessions

enum class RegState { idle, authenticating, registered, rejected };
enum class AuthPath { direct, roaming };

inline const char* auth_path_name(AuthPath p) { return p == AuthPath::direct ? "direct" : "roaming"; }

struct RegistrationContext {
  Supi supi;
  Plmn serving_plmn;
  RegState state = RegState::idle;
  AuthPath auth_path = AuthPath::direct;
  std::set<SNssai> allowed_snssai;
  SimTime started_at;
  SimTime finished_at;
  std::string reject_cause;
  std::string gnb_host;
  // AUSF-side expectation for the in-flight challenge
  std::uint64_t nonce = 0;
  std::uint64_t expected_response = 0;

  SimTime latency() const { return finished_at - started_at; }
};

enum class SessionState { active, released };

struct PduSession {
  std::uint64_t session_id = 0;
  Supi supi;
  SNssai slice;
  std::uint32_t ue_ip = 0;
  std::uint32_t uplink_teid = 0;
  std::uint32_t downlink_teid = 0;
  QosProfile qos;
  SessionState state = SessionState::active;
  std::string gnb_host;
  std::string upf_id;
};

// ---------------------------------------------------------------------------
// Trace

struct TraceEntry {
  SimTime at;
  std::string kind;  // stable identifier, e.g. "registration.accept"
  std::string src;
  std::string dst;
  std::string link;  // "ran" | "n2" | "sbi" | "n32" | "local"
  std::optional<Supi> supi;
  std::optional<SNssai> slice;
};

// ---------------------------------------------------------------------------
// Operator home-core stub: AUSF + UDM + SEPP, reachable only over N32.

struct HomeCoreStub {
  Plmn plmn;
  std::string sepp_id;
  std::string ausf_id;
  std::string udm_id;
  std::map<Supi, SubscriberRecord> subscribers;
};

// ---------------------------------------------------------------------------
// Neutral host core state

constexpr int kDefaultSst = 1;

inline void check_client_descriptor(const ClientDescriptor& spec) {
  if (spec.name.empty()) throw Error(Errc::validation, "client: name must be non-empty");
  check_qos(spec.qos);
  if (spec.kind == ClientKind::operator_client) {
    if (!spec.subscribers.empty()) {
      throw Error(Errc::validation,
                  spec.name + ": operator clients must not carry subscribers in the neutral host");
    }
  } else {
    if (spec.subscribers.empty()) {
      throw Error(Errc::validation, spec.name + ": non-operator clients need at least one subscriber");
    }
    if (!spec.home_subscribers.empty()) {
      throw Error(Errc::validation, spec.name + ": home_subscribers is only valid for operator clients");
    }
    if (!spec.sepp_endpoint.empty()) {
      throw Error(Errc::validation, spec.name + ": sepp_endpoint is only valid for operator clients");
    }
  }
  for (const auto& sub : spec.kind == ClientKind::operator_client ? spec.home_subscribers
                                                                  : spec.subscribers) {
    if (!(sub.supi.plmn == spec.plmn)) {
      throw Error(Errc::validation, spec.name + ": subscriber " + sub.supi.to_string() +
                                        " does not carry the client plmn " + spec.plmn.to_string());
    }
  }
}

class NeutralHost {
 public:
  struct SeppDecision {
    bool forwarded = false;
    std::string cause;  // "no-agreement" | "service-not-allowed"
  };

  NeutralHost(HostResource core_host, std::vector<std::string> ran_host_ids,
              Plmn nh_plmn = Plmn{"999", "99"}, bool packet_logging = false)
      : core_host_(std::move(core_host)), nh_plmn_(std::move(nh_plmn)), packet_logging_(packet_logging) {
    check_host(core_host_);
    nrf_.register_profile(NfProfile{"nrf", NfType::NRF, nh_plmn_, std::nullopt, core_host_.host_id});
    nrf_.register_profile(NfProfile{"amf", NfType::AMF, nh_plmn_, std::nullopt, core_host_.host_id});
    nrf_.register_profile(NfProfile{"ausf", NfType::AUSF, nh_plmn_, std::nullopt, core_host_.host_id});
    nrf_.register_profile(NfProfile{"udm", NfType::UDM, nh_plmn_, std::nullopt, core_host_.host_id});
    nrf_.register_profile(NfProfile{"pcf", NfType::PCF, nh_plmn_, std::nullopt, core_host_.host_id});
    nrf_.register_profile(NfProfile{"sepp", NfType::SEPP, nh_plmn_, std::nullopt, core_host_.host_id});
    for (auto& host : ran_host_ids) {
      gnbs_.emplace(host, Gnb(host));
      ran_hosts_.push_back(host);
    }
  }

  const HostResource& core_host() const { return core_host_; }
  const Plmn& nh_plmn() const { return nh_plmn_; }
  const std::vector<std::string>& ran_hosts() const { return ran_hosts_; }

  NfRegistry& nrf() { return nrf_; }
  const NfRegistry& nrf() const { return nrf_; }

  const std::map<std::string, ClientRecord>& clients() const { return clients_; }
  const std::map<SNssai, SliceAllocation>& slices() const { return slices_; }
  std::map<std::string, Gnb>& gnbs() { return gnbs_; }
  std::map<std::string, Upf>& upfs() { return upfs_; }
  std::map<SNssai, SliceProcess>& processes() { return processes_; }
  const std::map<std::uint64_t, PduSession>& sessions() const { return sessions_; }
  const std::map<Plmn, RoamingAgreement>& agreements() const { return agreements_; }
  const std::map<Plmn, HomeCoreStub>& home_stubs() const { return home_stubs_; }
  const std::map<SNssai, QosProfile>& pcf_policies() const { return pcf_policies_; }

  const ClientRecord* client_by_plmn(const Plmn& plmn) const {
    auto it = plmn_to_client_.find(plmn);
    return it == plmn_to_client_.end() ? nullptr : &clients_.at(it->second);
  }

  const ClientRecord* client_by_id(const std::string& id) const {
    auto it = clients_.find(id);
    return it == clients_.end() ? nullptr : &it->second;
  }

  const SubscriberRecord* nh_subscriber(const Supi& supi) const {
    auto it = nh_udm_.find(supi);
    return it == nh_udm_.end() ? nullptr : &it->second;
  }

  const SubscriberRecord* home_subscriber(const Supi& supi) const {
    auto stub = home_stubs_.find(supi.plmn);
    if (stub == home_stubs_.end()) return nullptr;
    auto it = stub->second.subscribers.find(supi);
    return it == stub->second.subscribers.end() ? nullptr : &it->second;
  }

  // New-client configuration: allocate a slice, stand up its SMF/UPF pair on
  // the core host, install policy and routing, then wire authentication
  // according to the client type (roaming agreement + SEPP peering for
  // operators, subscriber import for everyone else).
  const SliceAllocation& onboard_client(const ClientDescriptor& spec) {
    check_client_descriptor(spec);
    if (plmn_to_client_.count(spec.plmn)) {
      throw Error(Errc::conflict, "plmn already onboarded: " + spec.plmn.to_string());
    }
    if (clients_.count(spec.name)) {
      throw Error(Errc::conflict, "client name already onboarded: " + spec.name);
    }
    // reject duplicate subscribers before touching any state
    std::set<Supi> incoming;
    for (const auto& sub : spec.kind == ClientKind::operator_client ? spec.home_subscribers
                                                                    : spec.subscribers) {
      if (all_supis_.count(sub.supi) || !incoming.insert(sub.supi).second) {
        throw Error(Errc::conflict, "supi already provisioned: " + sub.supi.to_string());
      }
    }

    SNssai slice = sd_pool_.allocate(kDefaultSst);
    std::string smf_id = spec.name + "-smf";
    std::string upf_id = spec.name + "-upf";
    nrf_.register_profile(NfProfile{smf_id, NfType::SMF, nh_plmn_, slice, core_host_.host_id});
    nrf_.register_profile(NfProfile{upf_id, NfType::UPF, nh_plmn_, slice, core_host_.host_id});

    upfs_.emplace(upf_id, Upf(upf_id, slice, 0x1000 + (next_upf_index_++ << 20)));
    processes_.emplace(slice, SliceProcess(spec.name + "-up", core_host_.host_id, slice));
    logs_.emplace(slice, SliceInterfaceLog(slice, packet_logging_));
    pcf_policies_[slice] = spec.qos;

    ClientRecord rec;
    rec.client_id = spec.name;
    rec.name = spec.name;
    rec.kind = spec.kind;
    rec.plmn = spec.plmn;
    rec.sepp_endpoint = spec.sepp_endpoint;
    rec.slice = slice;
    clients_[rec.client_id] = rec;
    plmn_to_client_[spec.plmn] = rec.client_id;

    for (auto& [host, gnb] : gnbs_) gnb.add_broadcast(spec.plmn);

    if (spec.kind == ClientKind::operator_client) {
      RoamingAgreement agreement;
      agreement.nh_plmn = nh_plmn_;
      agreement.client_plmn = spec.plmn;
      agreement.n32_link = n32_link_;
      agreements_[spec.plmn] = agreement;

      HomeCoreStub stub;
      stub.plmn = spec.plmn;
      stub.sepp_id = spec.sepp_endpoint.empty() ? spec.name + "-hsepp" : spec.sepp_endpoint;
      stub.ausf_id = spec.name + "-hausf";
      stub.udm_id = spec.name + "-hudm";
      for (auto sub : spec.home_subscribers) {
        if (sub.allowed_snssai.empty()) sub.allowed_snssai.insert(slice);
        register_unique_supi(sub.supi);
        stub.subscribers.emplace(sub.supi, std::move(sub));
      }
      home_stubs_[spec.plmn] = std::move(stub);
    } else {
      for (auto sub : spec.subscribers) {
        if (sub.allowed_snssai.empty()) sub.allowed_snssai.insert(slice);
        register_unique_supi(sub.supi);
        nh_udm_.emplace(sub.supi, std::move(sub));
      }
    }

    SliceAllocation alloc;
    alloc.slice = slice;
    alloc.client_id = rec.client_id;
    alloc.smf_id = smf_id;
    alloc.upf_id = upf_id;
    alloc.qos = spec.qos;
    alloc.ue_ip_pool = IpPool((10u << 24) | (45u << 16) | (next_pool_index_++ << 8));
    auto [it, inserted] = slices_.emplace(slice, std::move(alloc));
    (void)inserted;
    return it->second;
  }

  void offboard_client(const std::string& client_id) {
    auto cit = clients_.find(client_id);
    if (cit == clients_.end()) {
      throw Error(Errc::not_found, "client not onboarded: " + client_id);
    }
    ClientRecord rec = cit->second;
    auto sit = slices_.find(rec.slice);

    for (auto& [sid, session] : sessions_) {
      if (session.slice == rec.slice && session.state == SessionState::active) {
        release_session_locked(session);
      }
    }
    if (sit != slices_.end()) {
      nrf_.deregister(sit->second.smf_id);
      nrf_.deregister(sit->second.upf_id);
      upfs_.erase(sit->second.upf_id);
      retired_slices_.emplace(sit->first, sit->second);
      slices_.erase(sit);
    }
    // the slice process entry stays (idle); draining work may still reference it
    pcf_policies_.erase(rec.slice);

    if (rec.kind == ClientKind::operator_client) {
      auto ait = agreements_.find(rec.plmn);
      if (ait != agreements_.end()) ait->second.status = AgreementStatus::revoked;
      auto hit = home_stubs_.find(rec.plmn);
      if (hit != home_stubs_.end()) {
        for (const auto& [supi, sub] : hit->second.subscribers) all_supis_.erase(supi);
      }
    } else {
      for (auto it = nh_udm_.begin(); it != nh_udm_.end();) {
        if (it->first.plmn == rec.plmn) {
          all_supis_.erase(it->first);
          it = nh_udm_.erase(it);
        } else {
          ++it;
        }
      }
    }
    for (auto& [host, gnb] : gnbs_) gnb.remove_broadcast(rec.plmn);
    plmn_to_client_.erase(rec.plmn);
    clients_.erase(client_id);
    // the slice's sd stays marked in sd_pool_: differentiators are retired,
    // never recycled within a run
  }

  // SEPP forwarding policy. Forwarded iff an active agreement covers the
  // PLMN pair and the message's service category is allowed on N32.
  SeppDecision sepp_check(const Plmn& src_plmn, const Plmn& dst_plmn, MsgKind kind) const {
    const RoamingAgreement* agreement = nullptr;
    for (const auto& [plmn, a] : agreements_) {
      bool covers = (a.nh_plmn == src_plmn && a.client_plmn == dst_plmn) ||
                    (a.nh_plmn == dst_plmn && a.client_plmn == src_plmn);
      if (covers && a.status == AgreementStatus::active) {
        agreement = &a;
        break;
      }
    }
    if (!agreement) return SeppDecision{false, "no-agreement"};
    if (!agreement->allowed_service_kinds.count(service_kind_of(kind))) {
      return SeppDecision{false, "service-not-allowed"};
    }
    return SeppDecision{true, ""};
  }

  SeppDecision sepp_forward(const ControlMessage& msg) const {
    if (!msg.n32_plmns) {
      throw Error(Errc::validation, "sepp_forward: message lacks n32 source/destination plmns");
    }
    return sepp_check(msg.n32_plmns->first, msg.n32_plmns->second, msg.kind);
  }

  // Session setup after a successful registration: AMF discovers the slice
  // SMF, the SMF pulls the slice policy from the PCF and binds the slice UPF.
  PduSession& establish_pdu_session(const RegistrationContext& ctx, SNssai snssai) {
    if (ctx.state != RegState::registered) {
      throw Error(Errc::precondition, "ue not registered: " + ctx.supi.to_string());
    }
    if (!ctx.allowed_snssai.count(snssai)) {
      throw Error(Errc::validation, "slice-not-allowed: " + snssai.to_string() + " for " + ctx.supi.to_string());
    }
    auto smfs = nrf_.discover(NfType::SMF, snssai);
    auto upfs = nrf_.discover(NfType::UPF, snssai);
    if (smfs.empty() || upfs.empty()) {
      throw Error(Errc::not_found, "no SMF/UPF registered for slice " + snssai.to_string());
    }
    auto sit = slices_.find(snssai);
    if (sit == slices_.end()) {
      throw Error(Errc::not_found, "slice not allocated: " + snssai.to_string());
    }
    auto pit = pcf_policies_.find(snssai);
    QosProfile qos = pit == pcf_policies_.end() ? QosProfile{} : pit->second;

    PduSession session;
    session.session_id = next_session_id_++;
    session.supi = ctx.supi;
    session.slice = snssai;
    session.ue_ip = sit->second.ue_ip_pool.allocate();
    session.qos = qos;
    session.gnb_host = ctx.gnb_host;
    session.upf_id = upfs.front().instance_id;

    Upf& upf = upfs_.at(session.upf_id);
    session.uplink_teid = upf.allocate_uplink_teid(session.session_id);
    upf.bind_session(session.session_id, qos);
    session.downlink_teid = gnbs_.at(session.gnb_host.empty() ? ran_hosts_.front() : session.gnb_host)
                                .allocate_downlink_teid();

    auto [it, inserted] = sessions_.emplace(session.session_id, std::move(session));
    (void)inserted;
    return it->second;
  }

  void release_session(std::uint64_t session_id) {
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) {
      throw Error(Errc::not_found, "no such session: " + std::to_string(session_id));
    }
    release_session_locked(it->second);
  }

  const PduSession* active_session(const Supi& supi) const {
    for (const auto& [sid, s] : sessions_) {
      if (s.supi == supi && s.state == SessionState::active) return &s;
    }
    return nullptr;
  }

  SliceInterfaceLog& log_for(SNssai slice) {
    auto it = logs_.find(slice);
    if (it == logs_.end()) {
      throw Error(Errc::not_found, "no such slice: " + slice.to_string());
    }
    return it->second;
  }

  // Entries appended for one slice's tunnel interface.
  const std::vector<SliceInterfaceLog::Entry>& slice_traffic(SNssai slice) const {
    auto it = logs_.find(slice);
    if (it == logs_.end()) {
      throw Error(Errc::not_found, "no such slice: " + slice.to_string());
    }
    return it->second.entries();
  }

  const std::map<SNssai, SliceInterfaceLog>& logs() const { return logs_; }
  const LinkProfile& n32_link() const { return n32_link_; }
  void set_n32_link(LinkProfile l) { n32_link_ = std::move(l); }

  void set_agreement_status(const Plmn& client_plmn, AgreementStatus status) {
    auto it = agreements_.find(client_plmn);
    if (it == agreements_.end()) {
      throw Error(Errc::not_found, "no roaming agreement for " + client_plmn.to_string());
    }
    it->second.status = status;
  }

 private:
  void register_unique_supi(const Supi& supi) {
    if (!all_supis_.insert(supi).second) {
      throw Error(Errc::conflict, "supi already provisioned: " + supi.to_string());
    }
  }

  void release_session_locked(PduSession& session) {
    if (session.state == SessionState::released) return;
    session.state = SessionState::released;
    auto uit = upfs_.find(session.upf_id);
    if (uit != upfs_.end()) uit->second.release_session(session.session_id);
  }

  HostResource core_host_;
  Plmn nh_plmn_;
  bool packet_logging_;
  std::vector<std::string> ran_hosts_;

  NfRegistry nrf_;
  SnssaiPool sd_pool_;
  std::map<std::string, ClientRecord> clients_;
  std::map<Plmn, std::string> plmn_to_client_;
  std::map<SNssai, SliceAllocation> slices_;
  std::map<SNssai, SliceAllocation> retired_slices_;
  std::map<SNssai, QosProfile> pcf_policies_;
  std::map<Supi, SubscriberRecord> nh_udm_;
  std::set<Supi> all_supis_;
  std::map<Plmn, RoamingAgreement> agreements_;
  std::map<Plmn, HomeCoreStub> home_stubs_;
  std::map<std::string, Gnb> gnbs_;
  std::map<std::string, Upf> upfs_;
  std::map<SNssai, SliceProcess> processes_;
  std::map<SNssai, SliceInterfaceLog> logs_;
  std::map<std::uint64_t, PduSession> sessions_;
  LinkProfile n32_link_{"n32", 4.625};
  std::uint64_t next_session_id_ = 1;
  std::uint32_t next_pool_index_ = 1;
  std::uint32_t next_upf_index_ = 0;
};

}  // namespace nhsim

#endif  // NHSIM_CONTROL_PLANE_HPP
