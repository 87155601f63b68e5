#ifndef NHSIM_USER_PLANE_HPP
#define NHSIM_USER_PLANE_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nhsim/errors.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"
#include "nhsim/time.hpp"

namespace nhsim {

enum class Direction : std::uint8_t { uplink, downlink };

inline const char* direction_name(Direction d) { return d == Direction::uplink ? "uplink" : "downlink"; }

enum class PacketOutcome : std::uint8_t {
  delivered,
  dropped_no_session,
  dropped_invalid_tunnel,
  dropped_rate_limited,
  dropped_queue_overflow,
};

inline const char* outcome_name(PacketOutcome o) {
  switch (o) {
    case PacketOutcome::delivered: return "delivered";
    case PacketOutcome::dropped_no_session: return "no-session";
    case PacketOutcome::dropped_invalid_tunnel: return "invalid-tunnel";
    case PacketOutcome::dropped_rate_limited: return "rate-limited";
    case PacketOutcome::dropped_queue_overflow: return "queue-overflow";
  }
  return "unknown";
}

constexpr int kPacketOutcomeCount = 5;

// One user-plane packet. Flows are referenced by dense index so packets stay
// small; names resolve through the flow table.
struct UserPacket {
  std::uint32_t flow = 0;
  std::uint32_t teid = 0;  // 0 until tunneled
  std::uint16_t size_bytes = 0;
  Direction direction = Direction::uplink;
  TrafficProtocol protocol = TrafficProtocol::greedy;
  SimTime created_at;
};

inline UserPacket make_packet(std::uint32_t flow, std::size_t size_bytes, Direction dir,
                              TrafficProtocol proto, SimTime at) {
  if (size_bytes == 0 || size_bytes > kMaxPacketBytes) {
    throw Error(Errc::validation, "size_bytes: packet must be 1.." + std::to_string(kMaxPacketBytes) + " bytes");
  }
  return UserPacket{flow, 0, static_cast<std::uint16_t>(size_bytes), dir, proto, at};
}

// Classic token bucket in bytes, refilled lazily from the sim clock.
class TokenBucket {
 public:
  TokenBucket(double rate_mbps, std::uint64_t burst_bytes)
      : rate_bytes_per_sec_(rate_mbps * 1e6 / 8.0),
        burst_(static_cast<double>(burst_bytes)),
        tokens_(static_cast<double>(burst_bytes)) {}

  bool allow(std::size_t size_bytes, SimTime now) {
    refill(now);
    if (tokens_ < static_cast<double>(size_bytes)) return false;
    tokens_ -= static_cast<double>(size_bytes);
    return true;
  }

  double tokens() const { return tokens_; }

 private:
  void refill(SimTime now) {
    if (now > last_) {
      tokens_ = std::min(burst_, tokens_ + (now - last_).to_seconds() * rate_bytes_per_sec_);
      last_ = now;
    }
  }

  double rate_bytes_per_sec_;
  double burst_;
  double tokens_;
  SimTime last_;
};

// Append-only record of what crossed one slice's tunnel interface. Aggregates
// are always kept; full entries only when packet logging is on (they get big
// fast on saturation runs).
class SliceInterfaceLog {
 public:
  struct Entry {
    SimTime at;
    std::uint32_t flow = 0;
    std::uint32_t size_bytes = 0;
    Direction direction = Direction::uplink;
    PacketOutcome outcome = PacketOutcome::delivered;
  };

  explicit SliceInterfaceLog(SNssai slice, bool keep_entries = false)
      : slice_(slice), keep_entries_(keep_entries) {}

  void record(SimTime at, const UserPacket& pkt, PacketOutcome outcome) {
    if (outcome == PacketOutcome::delivered) {
      ++delivered_pkts_;
      delivered_bits_ += std::uint64_t{pkt.size_bytes} * 8;
    }
    flows_seen_.insert(pkt.flow);
    if (keep_entries_) {
      entries_.push_back(Entry{at, pkt.flow, pkt.size_bytes, pkt.direction, outcome});
    }
  }

  SNssai slice() const { return slice_; }
  std::uint64_t delivered_pkts() const { return delivered_pkts_; }
  std::uint64_t delivered_bits() const { return delivered_bits_; }
  const std::set<std::uint32_t>& flows_seen() const { return flows_seen_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool keeps_entries() const { return keep_entries_; }

 private:
  SNssai slice_;
  bool keep_entries_;
  std::uint64_t delivered_pkts_ = 0;
  std::uint64_t delivered_bits_ = 0;
  std::set<std::uint32_t> flows_seen_;
  std::vector<Entry> entries_;
};

// Per-flow conservation ledger: every offered packet ends up delivered or in
// exactly one drop bucket.
struct FlowAccount {
  std::uint64_t offered_pkts = 0;
  std::uint64_t offered_bits = 0;
  std::uint64_t delivered_pkts = 0;
  std::uint64_t delivered_bits = 0;
  std::uint64_t delivered_bits_in_window = 0;
  std::uint64_t drops[kPacketOutcomeCount] = {0, 0, 0, 0, 0};

  std::uint64_t dropped_pkts() const {
    std::uint64_t total = 0;
    for (int i = 1; i < kPacketOutcomeCount; ++i) total += drops[i];
    return total;
  }
};

// User-plane side of one slice's UPF: owns the uplink TEIDs it allocated and
// polices each session with the slice's AMBR policy. A packet carrying a TEID
// this instance never allocated is dropped on the spot, whatever slice it
// came from.
class Upf {
 public:
  Upf() = default;
  // teid_base keeps instances in disjoint numeric ranges, so a tunnel id can
  // never be valid at two UPFs at once
  Upf(std::string instance_id, SNssai slice, std::uint32_t teid_base = 0x1000)
      : instance_id_(std::move(instance_id)), slice_(slice), next_teid_(teid_base) {}

  const std::string& instance_id() const { return instance_id_; }
  SNssai slice() const { return slice_; }

  std::uint32_t allocate_uplink_teid(std::uint64_t session_id) {
    std::uint32_t teid = next_teid_++;
    sessions_by_teid_[teid] = session_id;
    return teid;
  }

  void bind_session(std::uint64_t session_id, const QosProfile& qos) {
    if (qos.session_ambr_mbps && *qos.session_ambr_mbps > 0) {
      buckets_.emplace(session_id, TokenBucket(*qos.session_ambr_mbps, qos.burst_bytes));
    }
  }

  void release_session(std::uint64_t session_id) {
    for (auto it = sessions_by_teid_.begin(); it != sessions_by_teid_.end();) {
      if (it->second == session_id) {
        it = sessions_by_teid_.erase(it);
      } else {
        ++it;
      }
    }
    buckets_.erase(session_id);
  }

  bool owns_teid(std::uint32_t teid) const { return sessions_by_teid_.count(teid) > 0; }

  // Admission decision for a packet that reached this UPF. Consumes AMBR
  // tokens on success; queueing happens at the slice process behind it.
  std::optional<PacketOutcome> admit(const UserPacket& pkt, SimTime now) {
    auto it = sessions_by_teid_.find(pkt.teid);
    if (it == sessions_by_teid_.end()) return PacketOutcome::dropped_invalid_tunnel;
    auto bucket = buckets_.find(it->second);
    if (bucket != buckets_.end() && !bucket->second.allow(pkt.size_bytes, now)) {
      return PacketOutcome::dropped_rate_limited;
    }
    return std::nullopt;  // admitted
  }

 private:
  std::string instance_id_;
  SNssai slice_;
  std::uint32_t next_teid_ = 0x1000;
  std::unordered_map<std::uint32_t, std::uint64_t> sessions_by_teid_;
  std::unordered_map<std::uint64_t, TokenBucket> buckets_;
};

// Shared-RAN base station: broadcasts the onboarded PLMNs and stamps uplink
// packets with the tunnel of their flow's session.
class Gnb {
 public:
  Gnb() = default;
  explicit Gnb(std::string host_id) : host_id_(std::move(host_id)) {}

  const std::string& host_id() const { return host_id_; }

  void add_broadcast(const Plmn& plmn) { broadcast_.insert(plmn); }
  void remove_broadcast(const Plmn& plmn) { broadcast_.erase(plmn); }
  bool broadcasts(const Plmn& plmn) const { return broadcast_.count(plmn) > 0; }
  const std::set<Plmn>& broadcast_list() const { return broadcast_; }

  std::uint32_t allocate_downlink_teid() { return next_downlink_teid_++; }

  struct Tunnel {
    std::uint32_t uplink_teid = 0;
    std::string upf_id;
  };

  void install_forwarding(std::uint32_t flow, Tunnel t) { forwarding_[flow] = t; }
  void remove_forwarding(std::uint32_t flow) { forwarding_.erase(flow); }

  // Uplink match: stamps the session's TEID or reports no-session.
  std::optional<Tunnel> match(std::uint32_t flow) const {
    auto it = forwarding_.find(flow);
    if (it == forwarding_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::string host_id_;
  std::set<Plmn> broadcast_;
  std::uint32_t next_downlink_teid_ = 0x8000;
  std::unordered_map<std::uint32_t, Tunnel> forwarding_;
};

// Serial server for one slice's user plane: a FIFO of at most 512 packets
// drained at whatever capacity the host model currently grants the process.
class SliceProcess {
 public:
  static constexpr std::size_t kQueueLimit = 512;

  SliceProcess() = default;
  SliceProcess(std::string process_id, std::string host_id, SNssai slice)
      : process_id_(std::move(process_id)), host_id_(std::move(host_id)), slice_(slice) {}

  const std::string& process_id() const { return process_id_; }
  const std::string& host_id() const { return host_id_; }
  SNssai slice() const { return slice_; }

  int active_flows = 0;
  double capacity_greedy_mbps = 0.0;  // refreshed when flow activity changes
  double capacity_cbr_mbps = 0.0;
  bool busy = false;

  bool queue_full() const { return queue_.size() >= kQueueLimit; }
  void push(const UserPacket& pkt) { queue_.push_back(pkt); }
  bool queue_empty() const { return queue_.empty(); }
  std::size_t queue_depth() const { return queue_.size(); }
  const UserPacket& peek() const { return queue_.front(); }
  UserPacket pop() {
    UserPacket pkt = queue_.front();
    queue_.pop_front();
    return pkt;
  }

 private:
  std::string process_id_;
  std::string host_id_;
  SNssai slice_;
  std::deque<UserPacket> queue_;
};

}  // namespace nhsim

#endif  // NHSIM_USER_PLANE_HPP
