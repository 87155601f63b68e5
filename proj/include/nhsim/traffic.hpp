#ifndef NHSIM_TRAFFIC_HPP
#define NHSIM_TRAFFIC_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nhsim/errors.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"

namespace nhsim {

constexpr double kDefaultFlowStartS = 1.0;
constexpr double kDefaultFlowDurationS = 60.0;
constexpr std::uint64_t kDefaultWindowBytes = 416000;
constexpr std::size_t kCbrPacketBytes = 1250;  // 23.1 Mbps = 2310 packets/s
constexpr int kCbrBurstPackets = 8;
constexpr std::size_t kGreedyPacketBytes = kMaxPacketBytes;
constexpr double kWarmupS = 2.0;

struct FlowSpec {
  std::string flow_id;
  Supi supi;
  TrafficProtocol protocol = TrafficProtocol::greedy;
  double rate_mbps = 0.0;                          // cbr only
  std::uint64_t window_bytes = kDefaultWindowBytes;  // greedy only
  double start_s = kDefaultFlowStartS;
  double duration_s = kDefaultFlowDurationS;

  friend bool operator==(const FlowSpec&, const FlowSpec&) = default;
};

inline void check_flow_spec(const FlowSpec& f) {
  if (f.flow_id.empty()) throw Error(Errc::validation, "flow: flow_id must be non-empty");
  if (f.protocol == TrafficProtocol::cbr && !(f.rate_mbps > 0)) {
    throw Error(Errc::validation, f.flow_id + ": cbr flows require a positive rate_mbps");
  }
  if (f.protocol == TrafficProtocol::greedy && f.window_bytes == 0) {
    throw Error(Errc::validation, f.flow_id + ": greedy flows require a positive window_bytes");
  }
  if (!(f.duration_s > 0)) throw Error(Errc::validation, f.flow_id + ": duration must be positive");
  if (f.start_s < 0) throw Error(Errc::validation, f.flow_id + ": start must be nonnegative");
}

// Per-flow results. offered/delivered cover the whole flow lifetime so the
// conservation identity offered = delivered + drops holds exactly;
// throughput_mbps is measured after the warm-up window.
struct FlowMetrics {
  std::string flow_id;
  SNssai slice;
  TrafficProtocol protocol = TrafficProtocol::greedy;
  double offered_mbits = 0.0;
  double delivered_mbits = 0.0;
  double throughput_mbps = 0.0;
  double plr = 0.0;  // 1 - delivered/offered, in [0,1]
  std::map<std::string, std::uint64_t> drops_by_cause;
  std::uint64_t offered_pkts = 0;
  std::uint64_t delivered_pkts = 0;
  std::string error;  // set when the flow could not run (e.g. UE never registered)
};

// Max-min fair split of a process's capacity among greedy flows, each capped
// by its window/RTT ceiling: flows below the fair share keep their cap, the
// rest split what remains evenly.
inline std::vector<double> waterfill_rates(double capacity_mbps, const std::vector<double>& caps_mbps) {
  std::vector<double> rates(caps_mbps.size(), 0.0);
  if (caps_mbps.empty() || capacity_mbps <= 0) return rates;
  std::vector<std::size_t> order(caps_mbps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return caps_mbps[a] < caps_mbps[b]; });
  double remaining = capacity_mbps;
  std::size_t left = caps_mbps.size();
  for (std::size_t idx : order) {
    double fair = remaining / static_cast<double>(left);
    double r = std::min(caps_mbps[idx], fair);
    rates[idx] = r;
    remaining -= r;
    --left;
  }
  return rates;
}

}  // namespace nhsim

#endif  // NHSIM_TRAFFIC_HPP
