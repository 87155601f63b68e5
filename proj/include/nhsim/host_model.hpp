#ifndef NHSIM_HOST_MODEL_HPP
#define NHSIM_HOST_MODEL_HPP

#include <algorithm>
#include <string>

#include "nhsim/errors.hpp"

namespace nhsim {

// CPU capacity model for a core-network host. Each slice's user plane is one
// serial process pinned to at most one core; running several processes at once
// costs a global efficiency factor eta, and each additional flow inside a
// process shaves per-flow overhead c off the base rate K0. CBR (UDP-like)
// traffic is cheaper to push than greedy (TCP-like) traffic by gamma.
//
// Defaults reproduce the reference testbed: a two-core VM that tops out at
// 177.2 Mbps with one slice and eight flows, 201.4 Mbps with one slice and
// four flows, and 286.7 Mbps when the same eight flows are spread over four
// slices.
struct HostResource {
  std::string host_id;
  int cores = 2;
  double per_core_rate_k0_mbps = 233.26;
  double per_flow_overhead_c = 0.039542;
  double multiproc_efficiency_eta = 0.6631;
  double udp_rate_multiplier_gamma = 1.0313;

  friend bool operator==(const HostResource&, const HostResource&) = default;
};

inline void check_host(const HostResource& h) {
  if (h.host_id.empty()) throw Error(Errc::validation, "host_id: must be non-empty");
  if (h.cores < 1) throw Error(Errc::validation, h.host_id + ": cores must be positive");
  if (!(h.per_core_rate_k0_mbps > 0)) {
    throw Error(Errc::validation, h.host_id + ": per_core_rate_k0_mbps must be positive");
  }
  if (h.per_flow_overhead_c < 0) {
    throw Error(Errc::validation, h.host_id + ": per_flow_overhead_c must be nonnegative");
  }
  if (!(h.multiproc_efficiency_eta > 0) || h.multiproc_efficiency_eta > 1) {
    throw Error(Errc::validation, h.host_id + ": multiproc_efficiency_eta must be in (0,1]");
  }
  if (!(h.udp_rate_multiplier_gamma > 0)) {
    throw Error(Errc::validation, h.host_id + ": udp_rate_multiplier_gamma must be positive");
  }
}

enum class TrafficProtocol { greedy, cbr };

inline const char* protocol_name(TrafficProtocol p) {
  return p == TrafficProtocol::greedy ? "greedy" : "cbr";
}

// Fraction of one core available to each of n concurrently active slice
// processes. A single process never exceeds one core; with competition the
// fair share is paid down by the multiprocessing efficiency factor.
inline double core_share(const HostResource& host, int n_active_processes) {
  if (n_active_processes < 1) {
    throw Error(Errc::precondition, "core_share: need at least one active process");
  }
  double fair = std::min(1.0, static_cast<double>(host.cores) / n_active_processes);
  return n_active_processes == 1 ? fair : fair * host.multiproc_efficiency_eta;
}

// Throughput of one full core running a slice process with the given number
// of flows, in Mbps. Scale by core_share for the process's actual capacity.
inline double effective_service_rate(const HostResource& host, int flows_in_process,
                                     TrafficProtocol protocol) {
  double rate = host.per_core_rate_k0_mbps / (1.0 + host.per_flow_overhead_c * flows_in_process);
  if (protocol == TrafficProtocol::cbr) rate *= host.udp_rate_multiplier_gamma;
  return rate;
}

// Capacity in Mbps of one slice process given the contention level.
inline double process_capacity_mbps(const HostResource& host, int n_active_processes,
                                    int flows_in_process, TrafficProtocol protocol) {
  return core_share(host, n_active_processes) *
         effective_service_rate(host, flows_in_process, protocol);
}

}  // namespace nhsim

#endif  // NHSIM_HOST_MODEL_HPP
