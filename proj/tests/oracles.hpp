#ifndef NHSIM_TESTS_ORACLES_HPP
#define NHSIM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "nhsim/control_plane.hpp"

namespace nhsim::test {

// Brute-force registry filter, kept independent of NfRegistry::discover.
inline std::vector<NfProfile> discover_oracle(const std::vector<NfProfile>& all, NfType type,
                                              std::optional<SNssai> snssai) {
  std::vector<NfProfile> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const NfProfile& p) {
    return p.nf_type == type && (!snssai || p.snssai == snssai);
  });
  return out;
}

// Max-min water level by fixed-point iteration: hand out the remaining
// capacity in equal shares, freeze whoever hits their cap, repeat.
inline std::vector<double> waterfill_oracle(double capacity, std::vector<double> caps) {
  std::vector<double> rates(caps.size(), 0.0);
  std::vector<bool> frozen(caps.size(), false);
  double remaining = capacity;
  for (;;) {
    int open = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (!frozen[i]) ++open;
    }
    if (open == 0 || remaining <= 1e-15) break;
    double share = remaining / open;
    bool froze_any = false;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (frozen[i]) continue;
      if (caps[i] <= rates[i] + share + 1e-15) {
        remaining -= caps[i] - rates[i];
        rates[i] = caps[i];
        frozen[i] = true;
        froze_any = true;
      }
    }
    if (!froze_any) {
      for (std::size_t i = 0; i < caps.size(); ++i) {
        if (!frozen[i]) rates[i] += share;
      }
      remaining = 0.0;
      break;
    }
  }
  return rates;
}

// Token bucket replayed in small fixed steps, independent of the lazy-refill
// implementation.
struct BucketOracle {
  double rate_bytes_per_sec;
  double burst_bytes;
  double tokens;

  explicit BucketOracle(double rate_mbps, double burst)
      : rate_bytes_per_sec(rate_mbps * 1e6 / 8.0), burst_bytes(burst), tokens(burst) {}

  // advance time then try to take one packet
  bool offer(double dt_s, double size_bytes) {
    tokens = std::min(burst_bytes, tokens + dt_s * rate_bytes_per_sec);
    if (tokens >= size_bytes) {
      tokens -= size_bytes;
      return true;
    }
    return false;
  }
};

}  // namespace nhsim::test

#endif  // NHSIM_TESTS_ORACLES_HPP
