#ifndef NHSIM_IDS_HPP
#define NHSIM_IDS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nhsim/errors.hpp"
#include "nhsim/rng.hpp"

namespace nhsim {

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// MCC + MNC, digit-exact: mnc "01" and "001" are different networks.
struct Plmn {
  std::string mcc;  // exactly 3 digits
  std::string mnc;  // exactly 2 or 3 digits

  friend auto operator<=>(const Plmn&, const Plmn&) = default;
  std::string to_string() const { return mcc + "-" + mnc; }
};

inline Plmn validate_plmn(const std::string& mcc, const std::string& mnc) {
  if (mcc.size() != 3 || !all_digits(mcc)) {
    throw Error(Errc::validation, "mcc: expected exactly 3 decimal digits, got '" + mcc + "'");
  }
  if ((mnc.size() != 2 && mnc.size() != 3) || !all_digits(mnc)) {
    throw Error(Errc::validation, "mnc: expected 2 or 3 decimal digits, got '" + mnc + "'");
  }
  return Plmn{mcc, mnc};
}

// Slice identifier: 8-bit slice/service type + 24-bit slice differentiator.
struct SNssai {
  std::uint8_t sst = 0;
  std::uint32_t sd = 0;  // <= 0xFFFFFF

  friend auto operator<=>(const SNssai&, const SNssai&) = default;
  std::string to_string() const { return std::to_string(sst) + "-" + std::to_string(sd); }
};

inline SNssai make_snssai(int sst, std::int64_t sd) {
  if (sst < 0 || sst > 0xFF) {
    throw Error(Errc::validation, "sst: out of 8-bit range: " + std::to_string(sst));
  }
  if (sd < 0 || sd > 0xFFFFFF) {
    throw Error(Errc::validation, "sd: out of 24-bit range: " + std::to_string(sd));
  }
  return SNssai{static_cast<std::uint8_t>(sst), static_cast<std::uint32_t>(sd)};
}

// Tracks which (sst, sd) pairs exist within one neutral-host instance,
// including retired ones: a differentiator is never handed out twice.
class SnssaiPool {
 public:
  bool contains(SNssai s) const {
    auto it = used_.find(s.sst);
    if (it == used_.end()) return false;
    const auto& bits = it->second;
    std::size_t word = s.sd / 64, bit = s.sd % 64;
    return word < bits.size() && ((bits[word] >> bit) & 1u);
  }

  void mark(SNssai s) {
    auto& bits = used_[s.sst];
    std::size_t word = s.sd / 64, bit = s.sd % 64;
    if (word >= bits.size()) bits.resize(word + 1, 0);
    bits[word] |= (std::uint64_t{1} << bit);
  }

  // Smallest free sd >= 1 for the given sst.
  SNssai allocate(int sst) {
    SNssai probe = make_snssai(sst, 0);
    auto& bits = used_[probe.sst];
    for (std::size_t word = 0; word <= kMaxSd / 64; ++word) {
      std::uint64_t w = word < bits.size() ? bits[word] : 0;
      if (word == 0) w |= 1u;  // sd 0 is reserved
      if (w == ~std::uint64_t{0}) continue;
      for (std::size_t bit = 0; bit < 64; ++bit) {
        std::uint64_t sd = word * 64 + bit;
        if (sd > kMaxSd) break;
        if (!((w >> bit) & 1u)) {
          SNssai out = make_snssai(sst, static_cast<std::int64_t>(sd));
          mark(out);
          return out;
        }
      }
    }
    throw Error(Errc::exhausted, "sd space exhausted for sst " + std::to_string(sst));
  }

 private:
  static constexpr std::uint64_t kMaxSd = 0xFFFFFF;
  std::unordered_map<std::uint8_t, std::vector<std::uint64_t>> used_;
};

inline SNssai allocate_snssai(SnssaiPool& allocated, int sst) { return allocated.allocate(sst); }

// Subscriber identity: home PLMN plus a 9- or 10-digit MSIN.
struct Supi {
  Plmn plmn;
  std::string msin;

  friend auto operator<=>(const Supi&, const Supi&) = default;
  std::string to_string() const { return plmn.mcc + "-" + plmn.mnc + "-" + msin; }
};

inline Supi make_supi(const Plmn& plmn, const std::string& msin) {
  if ((msin.size() != 9 && msin.size() != 10) || !all_digits(msin)) {
    throw Error(Errc::validation, "msin: expected 9 or 10 decimal digits, got '" + msin + "'");
  }
  return Supi{plmn, msin};
}

// "mcc-mnc-msin"
inline Supi parse_supi(const std::string& text) {
  auto p1 = text.find('-');
  auto p2 = text.find('-', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos) {
    throw Error(Errc::validation, "supi: expected mcc-mnc-msin, got '" + text + "'");
  }
  Plmn plmn = validate_plmn(text.substr(0, p1), text.substr(p1 + 1, p2 - p1 - 1));
  return make_supi(plmn, text.substr(p2 + 1));
}

using SharedKey = std::array<std::uint8_t, 16>;

// Deterministic per-subscriber key for fixtures that do not spell one out.
inline SharedKey derive_shared_key(const Supi& supi) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : supi.to_string()) h = (h ^ static_cast<std::uint8_t>(c)) * 0x100000001b3ULL;
  SharedKey key{};
  std::uint64_t a = splitmix64(h), b = splitmix64(h ^ 0x5bd1e995);
  for (int i = 0; i < 8; ++i) {
    key[i] = static_cast<std::uint8_t>(a >> (8 * i));
    key[8 + i] = static_cast<std::uint8_t>(b >> (8 * i));
  }
  return key;
}

struct SubscriberRecord {
  Supi supi;
  SharedKey shared_key{};
  std::set<SNssai> allowed_snssai;

  friend bool operator==(const SubscriberRecord&, const SubscriberRecord&) = default;
};

// Per-session rate policy. No AMBR configured means the session is uncapped.
struct QosProfile {
  std::optional<double> session_ambr_mbps;
  std::uint64_t burst_bytes = 3000;

  friend bool operator==(const QosProfile&, const QosProfile&) = default;
};

constexpr std::size_t kMaxPacketBytes = 1500;

inline void check_qos(const QosProfile& qos) {
  if (qos.session_ambr_mbps) {
    if (*qos.session_ambr_mbps < 0) {
      throw Error(Errc::validation, "session_ambr_mbps: must be nonnegative");
    }
    if (*qos.session_ambr_mbps > 0 && qos.burst_bytes < kMaxPacketBytes) {
      throw Error(Errc::validation,
                  "burst_bytes: must hold at least one maximum-size packet (" +
                      std::to_string(kMaxPacketBytes) + " bytes) when an AMBR is set");
    }
  }
}

enum class ClientKind { operator_client, non_operator };

inline const char* client_kind_name(ClientKind k) {
  return k == ClientKind::operator_client ? "operator" : "non_operator";
}

// Onboarding input. Operator clients authenticate through their own core, so
// their subscribers live in the home stub, never in the neutral host UDM.
struct ClientDescriptor {
  std::string name;
  ClientKind kind = ClientKind::non_operator;
  Plmn plmn;
  std::string sepp_endpoint;                     // operator only
  std::vector<SubscriberRecord> subscribers;      // non-operator only
  std::vector<SubscriberRecord> home_subscribers; // operator only
  QosProfile qos;

  friend bool operator==(const ClientDescriptor&, const ClientDescriptor&) = default;
};

// What the neutral host keeps per tenant after onboarding.
struct ClientRecord {
  std::string client_id;
  std::string name;
  ClientKind kind = ClientKind::non_operator;
  Plmn plmn;
  std::string sepp_endpoint;
  SNssai slice;
};

// /24 of UE addresses; .0 is the network, .1 the gateway.
class IpPool {
 public:
  IpPool() = default;
  explicit IpPool(std::uint32_t network) : network_(network) {}

  std::uint32_t network() const { return network_; }

  std::uint32_t allocate() {
    if (next_host_ > 254) {
      throw Error(Errc::exhausted, "ue ip pool exhausted: " + format_ip(network_) + "/24");
    }
    return network_ | next_host_++;
  }

  bool contains(std::uint32_t addr) const { return (addr & 0xFFFFFF00u) == network_; }

  static std::string format_ip(std::uint32_t a) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (a >> 24) & 0xFF, (a >> 16) & 0xFF, (a >> 8) & 0xFF, a & 0xFF);
    return buf;
  }

 private:
  std::uint32_t network_ = 0;
  std::uint32_t next_host_ = 2;
};

struct SliceAllocation {
  SNssai slice;
  std::string client_id;
  std::string smf_id;
  std::string upf_id;
  QosProfile qos;
  IpPool ue_ip_pool;
};

}  // namespace nhsim

#endif  // NHSIM_IDS_HPP
