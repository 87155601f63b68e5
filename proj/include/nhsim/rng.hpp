#ifndef NHSIM_RNG_HPP
#define NHSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace nhsim {

// mt19937_64 with hand-rolled value mappings. The std:: distributions are
// implementation-defined, so deriving doubles and bounded ints manually keeps
// traces reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [0, n), unbiased enough for test-scenario sampling
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

// Deterministic key/seed derivation for fixtures.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace nhsim

#endif  // NHSIM_RNG_HPP
