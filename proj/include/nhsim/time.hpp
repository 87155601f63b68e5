#ifndef NHSIM_TIME_HPP
#define NHSIM_TIME_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace nhsim {

// Simulation time as a signed integer tick count. The virtual clock runs at
// 11 GHz: every decimal value down to 1 ns is an integer number of ticks, and
// so is one eleventh of a millisecond, which the control-plane calibration
// needs to hit its latency targets without rounding residue.
class SimTime {
 public:
  static constexpr std::int64_t kTicksPerSecond = 11'000'000'000LL;
  static constexpr std::int64_t kTicksPerMilli = kTicksPerSecond / 1'000;
  static constexpr std::int64_t kTicksPerMicro = kTicksPerSecond / 1'000'000;

  constexpr SimTime() = default;

  static constexpr SimTime from_ticks(std::int64_t t) { return SimTime(t); }
  static SimTime seconds(double s) {
    return SimTime(static_cast<std::int64_t>(std::llround(s * static_cast<double>(kTicksPerSecond))));
  }
  static SimTime millis(double ms) {
    return SimTime(static_cast<std::int64_t>(std::llround(ms * static_cast<double>(kTicksPerMilli))));
  }
  static constexpr SimTime zero() { return SimTime(0); }

  constexpr std::int64_t ticks() const { return ticks_; }
  double to_seconds() const { return static_cast<double>(ticks_) / static_cast<double>(kTicksPerSecond); }
  double to_millis() const { return static_cast<double>(ticks_) / static_cast<double>(kTicksPerMilli); }

  friend constexpr SimTime operator+(SimTime a, SimTime b) { return SimTime(a.ticks_ + b.ticks_); }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return SimTime(a.ticks_ - b.ticks_); }
  SimTime& operator+=(SimTime o) {
    ticks_ += o.ticks_;
    return *this;
  }
  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;

 private:
  constexpr explicit SimTime(std::int64_t t) : ticks_(t) {}
  std::int64_t ticks_ = 0;
};

}  // namespace nhsim

#endif  // NHSIM_TIME_HPP
