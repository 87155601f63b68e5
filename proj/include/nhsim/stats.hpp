#ifndef NHSIM_STATS_HPP
#define NHSIM_STATS_HPP

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "nhsim/errors.hpp"

namespace nhsim {

// Mean with a two-sided 95% confidence interval (Student t, n-1 df).
struct StatSummary {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> ci95_halfwidth;
};

inline StatSummary aggregate(const std::vector<double>& samples) {
  if (samples.empty()) {
    throw Error(Errc::precondition, "aggregate: need at least one sample");
  }
  StatSummary out;
  out.n = samples.size();
  double sum = 0.0;
  for (double v : samples) sum += v;
  out.mean = sum / static_cast<double>(out.n);
  if (out.n >= 2) {
    double ss = 0.0;
    for (double v : samples) ss += (v - out.mean) * (v - out.mean);
    double sd = std::sqrt(ss / static_cast<double>(out.n - 1));
    boost::math::students_t_distribution<double> dist(static_cast<double>(out.n - 1));
    double t = boost::math::quantile(dist, 0.975);
    out.ci95_halfwidth = t * sd / std::sqrt(static_cast<double>(out.n));
  }
  return out;
}

}  // namespace nhsim

#endif  // NHSIM_STATS_HPP
