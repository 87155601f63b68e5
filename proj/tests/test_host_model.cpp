#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nhsim/host_model.hpp"
#include "nhsim/rng.hpp"

using namespace nhsim;
using Catch::Matchers::WithinAbs;

namespace {

// Independent calibration oracle: the hyperbolic per-flow decay K0/(1+cF) is
// pinned by the two measured single-slice totals (four flows -> 201.4 Mbps,
// eight flows -> 177.2 Mbps). Solving that 2x2 system fixes K0 and c.
struct Fit {
  double k0;
  double c;
};

Fit solve_two_point(double rate_f4, double rate_f8) {
  // rate_f4 * (1 + 4c) = rate_f8 * (1 + 8c) = K0
  double c = (rate_f4 - rate_f8) / (8.0 * rate_f8 - 4.0 * rate_f4);
  double k0 = rate_f4 * (1.0 + 4.0 * c);
  return {k0, c};
}

}  // namespace

TEST_CASE("default K0 and c reproduce the two calibration anchors") {
  Fit fit = solve_two_point(201.4, 177.2);
  HostResource host;
  CHECK_THAT(fit.k0, WithinAbs(host.per_core_rate_k0_mbps, 0.01));
  CHECK_THAT(fit.c, WithinAbs(host.per_flow_overhead_c, 1e-6));
  // substitute back through the implementation
  CHECK_THAT(effective_service_rate(host, 4, TrafficProtocol::greedy), WithinAbs(201.4, 0.05));
  CHECK_THAT(effective_service_rate(host, 8, TrafficProtocol::greedy), WithinAbs(177.2, 0.05));
}

TEST_CASE("no flows means no per-flow overhead") {
  HostResource host;
  REQUIRE(effective_service_rate(host, 0, TrafficProtocol::greedy) == host.per_core_rate_k0_mbps);
}

TEST_CASE("cbr traffic is served gamma times faster") {
  HostResource host;
  double greedy = effective_service_rate(host, 8, TrafficProtocol::greedy);
  double cbr = effective_service_rate(host, 8, TrafficProtocol::cbr);
  CHECK_THAT(cbr, WithinAbs(greedy * host.udp_rate_multiplier_gamma, 1e-9));
  CHECK_THAT(cbr, WithinAbs(182.75, 0.01));
}

TEST_CASE("default gamma matches the loss-derived oracle") {
  // capacity that yields 1.11% loss at 8 x 23.1 Mbps offered, over the
  // eight-flow greedy ceiling
  double oracle = (8 * 23.1) * (1.0 - 0.0111) / 177.2;
  HostResource host;
  CHECK_THAT(host.udp_rate_multiplier_gamma, WithinAbs(oracle, 2e-4));
}

TEST_CASE("default eta matches the four-slice total oracle") {
  HostResource host;
  // four processes on two cores, two flows each: total = 4 * 0.5 * eta * K(2)
  double k2 = effective_service_rate(host, 2, TrafficProtocol::greedy);
  double oracle = 286.7 / (2.0 * k2);
  CHECK_THAT(host.multiproc_efficiency_eta, WithinAbs(oracle, 2e-4));
}

TEST_CASE("core share examples") {
  HostResource host;
  host.cores = 2;
  REQUIRE(core_share(host, 1) == 1.0);  // a single process never exceeds one core
  CHECK_THAT(core_share(host, 4), WithinAbs(0.5 * host.multiproc_efficiency_eta, 1e-12));
  CHECK_THAT(core_share(host, 4), WithinAbs(0.33155, 5e-5));
  host.cores = 4;
  CHECK_THAT(core_share(host, 2), WithinAbs(host.multiproc_efficiency_eta, 1e-12));
}

TEST_CASE("core share requires at least one process") {
  HostResource host;
  REQUIRE_THROWS_AS(core_share(host, 0), Error);
}

TEST_CASE("service rate is nonincreasing in the flow count") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    HostResource host;
    host.per_core_rate_k0_mbps = 10.0 + rng.uniform(0.0, 500.0);
    host.per_flow_overhead_c = rng.uniform(0.0, 0.2);
    double prev = effective_service_rate(host, 0, TrafficProtocol::greedy);
    for (int f = 1; f <= 16; ++f) {
      double cur = effective_service_rate(host, f, TrafficProtocol::greedy);
      REQUIRE(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("core share is nonincreasing in the process count") {
  Rng rng(100);
  for (int trial = 0; trial < 200; ++trial) {
    HostResource host;
    host.cores = 1 + static_cast<int>(rng.below(8));
    host.multiproc_efficiency_eta = rng.uniform(0.1, 1.0);
    double prev = core_share(host, 1);
    for (int n = 2; n <= 16; ++n) {
      double cur = core_share(host, n);
      REQUIRE(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("allocated core-equivalents never exceed the host cores") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    HostResource host;
    host.cores = 1 + static_cast<int>(rng.below(8));
    host.multiproc_efficiency_eta = rng.uniform(0.1, 1.0);
    for (int n = 1; n <= 20; ++n) {
      REQUIRE(static_cast<double>(n) * core_share(host, n) <= host.cores + 1e-9);
    }
  }
}

TEST_CASE("host validation rejects broken parameters") {
  HostResource h;
  h.host_id = "core";
  check_host(h);
  h.cores = 0;
  REQUIRE_THROWS_AS(check_host(h), Error);
  h.cores = 2;
  h.multiproc_efficiency_eta = 1.5;
  REQUIRE_THROWS_AS(check_host(h), Error);
  h.multiproc_efficiency_eta = 0.5;
  h.per_core_rate_k0_mbps = 0.0;
  REQUIRE_THROWS_AS(check_host(h), Error);
}
