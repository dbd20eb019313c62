#include <doctest.h>

#include <cmath>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/stark.hpp"

using ssbath::StarkParams;

namespace {
constexpr double kTheta = 1e-4;  // sub-wavelength cavity
}

TEST_SUITE("stark") {
  TEST_CASE("principal value on known integrals") {
    auto f = [](double x) { return 1.0 / (1.0 - x); };
    CHECK(std::abs(ssbath::pv_integrate(f, 1.0, 2.0).value) < 1e-12);
    CHECK(ssbath::pv_integrate(f, 1.0, 3.0).value == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    // PV int_0^2 x^2/(1-x) dx = -ln(1) ... closed form -x^2/2 - x - ln|1-x| from 0 to 2 = -4
    auto g = [](double x) { return x * x / (1.0 - x); };
    CHECK(ssbath::pv_integrate(g, 1.0, 2.0).value == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK_THROWS_AS(ssbath::pv_integrate(f, 3.0, 2.0), ssbath::DomainError);
    CHECK_THROWS_AS(ssbath::pv_integrate(f, 1.0, 2.0, {1e-10, 1.5}), ssbath::DomainError);
  }

  TEST_CASE("pairing window does not change the answer") {
    for (double y : {0.3, 1.0, 2.6, 9.0}) {
      auto f = [y](double x) {
        return x * x * x * (1.0 / (y - x) + 1.0 / (y + x)) * ssbath::bose_mean(1.0, x);
      };
      const double wide = ssbath::pv_integrate(f, y, 40.0 + y, {1e-11, std::min(y, 1.0) / 2}).value;
      const double narrow = ssbath::pv_integrate(f, y, 40.0 + y, {1e-11, std::min(y, 1.0) / 4}).value;
      CHECK(std::abs(wide - narrow) <= 1e-9 * std::max(1.0, std::abs(wide)));
    }
  }

  TEST_CASE("sign structure at q = 1") {
    CHECK(ssbath::stark_f({0.5, 0.0, 1.0}) < 0.0);
    CHECK(ssbath::stark_f({10.0, 0.0, 1.0}) > 0.0);
    CHECK(ssbath::stark_f({2.0, 0.0, 1.0, 3.0}) == doctest::Approx(3.0 * ssbath::stark_f({2.0, 0.0, 1.0})).epsilon(1e-14));
    CHECK_THROWS_AS(ssbath::stark_f({1.0, 0.0, 1.0, 0.0}), ssbath::DomainError);
    CHECK_THROWS_AS(ssbath::stark_f({1.0, 10.0, 0.8}), ssbath::ValidityError);
  }

  TEST_CASE("F is affine in q once D(T~,V) is factored out") {
    for (double y : {0.7, 3.0, 12.0}) {
      for (double th : {0.0, 0.5}) {
        auto raw = [&](double q) { return ssbath::stark_f({y, th, q}) * (1.0 + 0.5 * (q - 1) * th * (th + 2)); };
        const double a = raw(0.9), b = raw(1.0), c = raw(1.1);
        CHECK(std::abs((b - a) - (c - b)) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(c)}));
      }
    }
  }

  TEST_CASE("critical energies move with q") {
    const auto r10 = ssbath::critical_roots(1.0, kTheta);
    const auto r12 = ssbath::critical_roots(1.2, kTheta);
    const auto r08 = ssbath::critical_roots(0.8, kTheta);
    REQUIRE(r10.size() == 1);
    REQUIRE(!r12.empty());
    REQUIRE(r08.size() >= 2);
    CHECK(r10[0] == doctest::Approx(2.616).epsilon(1e-3));
    CHECK(r12[0] > r10[0]);
    CHECK(r08[0] < r10[0]);
    // second transition back to attraction for q < 1
    CHECK(ssbath::stark_f({0.5 * (r08[0] + r08[1]), kTheta, 0.8}) > 0.0);
    CHECK(ssbath::stark_f({r08[1] + 2.0, kTheta, 0.8}) < 0.0);
    for (double root : r10) CHECK(std::abs(ssbath::stark_f({root, kTheta, 1.0})) < 1e-4);
    CHECK(ssbath::critical_y(1.0, kTheta).value() == r10[0]);
    CHECK_FALSE(ssbath::critical_y(1.0, kTheta, {3.0, 30.0, 50}).has_value());
  }

  TEST_CASE("q splitting shrinks as the cavity grows") {
    // sup over the y window; pointwise differences can change sign near a root
    double prev = INFINITY;
    for (double th : {1.0, 10.0, 100.0}) {
      double split = 0.0;
      for (int i = 0; i < 40; ++i) {
        const double y = 0.1 * std::pow(300.0, i / 39.0);
        split = std::max(split, std::abs(ssbath::stark_f({y, th, 1.2}) - ssbath::stark_f({y, th, 1.0})));
      }
      CHECK(split < prev);
      prev = split;
    }
  }
}
