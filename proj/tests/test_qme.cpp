#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ssbath/bath.hpp"
#include "ssbath/error.hpp"
#include "ssbath/qme.hpp"

using ssbath::AtomParams;
using ssbath::Complex;
using ssbath::DensityMatrix2;

namespace {
const double ln2 = std::log(2.0);
}

TEST_SUITE("qme") {
  TEST_CASE("cavity parameter") {
    CHECK(ssbath::cavity_theta(0.0, 2.0) == 0.0);
    const double v = 15.0 / (std::numbers::pi * std::numbers::pi);
    CHECK(ssbath::cavity_theta(v, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ssbath::cavity_theta(v, 2.0) == doctest::Approx(8.0).epsilon(1e-15));
  }

  TEST_CASE("D(T~,V)") {
    CHECK(ssbath::d_tv(3.0, 1.0) == 1.0);
    CHECK(ssbath::d_tv(1.0, 1.2) == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(ssbath::d_tv(1.0, 0.8) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(ssbath::d_tv(10.0, 0.8), ssbath::ValidityError);
    CHECK_THROWS_AS(ssbath::d_tv(-1.0, 1.0), ssbath::DomainError);
  }

  TEST_CASE("F and G") {
    CHECK(std::abs(ssbath::cal_f(ln2, 0.0) - (-0.212694166641743885)) < 1e-15);
    CHECK(std::abs(ssbath::cal_g(ln2, 0.0) - 0.0550646806347136552) < 1e-15);
    CHECK(std::abs(ssbath::cal_f(200.0, 0.0)) < 1e-80);
    CHECK(std::abs(ssbath::cal_g(200.0, 0.0)) < 1e-80);
    CHECK(ssbath::cal_f(200.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    for (double y : {0.3, 1.0, 4.0}) {
      for (double th : {0.5, 3.0}) {
        const double n = ssbath::bose_mean(1.0, y);
        const double diff = ssbath::cal_g(y, th) - ssbath::cal_g(y, 0.0);
        CHECK(diff == doctest::Approx(th * (y * n * (n + 1) + n) + th * th * n / 2).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("rates") {
    const auto r = ssbath::rates({ln2, 1.0, 0.0, 1.0, 1.0});
    CHECK(r.gamma1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.gamma2 == doctest::Approx(0.5).epsilon(1e-15));
    const auto rq = ssbath::rates({ln2, 1.0, 0.0, 1.1, 1.0});
    CHECK(rq.gamma1 == doctest::Approx(0.5 * (2 + 0.1 * (ssbath::cal_f(ln2, 0) + ssbath::cal_g(ln2, 0)))).epsilon(1e-15));
    CHECK(rq.gamma2 == doctest::Approx(0.5 * (1 + 0.1 * ssbath::cal_g(ln2, 0))).epsilon(1e-15));
    for (double y : {0.2, 1.0, 5.0}) {
      const auto e = ssbath::rates({y, 2.0, 0.7, 1.0, 1.0});
      CHECK(e.gamma2 / e.gamma1 == doctest::Approx(std::exp(-y)).epsilon(1e-14));
    }
    // strong negative correction drives G2 below zero
    CHECK_THROWS_AS(ssbath::rates({3.0, 1.0, 0.0, 0.4, 1.0}), ssbath::ValidityError);
    CHECK_THROWS_AS(ssbath::rates({-1.0, 1.0, 0.0, 1.0, 1.0}), ssbath::DomainError);
  }

  TEST_CASE("right-hand side") {
    const AtomParams p{1.0, 1.0, 0.0, 1.0, 3.0};
    const DensityMatrix2 excited{1.0, 0.0, 0.0};
    const auto d = ssbath::lindblad_rhs(excited, p, 0.5, 0.2);
    CHECK(d.rho_ee == -1.0);
    CHECK(d.rho_ee + d.rho_gg == 0.0);
    const auto ss = ssbath::steady_state({0.6, 0.4});
    const auto z = ssbath::lindblad_rhs(ss, p, 0.6, 0.4);
    CHECK(std::abs(z.rho_ee) < 1e-15);
    CHECK(std::abs(z.rho_eg) == 0.0);
    const auto c = ssbath::lindblad_rhs({0.5, 0.5, Complex(0.2, 0.0)}, p, 0.6, 0.4, 0.5);
    CHECK(std::abs(c.rho_eg - Complex(-0.2, -0.7)) < 1e-15);
  }

  TEST_CASE("evolution invariants and steady state") {
    for (double q : {0.9, 1.0, 1.15}) {
      const AtomParams p{1.2, 0.8, 0.3, q, 4.0};
      const auto r = ssbath::rates(p);
      const double g = r.gamma1 + r.gamma2;
      const double dt = std::min(0.05 / g, 0.05 / p.omega_a);
      for (const DensityMatrix2& rho0 :
           {DensityMatrix2{1.0, 0.0, 0.0}, DensityMatrix2{0.0, 1.0, 0.0}, DensityMatrix2{0.5, 0.5, Complex(0.0, 0.5)}}) {
        const auto traj = ssbath::evolve(rho0, p, 20.0 / g, dt);
        for (const auto& s : traj) {
          CHECK(std::abs(s.rho.trace() - 1.0) <= 1e-12);
          CHECK(s.rho.min_eigenvalue() >= -1e-10);
        }
        CHECK(traj.back().rho.rho_ee == doctest::Approx(r.gamma2 / g).epsilon(1e-8));
        CHECK(std::abs(traj.back().rho.rho_eg) < 1e-8);
      }
    }
  }

  TEST_CASE("closed-form solutions") {
    const AtomParams p{1.0, 1.0, 0.0, 1.0, 2.0};
    const auto r = ssbath::rates(p);
    const double g = r.gamma1 + r.gamma2;
    const double dt = 0.01;
    const auto traj = ssbath::evolve({0.5, 0.5, Complex(0.5, 0.0)}, p, 3.0, dt);
    for (const auto& s : traj) {
      const double inf = r.gamma2 / g;
      CHECK(s.rho.rho_ee == doctest::Approx(inf + (0.5 - inf) * std::exp(-2 * g * s.t)).epsilon(1e-9));
      CHECK(std::abs(s.rho.rho_eg) == doctest::Approx(0.5 * std::exp(-g * s.t)).epsilon(1e-9));
      const Complex exact = 0.5 * std::exp(Complex(-g, -p.omega_a) * s.t);
      CHECK(std::abs(s.rho.rho_eg - exact) < 1e-9);
    }
  }

  TEST_CASE("RK4 is fourth order on pure decay") {
    const AtomParams p{50.0, 1.0, 0.0, 1.0, 1.0};
    const auto r = ssbath::rates(p);
    CHECK(r.gamma2 < 1e-20);
    auto err = [&](double dt) {
      const auto tr = ssbath::evolve({1.0, 0.0, 0.0}, p, 1.0, dt);
      return std::abs(tr.back().rho.rho_ee - std::exp(-2 * r.gamma1 * tr.back().t));
    };
    CHECK(err(0.05) / err(0.025) == doctest::Approx(16.0).epsilon(0.05));
  }

  TEST_CASE("step-size and sampling configuration") {
    const AtomParams p{1.0, 1.0, 0.0, 1.0, 1.0};
    CHECK_THROWS_AS(ssbath::evolve({1, 0, 0}, p, 1.0, 0.2), ssbath::ConfigError);
    CHECK_THROWS_AS(ssbath::evolve({1, 0, 0}, {1.0, 0.01, 0.0, 1.0, 10.0}, 1.0, 0.02), ssbath::ConfigError);
    CHECK_THROWS_AS(ssbath::evolve({1, 0, 0}, p, 1.0, 0.0), ssbath::ConfigError);
    const auto tr = ssbath::evolve({1, 0, 0}, p, 1.0, 0.01, {0.0, 10});
    CHECK(tr.size() == 11);
    CHECK(tr.back().t == doctest::Approx(1.0));
  }
}
