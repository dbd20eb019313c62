#include <doctest.h>

#include <cmath>
#include <vector>

#include "ssbath/error.hpp"
#include "ssbath/oracle.hpp"
#include "ssbath/quad.hpp"
#include "ssbath/superstat.hpp"

using ssbath::BathParams;
using ssbath::Complex;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("superstat") {
  TEST_CASE("gamma density") {
    const ssbath::GammaDist exp_like(0.7, 1.0);
    CHECK(ssbath::gamma_pdf(exp_like, 0.0) == doctest::Approx(1.0 / 0.7).epsilon(1e-15));

    const ssbath::GammaDist d(0.1, 10.0);
    auto pdf = [&](double x) { return ssbath::gamma_pdf(d, x); };
    CHECK(ssbath::quad::integrate(pdf, 0.0, 10.0).value == doctest::Approx(1.0).epsilon(1e-12));
    const double mean = ssbath::quad::integrate([&](double x) { return x * pdf(x); }, 0.0, 10.0).value;
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-12));
    const double second = ssbath::quad::integrate([&](double x) { return x * x * pdf(x); }, 0.0, 10.0).value;
    CHECK(second - mean * mean == doctest::Approx(d.variance()).epsilon(1e-10));
    CHECK_THROWS_AS(ssbath::gamma_pdf(d, -0.1), ssbath::DomainError);
    CHECK_THROWS_AS(ssbath::GammaDist(0.0, 1.0), ssbath::DomainError);
  }

  TEST_CASE("Tsallis map of the gamma parameters") {
    const auto d = ssbath::GammaDist::from_tsallis(2.0, 1.25);
    CHECK(d.mean() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.c == doctest::Approx(4.0).epsilon(1e-15));
    const double sigma = std::sqrt(d.variance());
    CHECK(ssbath::q_from_sigma(sigma, d.mean()) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(ssbath::q_from_sigma(0.0, 3.0) == 1.0);
    CHECK(ssbath::q_from_sigma(3.0, 3.0) == 2.0);
    const ssbath::GammaDist g(0.1, 10.0);
    CHECK(ssbath::q_from_sigma(std::sqrt(g.variance()), g.mean()) == doctest::Approx(1.1).epsilon(1e-14));
    CHECK_THROWS_AS(ssbath::GammaDist::from_tsallis(1.0, 1.0), ssbath::DomainError);
  }

  TEST_CASE("q-exponential") {
    CHECK(ssbath::q_exp(0.0, 1.3) == 1.0);
    CHECK(ssbath::q_exp(-1.0, 1.0) == std::exp(-1.0));
    CHECK(std::abs(ssbath::q_exp(-1.0, 1.1) - 0.385543289429531747) < 1e-15);
    CHECK(ssbath::q_exp(-1.0, 1.0 + 1e-9) == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
    CHECK(ssbath::q_exp(2.0, 0.8) == doctest::Approx(std::pow(1.4, 5.0)).epsilon(1e-14));
    CHECK_THROWS_AS(ssbath::q_exp(-6.0, 0.8), ssbath::DomainError);
    CHECK_THROWS_AS(ssbath::q_exp(10.0, 1.1), ssbath::DomainError);
  }

  TEST_CASE("gamma average reproduces the q-exponential") {
    for (double q : {1.001, 1.01, 1.05, 1.1, 1.2, 1.3}) {
      for (double be = 0.0; be <= 5.0; be += 0.25) {
        const double closed = ssbath::q_exp(-be, q);
        CHECK(std::abs(ssbath::ss_boltzmann_scalar(1.0, q, be) - closed) <= 1e-8 * closed);
        CHECK(std::abs(ssbath::ss_boltzmann_scalar(2.0, q, be / 2.0) - closed) <= 1e-8 * closed);
      }
    }
    CHECK(ssbath::ss_boltzmann_scalar(1.0, 1.1, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ssbath::ss_boltzmann_scalar(1.0, 1.0001, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-3));
    CHECK_THROWS_AS(ssbath::ss_boltzmann_scalar(1.0, 1.0, 1.0), ssbath::DomainError);
    CHECK_THROWS_AS(ssbath::ss_boltzmann_scalar(1.0, 0.9, 1.0), ssbath::DomainError);
  }

  TEST_CASE("D values") {
    CHECK(ssbath::corr_d(BathParams(1, 1, 1, 1.0)) == 1.0);
    CHECK(std::abs(ssbath::corr_d(BathParams(1, 1, 1, 1.2)) - 1.81838770000537260) < 1e-13);
    CHECK(std::abs(ssbath::corr_d(BathParams(1, 1, 1, 0.8)) - 0.18161229999462740) < 1e-13);
    CHECK_THROWS_AS(ssbath::corr_d(BathParams(1, 1, 1, 0.75)), ssbath::ValidityError);
  }

  TEST_CASE("N and D are affine in q") {
    for (double b : {1.0, 3.5, 15.0}) {
      const BathParams p(1, 1, b, 1.0);
      const double d0 = ssbath::corr_d(p.with_q(0.9)), d1 = ssbath::corr_d(p.with_q(1.05)),
                   d2 = ssbath::corr_d(p.with_q(1.2));
      CHECK(std::abs((d1 - d0) / 0.15 - (d2 - d1) / 0.15) <= 1e-12 * std::max(1.0, std::abs(d2 - d1) / 0.15));
      for (double tau : {0.0, 0.7, 4.0}) {
        const Complex n0 = ssbath::corr_n(tau, p.with_q(0.9)), n1 = ssbath::corr_n(tau, p.with_q(1.05)),
                      n2 = ssbath::corr_n(tau, p.with_q(1.2));
        const Complex s1 = (n1 - n0) / 0.15, s2 = (n2 - n1) / 0.15;
        CHECK(std::abs(s1 - s2) <= 1e-12 * std::max(std::abs(s2), std::abs(n1)));
      }
    }
  }

  TEST_CASE("q = 1 reductions are exact") {
    for (double b : {0.3, 1.0, 3.5, 15.0}) {
      const BathParams p(0.8, 1.3, b, 1.0);
      for (double tau : {0.0, 0.25, 3.0, -2.0}) {
        const auto s = ssbath::correlation(tau, p);
        CHECK(s.c_q == ssbath::i_integral(1, 0, tau, p));
        CHECK(s.c_q == s.c_eq);
        CHECK(ssbath::corr_n(tau, p) == ssbath::i_integral(1, 0, tau, p));
      }
      const auto s0 = ssbath::correlation(0.0, p);
      CHECK(s0.c_q.imag() == 0.0);
      CHECK(s0.c_q.real() > 0.0);
    }
    CHECK(std::abs(ssbath::correlation(0.0, BathParams(1, 1, 1, 1)).c_q - 1.28986813369645287) < 1e-14);
  }

  TEST_CASE("M") {
    const BathParams unit(1, 1, 1, 1.0);
    CHECK(std::abs(ssbath::corr_m(0.0, unit) - 2.0) < 1e-15);
    const BathParams p(1, 1, 2.0, 1.1);
    for (double tau : {0.3, 2.0}) {
      CHECK(std::abs(ssbath::corr_m(-tau, p) - std::conj(ssbath::corr_m(tau, p))) <= 1e-14 * std::abs(ssbath::corr_m(tau, p)));
    }
    CHECK(std::abs(ssbath::corr_m(0.0, p).imag()) < 1e-15);
    // c_q* assembles conj(N) + M over D
    const auto s = ssbath::correlation(0.9, p);
    const Complex expect = (std::conj(ssbath::corr_n(0.9, p)) + ssbath::corr_m(0.9, p)) / ssbath::corr_d(p);
    CHECK(rel(s.c_q_star, expect) < 1e-14);
  }

  TEST_CASE("decay and small-tau concentration of the q correction") {
    const BathParams p(1, 1, 3.5, 1.2);
    CHECK(std::abs(ssbath::corr_n(500.0, p)) < 1e-2 * std::abs(ssbath::corr_n(0.0, p)));
    const auto near = ssbath::correlation(0.0, p);
    const auto far = ssbath::correlation(10.0, p);
    CHECK(std::abs(near.c_q - near.c_eq) > std::abs(far.c_q - far.c_eq));
  }

  TEST_CASE("sweep equals pointwise evaluation") {
    const BathParams p(1, 1, 3.5, 1.2);
    std::vector<double> taus;
    for (int i = 0; i <= 60; ++i) taus.push_back(i / 6.0);
    const auto sweep = ssbath::correlation_sweep(taus, p);
    REQUIRE(sweep.size() == taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const auto s = ssbath::correlation(taus[i], p);
      CHECK(sweep[i].tau == taus[i]);
      CHECK(rel(sweep[i].c_q, s.c_q) < 1e-13);
      CHECK(rel(sweep[i].c_q_star, s.c_q_star) < 1e-13);
    }
  }

  TEST_CASE("discrete first order matches the exact q-exponential oracle") {
    const auto bath = ssbath::oracle::DiscreteBath::standard();
    for (double b : {1.0, 3.5}) {
      for (double tau : {0.0, 1.3}) {
        // q = 1: identical algebra, only truncation separates them
        const auto eq = ssbath::oracle::exact_traces(bath, b, 1.0, tau);
        CHECK(rel(ssbath::discrete_corr_n(bath.omegas, bath.kappas, b, 1.0, tau), eq.n) < 1e-12);
        CHECK(std::abs(ssbath::discrete_corr_d(bath.omegas, b, 1.0) - eq.d) < 1e-12);

        double prev_n = 0.0, prev_d = 0.0;
        for (double e : {0.05, 0.025}) {
          const auto ex = ssbath::oracle::exact_traces(bath, b, 1.0 + e, tau);
          const double rn = std::abs(ssbath::discrete_corr_n(bath.omegas, bath.kappas, b, 1.0 + e, tau) - ex.n);
          const double rd = std::abs(ssbath::discrete_corr_d(bath.omegas, b, 1.0 + e) - ex.d);
          if (prev_n > 0.0) {
            CHECK(prev_n / rn == doctest::Approx(4.0).epsilon(0.125));
            CHECK(prev_d / rd == doctest::Approx(4.0).epsilon(0.125));
          }
          prev_n = rn;
          prev_d = rd;
        }
      }
    }
  }
}
