#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "cesaro/error.hpp"
#include "cesaro/measure.hpp"
#include "oracles.hpp"

using namespace cesaro;

TEST_SUITE("measure") {
  TEST_CASE("moment examples") {
    CHECK(moment(RadialMeasure::lebesgue(), 5).value == 1.0 / 6.0);
    CHECK(moment(RadialMeasure::atoms({{0.5, 1.0}}), 3).value == 0.125);
    CHECK(moment(RadialMeasure::beta_log(2.0, 0.0, 2.0), 3).value == doctest::Approx(0.1).epsilon(1e-14));
  }

  TEST_CASE("moments examples") {
    auto leb = moments(RadialMeasure::lebesgue(), 3);
    CHECK(leb.values == std::vector<double>{1.0, 0.5, 1.0 / 3.0, 0.25});
    auto dirac = moments(RadialMeasure::atoms({{0.0, 1.0}}), 2);
    CHECK(dirac.values == std::vector<double>{1.0, 0.0, 0.0});
    // log-weighted density against an independent tanh-sinh integral
    const double want = oracle::integrate01(
        [](double, double u) { return oracle::beta_log_density(1.0, 1.0, 1.0, u); }, 1e-14);
    auto bl = moments(RadialMeasure::beta_log(1.0, 1.0), 0);
    CHECK(bl.method[0] == MomentMethod::quadrature);
    CHECK(bl.values[0] == doctest::Approx(want).epsilon(1e-12));
  }

  TEST_CASE("quadrature moments against the brute oracle") {
    for (auto [s, g] : std::vector<std::pair<double, double>>{{0.5, 1.0}, {0.75, 1.0}, {1.5, -1.0}, {2.0, 2.0}}) {
      auto m = RadialMeasure::beta_log(s, g, 1.3);
      for (std::size_t n : {0u, 1u, 7u, 100u, 2000u}) {
        const double want = oracle::integrate01([&](double, double u) {
          return std::pow(1.0 - u, double(n)) * oracle::beta_log_density(s, g, 1.3, u);
        });
        const auto got = moment(m, n);
        CHECK(got.value == doctest::Approx(want).epsilon(1e-10));
        CHECK(got.err <= 1e-12 * got.value + 1e-300);
      }
    }
  }

  TEST_CASE("gamma = 0 moments match the Beta closed form") {
    auto m = RadialMeasure::beta_log(0.5, 0.0, 0.5);
    for (std::size_t n : {0u, 10u, 4096u})
      CHECK(moment(m, n).value ==
            doctest::Approx(0.5 * boost::math::beta(double(n) + 1.0, 0.5)).epsilon(1e-15));
  }

  TEST_CASE("tail mass examples") {
    CHECK(tail_mass(RadialMeasure::beta_log(2.0, 0.0, 2.0), 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(tail_mass(RadialMeasure::lebesgue(), 0.9) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(tail_mass(RadialMeasure::atoms({{0.3, 1.0}, {0.7, 2.0}}), 0.5) == 2.0);
    CHECK_THROWS_AS(tail_mass(RadialMeasure::lebesgue(), 1.0), ParameterError);
  }

  TEST_CASE("tail mass by quadrature") {
    for (double a : {0.0, 0.5, 0.99, 1.0 - 1e-6}) {
      const double want = oracle::integrate_a1(
          [](double, double u) { return oracle::beta_log_density(0.75, 1.0, 1.0, u); }, a);
      CHECK(tail_mass(RadialMeasure::beta_log(0.75, 1.0), a) == doctest::Approx(want).epsilon(1e-10));
    }
  }

  TEST_CASE("total mass examples") {
    CHECK(total_mass(RadialMeasure::lebesgue()) == 1.0);
    CHECK(total_mass(RadialMeasure::atoms({{0.5, 3.0}})) == 3.0);
    CHECK(total_mass(RadialMeasure::beta_log(0.5, 0.0, 0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("invalid measures are rejected") {
    CHECK_THROWS_AS(RadialMeasure::atoms({{1.0, 1.0}}), ParameterError);
    CHECK_THROWS_AS(RadialMeasure::atoms({{0.5, 0.0}}), ParameterError);
    CHECK_THROWS_AS(RadialMeasure::atoms({{-0.1, 1.0}}), ParameterError);
    CHECK_THROWS_AS(RadialMeasure::beta_log(0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(RadialMeasure::beta_log(1.0, 0.0, -2.0), ParameterError);
    CHECK_NOTHROW(RadialMeasure::atoms({{0.0, 1.0}}));
  }

  TEST_CASE("sums add componentwise") {
    auto a = RadialMeasure::atoms({{0.3, 0.5}});
    auto b = RadialMeasure::beta_log(1.5, 1.0);
    auto s = RadialMeasure::sum({a, b, RadialMeasure::lebesgue()});
    for (std::size_t n : {0u, 3u, 50u})
      CHECK(moment(s, n).value ==
            doctest::Approx(moment(a, n).value + moment(b, n).value + 1.0 / (n + 1.0)).epsilon(1e-14));
    CHECK(tail_mass(s, 0.2) ==
          doctest::Approx(tail_mass(a, 0.2) + tail_mass(b, 0.2) + 0.8).epsilon(1e-14));
  }

  TEST_CASE("moment sequences are monotone and log-convex") {
    for (const auto& m : {RadialMeasure::lebesgue(), RadialMeasure::beta_log(0.5, 1.0),
                          RadialMeasure::beta_log(1.25, -1.0), RadialMeasure::beta_log(2.0, 0.0),
                          RadialMeasure::atoms({{0.2, 1.0}, {0.95, 0.1}})}) {
      auto seq = moments(m, 600);
      const double mass = total_mass(m);
      for (std::size_t n = 0; n + 2 < seq.size(); ++n) {
        CHECK(seq.values[n + 1] <= seq.values[n]);
        CHECK(seq.values[n] <= mass * (1 + 1e-12));
        CHECK(seq.values[n] >= 0.0);
        const double lhs = seq.values[n + 1] * seq.values[n + 1];
        const double rhs = seq.values[n] * seq.values[n + 2];
        CHECK(lhs <= rhs * (1.0 + 1e-10));
      }
      CHECK(seq.values[0] == doctest::Approx(mass).epsilon(1e-12));
    }
  }

  TEST_CASE("tail mass is nonincreasing") {
    auto m = RadialMeasure::beta_log(0.5, 1.0);
    double prev = INFINITY;
    for (int j = 0; j < 40; ++j) {
      const double v = tail_mass(m, 1.0 - std::pow(2.0, -0.5 * j));
      CHECK(v <= prev);
      prev = v;
    }
  }

  TEST_CASE("Beta moments approach normalizer * Gamma(s) / n^s") {
    for (double s : {0.5, 1.5, 2.0}) {
      auto m = RadialMeasure::beta_log(s, 0.0, 1.7);
      for (int e = 10; e <= 14; ++e) {
        const double n = std::ldexp(1.0, e);
        const double scaled = moment(m, std::size_t(n)).value * std::pow(n, s);
        CHECK(std::fabs(scaled / (1.7 * std::tgamma(s)) - 1.0) < 0.02);
      }
    }
  }

  TEST_CASE("parallel moments are identical to serial ones") {
    auto m = RadialMeasure::beta_log(0.75, 1.0);
    auto a = moments(m, 300, 1);
    auto b = moments(m, 300, 4);
    CHECK(a.values == b.values);
    CHECK(a.err == b.err);
  }

  TEST_CASE("scaling multiplies every moment") {
    auto m = RadialMeasure::sum({RadialMeasure::lebesgue(), RadialMeasure::atoms({{0.5, 1.0}})});
    auto s = m.scaled(3.0);
    for (std::size_t n : {0u, 5u, 100u}) CHECK(moment(s, n).value == doctest::Approx(3.0 * moment(m, n).value));
  }
}
