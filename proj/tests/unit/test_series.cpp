#include <doctest.h>

#include <cmath>

#include "cesaro/error.hpp"
#include "cesaro/series.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {
std::vector<double> reals(const PowerSeries& f) {
  std::vector<double> v;
  for (auto c : f.coeffs()) v.push_back(c.real());
  return v;
}
}  // namespace

TEST_SUITE("series") {
  TEST_CASE("log kernel coefficients") {
    auto f = make_series(kind::LogKernel{}, 4);
    CHECK(reals(f) == std::vector<double>{0.0, 1.0, 0.5, 1.0 / 3.0, 0.25});
  }

  TEST_CASE("power kernel c=1 is the geometric series") {
    auto f = make_series(kind::PowerKernel{1.0}, 3);
    for (auto c : f.coeffs()) CHECK(c == cplx(1.0));
  }

  TEST_CASE("conformal kernel matches the binomial expansion") {
    auto f = make_series(kind::ConformalKernel{0.5, 1.0}, 2);
    CHECK(f[0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f[1].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f[2].real() == doctest::Approx(0.375).epsilon(1e-15));
    for (double a : {0.3, 0.9}) {
      for (double p : {0.5, 2.0, double(INFINITY)}) {
        const double c = 1.0 + 1.0 / p;
        auto g = make_series(kind::ConformalKernel{a, p}, 60);
        auto ref = oracle::binomial_series(c, a, 60);
        for (std::size_t k = 0; k <= 60; ++k)
          CHECK(g[k].real() == doctest::Approx((1.0 - a) * ref[k]).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("lacunary support") {
    auto f = make_series(kind::Lacunary{}, 20);
    for (std::size_t k = 0; k <= 20; ++k) {
      const bool dyadic = k == 1 || k == 2 || k == 4 || k == 8 || k == 16;
      CHECK(f[k].real() == (dyadic ? 1.0 : 0.0));
    }
  }

  TEST_CASE("huge Gamma ratios never overflow silently") {
    auto f = make_series(kind::PowerKernel{40.0}, 4096);
    for (auto c : f.coeffs()) CHECK(std::isfinite(c.real()));
    CHECK_THROWS_AS(make_series(kind::PowerKernel{200.0}, 4096), ParameterError);
  }

  TEST_CASE("parameter domains") {
    CHECK_THROWS_AS(make_series(kind::ConformalKernel{1.0, 2.0}, 8), ParameterError);
    CHECK_THROWS_AS(make_series(kind::ConformalKernel{0.0, 2.0}, 8), ParameterError);
    CHECK_THROWS_AS(make_series(kind::PowerKernel{0.0}, 8), ParameterError);
    CHECK_THROWS_AS(make_series(kind::PowerKernel{-1.0}, 8), ParameterError);
  }

  TEST_CASE("evaluate examples") {
    CHECK(evaluate(make_series(kind::LogKernel{}, 64), 0.0) == cplx(0.0));
    auto g = evaluate(make_series(kind::GeometricOnes{}, 200), 0.5);
    CHECK(std::abs(g - 2.0) < 1e-12);
    auto m = evaluate(make_series(kind::Monomial{3}, 3), cplx(0.0, 0.5));
    CHECK(std::abs(m - cplx(0.0, -0.125)) < 1e-16);
  }

  TEST_CASE("evaluation beyond the admissible radius is an error") {
    auto f = make_series(kind::GeometricOnes{}, 64);
    const double rm = f.admissible_radius();
    CHECK(rm < 1.0);
    CHECK(f.tail_bound(rm) <= 1e-10 * (1 + 1e-9));
    CHECK_NOTHROW(evaluate(f, rm));
    try {
      evaluate(f, cplx(0.0, std::min(1.0, rm + 0.01)));
      FAIL("expected RadiusError");
    } catch (const RadiusError& e) {
      CHECK(e.admissible() == doctest::Approx(rm));
    }
    // polynomials are exact everywhere on the closed disk
    CHECK(make_series(kind::Monomial{3}, 3).admissible_radius() == 1.0);
  }

  TEST_CASE("admissible radius honours the envelope tail") {
    for (const TestFunctionKind& k :
         std::vector<TestFunctionKind>{kind::LogKernel{}, kind::PowerKernel{0.25}, kind::PowerKernel{2.0},
                                       kind::ConformalKernel{0.9, 2.0}, kind::GeometricOnes{}}) {
      auto f = make_series(k, 512);
      auto ref = make_series(k, 8192);
      const double r = f.admissible_radius();
      const cplx z = std::polar(r, 0.3);
      const cplx exact = oracle::power_sum(std::vector<cplx>(ref.coeffs().begin(), ref.coeffs().end()), z);
      CHECK(std::abs(evaluate(f, z) - exact) <= 1e-10 * (1.0 + 1e-6));
    }
  }

  TEST_CASE("differentiate examples") {
    CHECK(reals(differentiate(make_series(kind::LogKernel{}, 3), 1)) == std::vector<double>{1, 1, 1});
    CHECK(reals(differentiate(make_series(kind::Monomial{2}, 2), 2)) == std::vector<double>{2});
    CHECK(reals(differentiate(make_series(kind::PowerKernel{1.0}, 4), 1)) ==
          std::vector<double>{1, 2, 3, 4});
    CHECK_THROWS_AS(differentiate(make_series(kind::Monomial{1}, 1), 2), ParameterError);
  }

  // k * fl(1/k) is not always 1 in binary64 (k = 237 has no such double at
  // all), so equality is to within one rounding.
  TEST_CASE("derivative of the log kernel is the geometric series") {
    auto d = differentiate(make_series(kind::LogKernel{}, 300), 1);
    auto g = make_series(kind::GeometricOnes{}, 299);
    REQUIRE(d.truncation_order() == g.truncation_order());
    for (std::size_t k = 0; k <= 299; ++k) CHECK(std::abs(d[k] - g[k]) <= 1.2e-16);
  }

  TEST_CASE("partial sums") {
    CHECK(reals(partial_sum_transform(PowerSeries({1.0, 1.0, 1.0}))) == std::vector<double>{1, 2, 3});
    CHECK(reals(partial_sum_transform(make_series(kind::LogKernel{}, 2))) ==
          std::vector<double>{0, 1, 1.5});
    CHECK(reals(partial_sum_transform(PowerSeries({1.0, -1.0, 1.0, -1.0}))) ==
          std::vector<double>{1, 0, 1, 0});
  }

  TEST_CASE("partial_sum_transform is linear") {
    auto f = make_series(kind::LogKernel{}, 256);
    auto g = make_series(kind::ConformalKernel{0.7, 3.0}, 256);
    const cplx al(0.3, -1.2), be(2.5, 0.4);
    auto lhs = partial_sum_transform(linear_combination(al, f, be, g));
    auto pf = partial_sum_transform(f), pg = partial_sum_transform(g);
    for (std::size_t k = 0; k <= 256; ++k)
      CHECK(std::abs(lhs[k] - (al * pf[k] + be * pg[k])) <= 1e-13 * (1 + std::abs(lhs[k])));
  }

  TEST_CASE("nonnegative kinds evaluate monotonically in r") {
    for (const TestFunctionKind& k :
         std::vector<TestFunctionKind>{kind::LogKernel{}, kind::PowerKernel{0.5}, kind::Lacunary{},
                                       kind::ConformalKernel{0.8, 1.0}, kind::GeometricOnes{}}) {
      auto f = make_series(k, 1024);
      double prev = -1.0;
      const double rm = f.admissible_radius();
      for (int j = 0; j <= 50; ++j) {
        const double v = evaluate(f, rm * j / 50.0).real();
        CHECK(v >= prev);
        prev = v;
      }
    }
  }

  TEST_CASE("truncation control against a 2N reference at |z| <= 0.9") {
    const std::size_t N = 512;
    for (const TestFunctionKind& k : std::vector<TestFunctionKind>{
             kind::LogKernel{}, kind::PowerKernel{0.25}, kind::PowerKernel{1.5}, kind::Lacunary{},
             kind::ConformalKernel{0.5, 1.0}, kind::ConformalKernel{0.9, INFINITY},
             kind::GeometricOnes{}, kind::Monomial{7}, kind::Constant{cplx(2.0, -1.0)}}) {
      auto f = make_series(k, N);
      auto ref = make_series(k, 2 * N);
      std::vector<cplx> rc(ref.coeffs().begin(), ref.coeffs().end());
      for (double th : {0.0, 1.0, 2.5}) {
        const cplx z = std::polar(0.9, th);
        const cplx want = oracle::power_sum(rc, z);
        CHECK(std::abs(evaluate(f, z) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
  }
}
