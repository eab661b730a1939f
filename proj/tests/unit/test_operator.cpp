#include <doctest.h>

#include <cmath>
#include <thread>

#include "cesaro/error.hpp"
#include "cesaro/operator.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

std::vector<RadialMeasure> builtin_measures() {
  return {RadialMeasure::atoms({{0.0, 0.3}, {0.5, 1.0}, {0.9, 0.25}}), RadialMeasure::beta_log(1.5, 0.0),
          RadialMeasure::lebesgue(),
          RadialMeasure::sum({RadialMeasure::beta_log(0.75, 1.0), RadialMeasure::atoms({{0.7, 0.5}})})};
}

std::vector<TestFunctionKind> corpus() {
  return {kind::ConformalKernel{0.9, 2.0}, kind::LogKernel{}, kind::PowerKernel{0.5}, kind::Lacunary{},
          kind::GeometricOnes{}};
}

}  // namespace

TEST_SUITE("operator") {
  TEST_CASE("apply examples") {
    OperatorInstance leb(RadialMeasure::lebesgue());
    auto one = apply(leb, make_series(kind::GeometricOnes{}, 64));
    for (auto c : one.coeffs()) CHECK(std::abs(c - 1.0) < 1e-15);

    OperatorInstance dirac(RadialMeasure::atoms({{0.0, 1.0}}));
    auto f = make_series(kind::ConformalKernel{0.5, 1.0}, 10);
    auto g = apply(dirac, f);
    CHECK(g[0] == f[0]);
    for (std::size_t k = 1; k <= 10; ++k) CHECK(g[k] == cplx(0.0));

    auto h = apply(leb, make_series(kind::LogKernel{}, 4));
    const double want[] = {0.0, 0.5, 0.5, 11.0 / 24.0, 5.0 / 12.0};
    for (std::size_t k = 0; k <= 4; ++k) CHECK(h[k].real() == doctest::Approx(want[k]).epsilon(1e-15));
  }

  TEST_CASE("classical Cesaro operator against a harmonic oracle") {
    OperatorInstance leb(RadialMeasure::lebesgue());
    auto h = apply(leb, make_series(kind::LogKernel{}, 500));
    for (std::size_t n : {1u, 10u, 77u, 500u})
      CHECK(h[n].real() == doctest::Approx(oracle::harmonic(n) / (n + 1.0)).epsilon(1e-14));
  }

  TEST_CASE("apply_integral examples") {
    auto dirac = RadialMeasure::atoms({{0.0, 1.0}});
    CHECK(apply_integral(dirac, make_series(kind::LogKernel{}, 256), 0.7) == cplx(0.0));
    auto c = apply_integral(RadialMeasure::lebesgue(), make_series(kind::Constant{1.0}, 0), 0.5);
    CHECK(std::abs(c - 2.0 * std::log(2.0)) < 1e-14);
    auto g = apply_integral(RadialMeasure::lebesgue(), make_series(kind::GeometricOnes{}, 512), 0.5);
    CHECK(std::abs(g - 2.0) < 1e-8);
  }

  TEST_CASE("apply_integral against tanh-sinh") {
    auto f = make_series(kind::ConformalKernel{0.8, 2.0}, 1024);
    const cplx z(0.3, 0.6);
    auto want = oracle::integrate_density_c(
        [&](double t, double) {
          const cplx tz = t * z;
          return std::pow(1.0 - 0.8 * tz, -1.5) * 0.2 / (1.0 - tz);
        },
        0.75, 1.0, 1.0);
    CHECK(std::abs(apply_integral(RadialMeasure::beta_log(0.75, 1.0), f, z) - want) < 1e-11);
  }

  TEST_CASE("derivative_at examples") {
    auto dirac = RadialMeasure::atoms({{0.0, 1.0}});
    CHECK(derivative_at(dirac, make_series(kind::LogKernel{}, 256), cplx(0.2, 0.3), 1) == cplx(0.0));
    auto d = derivative_at(RadialMeasure::lebesgue(), make_series(kind::Constant{1.0}, 0), 0.5, 1);
    // int_0^1 t/(1-t/2)^2 dt = 4(1 - ln 2), also d/dz[-log(1-z)/z] at z = 1/2
    const double want = oracle::integrate01([](double t, double) { return t / ((1 - 0.5 * t) * (1 - 0.5 * t)); });
    CHECK(want == doctest::Approx(4.0 * (1.0 - std::log(2.0))).epsilon(1e-14));
    CHECK(std::abs(d - want) < 1e-14);
    OperatorInstance leb(RadialMeasure::lebesgue());
    auto f = make_series(kind::GeometricOnes{}, 512);
    auto coef = evaluate(differentiate(apply(leb, f), 1), 0.3);
    CHECK(std::abs(derivative_at(RadialMeasure::lebesgue(), f, 0.3, 1) - coef) < 1e-8);
  }

  TEST_CASE("second derivative matches the coefficient side") {
    for (const auto& m : builtin_measures()) {
      OperatorInstance op(m);
      auto f = make_series(kind::PowerKernel{0.5}, 2048);
      const cplx z(0.5, -0.3);
      auto coef = evaluate(differentiate(apply(op, f), 2), z);
      CHECK(std::abs(derivative_at(m, f, z, 2) - coef) <= 1e-9 * (1.0 + std::abs(coef)));
    }
  }

  TEST_CASE("derivative consistency with central differences") {
    auto f = make_series(kind::LogKernel{}, 2048);
    for (const auto& m : builtin_measures()) {
      for (cplx z : {cplx(0.3), cplx(0.8), cplx(0.4, 0.4), cplx(-0.6, 0.2)}) {
        const double h = 1e-5 * (1.0 - std::abs(z));
        const cplx fd =
            (apply_integral(m, f, z + h) - apply_integral(m, f, z - h)) / (2.0 * h);
        const cplx d1 = derivative_at(m, f, z, 1);
        CHECK(std::abs(d1 - fd) <= 1e-5 * std::abs(d1));
        // a second difference at this step loses too much to rounding, so
        // order 2 is checked as the central difference of order 1
        const cplx fd2 = (derivative_at(m, f, z + h, 1) - derivative_at(m, f, z - h, 1)) / (2.0 * h);
        const cplx d2 = derivative_at(m, f, z, 2);
        CHECK(std::abs(d2 - fd2) <= 1e-5 * std::abs(d2));
      }
    }
  }

  TEST_CASE("representation residual examples") {
    std::vector<cplx> radial;
    for (int j = 0; j <= 9; ++j) radial.push_back(0.1 * j);
    CHECK(representation_residual(RadialMeasure::lebesgue(), make_series(kind::LogKernel{}, 1024), radial) < 1e-8);
    std::vector<cplx> half{0.5};
    CHECK(representation_residual(RadialMeasure::atoms({{0.5, 1.0}}), make_series(kind::Monomial{2}, 2), half) <
          1e-15);
    std::vector<cplx> to08;
    for (int j = 0; j <= 8; ++j) to08.push_back(0.1 * j);
    CHECK(representation_residual(RadialMeasure::beta_log(1.5, 0.0), make_series(kind::GeometricOnes{}, 2048),
                                  to08) < 1e-7);
  }

  TEST_CASE("representation identity across measures and corpus") {
    std::vector<cplx> grid;
    for (double r : {0.0, 0.4, 0.8})
      for (int k = 0; k < 4; ++k) grid.push_back(std::polar(r, 0.5 + 1.5 * k));
    for (const auto& m : builtin_measures())
      for (const auto& k : corpus())
        CHECK(representation_residual(m, make_series(k, 2048), grid) <= 1e-7);
  }

  TEST_CASE("linearity and positivity") {
    OperatorInstance op(RadialMeasure::beta_log(0.75, 1.0));
    auto f = make_series(kind::LogKernel{}, 300), g = make_series(kind::ConformalKernel{0.6, 0.5}, 300);
    const cplx a(1.5, -0.5), b(-2.0, 0.25);
    auto lhs = apply(op, linear_combination(a, f, b, g));
    auto af = apply(op, f), ag = apply(op, g);
    for (std::size_t k = 0; k <= 300; ++k)
      CHECK(std::abs(lhs[k] - (a * af[k] + b * ag[k])) <= 1e-14 * (1.0 + std::abs(lhs[k])));
    for (const auto& kk : corpus()) CHECK(apply(op, make_series(kk, 300)).nonnegative_coefficients());
  }

  TEST_CASE("radius errors") {
    auto f = make_series(kind::GeometricOnes{}, 64);
    CHECK_THROWS_AS(apply_integral(RadialMeasure::lebesgue(), f, 0.99), RadiusError);
    CHECK_THROWS_AS(derivative_at(RadialMeasure::lebesgue(), f, 0.99, 1), RadiusError);
    CHECK_THROWS_AS(derivative_at(RadialMeasure::lebesgue(), f, 0.1, 3), ParameterError);
  }

  TEST_CASE("moment cache is append-only and thread safe") {
    OperatorInstance op(RadialMeasure::beta_log(0.5, 1.0));
    auto small = op.moments(50);
    std::vector<std::thread> pool;
    std::vector<MomentSequence> got(4);
    for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { got[i] = op.moments(100 + 50 * i); });
    for (auto& t : pool) t.join();
    CHECK(op.cached_order() >= 250);
    auto cold = moments(RadialMeasure::beta_log(0.5, 1.0), 250);
    for (const auto& s : got)
      for (std::size_t n = 0; n < s.size(); ++n) CHECK(s.values[n] == cold.values[n]);
    for (std::size_t n = 0; n <= 50; ++n) CHECK(small.values[n] == cold.values[n]);
  }
}
