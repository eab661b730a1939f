#include <doctest.h>

#include <cmath>

#include "cesaro/carleson.hpp"
#include "cesaro/error.hpp"
#include "oracles.hpp"

using namespace cesaro;

TEST_SUITE("carleson") {
  TEST_CASE("line fit recovers an exact line") {
    std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
    auto f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.residual < 1e-14);
    CHECK_THROWS_AS(fit_line(std::vector<double>{1, 1}, std::vector<double>{0, 1}), DegenerateFitError);
  }

  TEST_CASE("trend verdicts") {
    std::vector<double> x, flat, up, down, zero;
    for (int j = 1; j <= 20; ++j) {
      x.push_back(0.5 * j * std::log(2.0));
      flat.push_back(3.0);
      up.push_back(std::exp(0.5 * x.back()));
      down.push_back(std::exp(-0.5 * x.back()));
      zero.push_back(j < 3 ? 1.0 : 0.0);
    }
    CHECK(classify_trend(x, flat).verdict == Verdict::consistent_bounded);
    auto g = classify_trend(x, up);
    CHECK(g.verdict == Verdict::growing);
    CHECK(g.slope == doctest::Approx(0.5));
    CHECK(classify_trend(x, down).verdict == Verdict::consistent_vanishing);
    CHECK(classify_trend(x, zero).verdict == Verdict::consistent_vanishing);
    up.back() = INFINITY;
    CHECK(classify_trend(x, up).verdict == Verdict::growing);
  }

  TEST_CASE("tail statistic examples") {
    auto leb = tail_statistic(RadialMeasure::beta_log(1.0, 0.0, 1.0), 1.0, 0.0, 30);
    for (double v : leb.statistic) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(leb.verdict == Verdict::consistent_bounded);
    CHECK(leb.grid.size() == 30);
    CHECK(leb.grid[1] == doctest::Approx(0.5));

    auto half = tail_statistic(RadialMeasure::beta_log(0.5, 0.0), 1.0, 0.0, 30);
    CHECK(half.trend_slope == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(half.verdict == Verdict::growing);

    auto van = tail_statistic(RadialMeasure::beta_log(1.5, 0.0), 1.0, 0.0, 30);
    CHECK(van.verdict == Verdict::consistent_vanishing);
    CHECK(van.statistic.back() < 0.2 * van.sup_statistic);
  }

  TEST_CASE("tail statistic with a log weight against the tanh-sinh tail") {
    // log-weighted density, s = 0.75, gamma = 1, probed at t = 0.75, beta = 1
    auto rep = tail_statistic(RadialMeasure::beta_log(0.75, 1.0), 0.75, 1.0, 24);
    for (std::size_t i = 0; i < rep.grid.size(); i += 5) {
      const double a = rep.grid[i];
      const double gap = std::exp2(-0.5 * double(i + 1));
      const double tail = oracle::integrate_a1(
          [](double, double u) { return oracle::beta_log_density(0.75, 1.0, 1.0, u); }, a);
      CHECK(rep.statistic[i] ==
            doctest::Approx(tail * (1.0 - std::log(gap)) / std::pow(gap, 0.75)).epsilon(1e-8));
    }
    CHECK(rep.verdict != Verdict::growing);
  }

  TEST_CASE("sup statistic is the grid maximum") {
    auto rep = tail_statistic(RadialMeasure::atoms({{0.3, 1.0}, {0.9, 0.5}}), 1.0, 0.0, 16);
    double mx = 0.0;
    for (double v : rep.statistic) mx = std::max(mx, v);
    CHECK(rep.sup_statistic == mx);
    // the tail is empty past the last atom
    CHECK(rep.verdict == Verdict::consistent_vanishing);
  }

  TEST_CASE("moment decay fit examples") {
    auto leb = moment_decay_fit(moments(RadialMeasure::lebesgue(), 4096));
    CHECK(std::fabs(leb.s_hat - 1.0) < 0.02);
    auto b = moment_decay_fit(moments(RadialMeasure::beta_log(1.5, 0.0), 4096));
    CHECK(std::fabs(b.s_hat - 1.5) < 0.05);
    CHECK_THROWS_AS(moment_decay_fit(moments(RadialMeasure::atoms({{0.5, 1.0}}), 4096)), DegenerateFitError);
    CHECK_THROWS_AS(moment_decay_fit(moments(RadialMeasure::lebesgue(), 100)), ParameterError);
  }

  TEST_CASE("regression slope against an independent fit") {
    auto seq = moments(RadialMeasure::beta_log(2.0, 0.0), 1024);
    std::vector<double> x, y;
    for (std::size_t n = 256; n <= 1024; ++n) {
      x.push_back(std::log(double(n)));
      y.push_back(std::log(seq.values[n]));
    }
    CHECK(moment_decay_fit(seq).s_hat == doctest::Approx(-oracle::slope(x, y)).epsilon(1e-10));
  }

  TEST_CASE("log moment decay fit examples") {
    auto g1 = log_moment_decay_fit(moments(RadialMeasure::beta_log(1.0, 1.0), 4096), 1.0);
    CHECK(std::fabs(g1.trend) < kSlopeThreshold);
    CHECK(std::isfinite(g1.c_hat));
    auto leb = log_moment_decay_fit(moments(RadialMeasure::lebesgue(), 4096), 1.0);
    CHECK(leb.trend > kSlopeThreshold);
    // mu_n n log n = log n (1 + o(1)): slope against log log n is one
    CHECK(leb.trend * std::log(2048.0) == doctest::Approx(1.0).epsilon(0.05));
    auto dirac = log_moment_decay_fit(moments(RadialMeasure::atoms({{0.0, 1.0}}), 4096), 1.0);
    CHECK(dirac.all_zero);
    CHECK(dirac.c_hat == 0.0);
  }

  TEST_CASE("blasco statistic examples") {
    auto b2 = blasco_statistic(moments(RadialMeasure::beta_log(2.0, 0.0), 4096));
    CHECK(std::isfinite(b2.sup_value));
    CHECK(b2.trend.verdict != Verdict::growing);
    auto leb = blasco_statistic(moments(RadialMeasure::lebesgue(), 4096));
    CHECK(leb.trend.verdict == Verdict::growing);
    CHECK(leb.trend.slope == doctest::Approx(2.0).epsilon(0.05));
    auto dirac = blasco_statistic(moments(RadialMeasure::atoms({{0.0, 1.0}}), 4096));
    CHECK(dirac.sup_value == 1.0);
    CHECK(dirac.argmax_n == 0);
  }

  TEST_CASE("blasco statistic against a direct sum") {
    // mu_n = 1/((n+1)(n+2)) for 2(1-t) dt; sum of squares has no closed form
    // but a direct 10^6-term sum is far past the extrapolation point.
    auto seq = moments(RadialMeasure::beta_log(2.0, 0.0, 2.0), 1024);
    auto got = blasco_statistic(seq);
    for (std::size_t n : {0u, 17u, 300u, 512u}) {
      double s = 0.0;
      for (std::size_t k = 4000000; k-- > n;) {
        const double v = 2.0 / ((k + 1.0) * (k + 2.0));
        s += v * v;
      }
      const double want = std::pow(n + 1.0, 3) * s;
      CHECK(want <= got.sup_value * (1 + 1e-6));
      // the fitted exponent sits a little below 2 at M = 1024, so the tail is slightly high
      if (n == got.argmax_n) CHECK(got.sup_value == doctest::Approx(want).epsilon(1e-3));
    }
  }

  TEST_CASE("unreliable tail is refused") {
    // geometric decay that has not underflowed by M does not fit a power law
    CHECK_THROWS_AS(blasco_statistic(moments(RadialMeasure::atoms({{0.99, 1.0}}), 1024)),
                    UnreliableTailError);
  }

  TEST_CASE("scaling equivariance") {
    const auto m = RadialMeasure::beta_log(1.25, 1.0);
    const auto s = m.scaled(3.0);
    auto a = tail_statistic(m, 1.0, 1.0, 20), b = tail_statistic(s, 1.0, 1.0, 20);
    for (std::size_t i = 0; i < a.statistic.size(); ++i)
      CHECK(b.statistic[i] == doctest::Approx(3.0 * a.statistic[i]).epsilon(1e-12));
    CHECK(a.verdict == b.verdict);
    const auto ma = moments(m, 1024), mb = moments(s, 1024);
    CHECK(moment_decay_fit(ma).s_hat == doctest::Approx(moment_decay_fit(mb).s_hat).epsilon(1e-12));
    CHECK(log_moment_decay_fit(mb, 1.25).c_hat ==
          doctest::Approx(3.0 * log_moment_decay_fit(ma, 1.25).c_hat).epsilon(1e-12));
    CHECK(blasco_statistic(mb).sup_value == doctest::Approx(9.0 * blasco_statistic(ma).sup_value).epsilon(1e-10));
  }

  TEST_CASE("tail and moment classifiers agree for Beta measures") {
    for (double s : {0.5, 1.0, 1.5, 2.0}) {
      auto m = RadialMeasure::beta_log(s, 0.0);
      CHECK(tail_statistic(m, s, 0.0).verdict == Verdict::consistent_bounded);
      CHECK(std::fabs(moment_decay_fit(moments(m, 4096)).s_hat - s) < 0.05);
    }
  }

  TEST_CASE("bounded at t implies vanishing below t - 0.1") {
    for (const auto& m : {RadialMeasure::lebesgue(), RadialMeasure::beta_log(0.75, 1.0),
                          RadialMeasure::beta_log(1.5, -1.0), RadialMeasure::beta_log(2.0, 0.0)}) {
      for (double t : {0.5, 0.75, 1.0, 1.5, 2.0}) {
        if (tail_statistic(m, t, 0.0).verdict != Verdict::consistent_bounded) continue;
        for (double tp : {t - 0.11, t - 0.25, t - 0.4})
          if (tp > 0.0) CHECK(tail_statistic(m, tp, 0.0).verdict == Verdict::consistent_vanishing);
      }
    }
  }
}
