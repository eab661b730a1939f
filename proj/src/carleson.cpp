#include "cesaro/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

namespace {

constexpr double kMaxTailResidual = 0.1;

struct Window {
  std::size_t lo, hi;  // inclusive
};

Window fit_window(const MomentSequence& moms, std::size_t min_size) {
  if (moms.size() == 0 || moms.size() - 1 < min_size) {
    std::ostringstream os;
    os << "moment fit needs M >= " << min_size << ", got M = " << (moms.size() ? moms.size() - 1 : 0);
    throw ParameterError(os.str());
  }
  const std::size_t M = moms.size() - 1;
  return {M / 4, M};
}

}  // namespace

std::vector<double> carleson_gaps(int depth) {
  std::vector<double> g(static_cast<std::size_t>(depth));
  for (int j = 1; j <= depth; ++j) g[j - 1] = std::exp2(-0.5 * j);
  return g;
}

CarlesonReport tail_statistic(const RadialMeasure& m, double t, double beta, int depth, unsigned threads) {
  if (!(t > 0.0)) throw ParameterError("tail_statistic requires t > 0");
  if (!(beta >= 0.0)) throw ParameterError("tail_statistic requires beta >= 0");
  if (depth < 8) throw ParameterError("tail_statistic requires depth >= 8");
  CarlesonReport rep;
  rep.target_exponent = t;
  rep.log_exponent = beta;
  const auto gaps = carleson_gaps(depth);
  rep.grid.resize(gaps.size());
  rep.statistic.resize(gaps.size());
  std::vector<double> x(gaps.size());
  parallel_for(gaps.size(), threads, [&](std::size_t i) {
    const double gap = gaps[i];
    const double a = 1.0 - gap;
    const double lg = -std::log(gap);
    rep.grid[i] = a;
    x[i] = lg;
    double v = tail_mass(m, a) / std::pow(gap, t);
    if (beta != 0.0) v *= std::pow(1.0 + lg, beta);
    rep.statistic[i] = v;
  });
  const Trend tr = classify_trend(x, rep.statistic);
  rep.sup_statistic = tr.sup;
  rep.trend_slope = tr.slope;
  rep.verdict = tr.verdict;
  return rep;
}

MomentFit moment_decay_fit(const MomentSequence& moms) {
  const auto w = fit_window(moms, 256);
  std::vector<double> lx, ly;
  for (std::size_t n = w.lo; n <= w.hi; ++n) {
    if (!(moms.values[n] > 0.0))
      throw DegenerateFitError("zero moment in fit window: decay is faster than every power");
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(moms.values[n]));
  }
  const auto f = fit_line(lx, ly);
  return {-f.slope, f.residual};
}

LogMomentFit log_moment_decay_fit(const MomentSequence& moms, double s) {
  if (!(s > 0.0)) throw ParameterError("log_moment_decay_fit requires s > 0");
  const auto w = fit_window(moms, 256);
  LogMomentFit out;
  std::vector<double> lx, ly;
  for (std::size_t n = w.lo; n <= w.hi; ++n) {
    const double nd = static_cast<double>(n);
    const double v = moms.values[n] * std::pow(nd, s) * std::log(nd + 1.0);
    out.c_hat = std::max(out.c_hat, v);
    if (v > 0.0) {
      lx.push_back(std::log(nd));
      ly.push_back(std::log(v));
    }
  }
  out.all_zero = lx.empty();
  if (lx.size() >= 2) out.trend = fit_line(lx, ly).slope;
  return out;
}

BlascoResult blasco_statistic(const MomentSequence& moms) {
  const auto w = fit_window(moms, 512);
  const std::size_t M = w.hi;
  const auto& mu = moms.values;

  // Tail beyond M from the fitted power law C k^-s.
  double tail = 0.0;
  double s_fit = std::numeric_limits<double>::infinity();
  const bool underflowed =
      std::any_of(mu.begin() + w.lo, mu.begin() + w.hi + 1, [](double v) { return !(v > 0.0); });
  if (!underflowed) {
    const auto fit = moment_decay_fit(moms);
    if (fit.residual > kMaxTailResidual) {
      std::ostringstream os;
      os << "moment power-law fit residual " << fit.residual << " exceeds " << kMaxTailResidual
         << "; tail beyond M cannot be extrapolated";
      throw UnreliableTailError(os.str());
    }
    s_fit = fit.s_hat;
    if (s_fit <= 0.5) {
      tail = std::numeric_limits<double>::infinity();
    } else {
      const double C = mu[M] * std::pow(static_cast<double>(M), s_fit);
      tail = C * C * std::pow(static_cast<double>(M) + 0.5, 1.0 - 2.0 * s_fit) / (2.0 * s_fit - 1.0);
    }
  }

  // Suffix sums from the top so small terms are added first.
  std::vector<double> suffix(M + 2);
  suffix[M + 1] = tail;
  for (std::size_t k = M + 1; k-- > 0;) suffix[k] = suffix[k + 1] + mu[k] * mu[k];

  BlascoResult out;
  out.tail_exponent = s_fit;
  auto stat = [&](std::size_t n) {
    const double n1 = static_cast<double>(n) + 1.0;
    return n1 * n1 * n1 * suffix[n];
  };
  for (std::size_t n = 0; n <= M / 2; ++n) {
    const double v = stat(n);
    if (v > out.sup_value || n == 0) {
      out.sup_value = v;
      out.argmax_n = n;
    }
  }
  std::vector<double> x, v;
  std::size_t last = static_cast<std::size_t>(-1);
  for (int j = 0;; ++j) {
    const auto n = static_cast<std::size_t>(std::floor(std::exp2(0.5 * j)));
    if (n > M / 2) break;
    if (n == last) continue;
    last = n;
    x.push_back(std::log(static_cast<double>(n)));
    v.push_back(stat(n));
  }
  out.trend = classify_trend(x, v);
  return out;
}

}  // namespace cesaro
