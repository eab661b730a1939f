#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace cesaro::quad {

// 32-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre32 {
  std::array<double, 32> node;
  std::array<double, 32> weight;
};
const GaussLegendre32& gauss_legendre_32();

// Panels live in x = log(1/(1-t)): the dyadic t-panels [1-2^-j, 1-2^-(j+1)] are
// the unit-ln2 x-panels. Past the dyadic budget, panel widths double.
struct PanelOptions {
  double x_begin = 0.0;
  double relative_cutoff = 1e-15;
  int dyadic_panels = 60;
  int extension_panels = 64;
  // Panels ending before this x are known to contribute nothing and are skipped.
  double skip_before = 0.0;
};

template <class R>
struct PanelResult {
  R value{};
  double error = 0.0;
  bool converged = false;
  int panels = 0;
};

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

// Integrates h over [x_begin, inf). h receives the panel node x.
template <class F>
auto integrate_panels(F&& h, const PanelOptions& opt = {}) -> PanelResult<decltype(h(0.0))> {
  using R = decltype(h(0.0));
  const auto& gl = gauss_legendre_32();
  PanelResult<R> res;
  R acc{};
  double acc_mag = 0.0;  // running sum of |contributions|, for the rounding term
  double prev = -1.0;
  double lo = opt.x_begin;
  double width = std::numbers::ln2;
  const int total = opt.dyadic_panels + opt.extension_panels;
  for (int j = 0; j < total; ++j) {
    if (j >= opt.dyadic_panels) width *= 2.0;
    const double hi = lo + width;
    R contrib{};
    if (hi > opt.skip_before) {
      const double mid = 0.5 * (lo + hi), half = 0.5 * width;
      for (int i = 0; i < 32; ++i) contrib += gl.weight[i] * h(mid + half * gl.node[i]);
      contrib *= half;
    }
    const double cm = magnitude(contrib);
    if (!std::isfinite(cm)) {
      res.value = acc;
      res.panels = j + 1;
      res.error = std::numeric_limits<double>::infinity();
      return res;
    }
    acc += contrib;
    acc_mag += cm;
    res.panels = j + 1;
    const double am = magnitude(acc);
    if (am > 0.0 && prev >= 0.0 && cm <= opt.relative_cutoff * am && cm <= prev) {
      res.value = acc;
      res.converged = true;
      res.error = cm + prev + 64.0 * 2.2e-16 * acc_mag;
      return res;
    }
    if (am == 0.0 && j + 1 >= opt.dyadic_panels) {
      res.value = acc;
      res.converged = true;
      return res;
    }
    prev = cm;
    lo = hi;
  }
  res.value = acc;
  res.error = prev;
  return res;
}

}  // namespace cesaro::quad
