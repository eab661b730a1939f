#include "cesaro/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cesaro/error.hpp"

namespace cesaro {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent_bounded:
      return "consistent_bounded";
    case Verdict::consistent_vanishing:
      return "consistent_vanishing";
    case Verdict::growing:
      return "growing";
  }
  return "unknown";
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DegenerateFitError("line fit needs two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DegenerateFitError("line fit abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

Trend classify_trend(std::span<const double> x, std::span<const double> values) {
  if (x.size() != values.size() || x.size() < 4)
    throw ParameterError("trend classification needs at least four grid points");
  Trend t;
  for (double v : values) t.sup = std::max(t.sup, v);
  const std::size_t begin = values.size() / 2;
  const auto wx = x.subspan(begin);
  const auto wv = values.subspan(begin);

  if (std::any_of(wv.begin(), wv.end(), [](double v) { return std::isinf(v); })) {
    t.slope = std::numeric_limits<double>::infinity();
    t.verdict = Verdict::growing;
    return t;
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (wv[i] > 0.0) {
      lx.push_back(wx[i]);
      ly.push_back(std::log(wv[i]));
    }
  }
  if (lx.empty()) {
    t.verdict = Verdict::consistent_vanishing;
    return t;
  }
  if (lx.size() >= 2) t.slope = fit_line(lx, ly).slope;

  bool decreasing = true;
  for (std::size_t i = 1; i < wv.size(); ++i) decreasing = decreasing && wv[i] < wv[i - 1];
  if (t.slope > kSlopeThreshold)
    t.verdict = Verdict::growing;
  else if (t.slope < -kSlopeThreshold || (decreasing && wv.back() < kVanishFraction * t.sup))
    t.verdict = Verdict::consistent_vanishing;
  else
    t.verdict = Verdict::consistent_bounded;
  return t;
}

}  // namespace cesaro
