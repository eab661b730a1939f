#include "cesaro/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Mean {
  double value;
  std::size_t nodes;
};

// Mean over [0, 2pi) of a periodic g by the trapezoid rule, doubling the node
// count (reusing old nodes) until successive values agree to tol.
template <class G>
Mean periodic_mean(G&& g, double tol, std::size_t start = 32, std::size_t limit = std::size_t{1} << 22) {
  std::size_t n = start;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += g(2.0 * std::numbers::pi * static_cast<double>(j) / n);
  double prev = sum / static_cast<double>(n);
  while (n < limit) {
    double extra = 0.0;
    for (std::size_t j = 0; j < n; ++j) extra += g(2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / n);
    sum += extra;
    n *= 2;
    const double cur = sum / static_cast<double>(n);
    if (std::fabs(cur - prev) <= tol * std::fabs(cur)) return {cur, n};
    prev = cur;
  }
  throw QuadratureError("periodic trapezoid did not converge", prev);
}

// |1 - rho e^{i theta} conj(w)|^2 with the radial gap formed without cancellation.
double dist2(double gap, double rho_w, double theta, double phi) {
  const double s = std::sin(0.5 * (theta - phi));
  return gap * gap + 4.0 * rho_w * s * s;
}

double log_e_over(double x) { return 1.0 - std::log(x); }  // log(e/x)

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::alpha_below_one:
      return "alpha<1";
    case Regime::alpha_one:
      return "alpha=1";
    case Regime::alpha_above_one:
      return "alpha>1";
    case Regime::case_one:
      return "case1";
    case Regime::case_two:
      return "case2";
    case Regime::degenerate:
      return "degenerate";
  }
  return "unknown";
}

EstimateComparison circle_integral(cplx z, double alpha) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("circle_integral requires |z| < 1");
  if (!std::isfinite(alpha)) throw ParameterError("circle_integral requires a finite alpha");
  const double gap = 1.0 - r, phi = std::arg(z);
  const auto m = periodic_mean([&](double th) { return std::pow(dist2(gap, r, th, phi), -0.5 * alpha); }, 1e-12);
  EstimateComparison out;
  out.computed = 2.0 * std::numbers::pi * m.value;
  out.nodes = m.nodes;
  const double one_minus = (1.0 - r) * (1.0 + r);
  if (alpha < 1.0) {
    out.regime = Regime::alpha_below_one;
    out.asymptotic_form = 1.0;
  } else if (alpha == 1.0) {
    out.regime = Regime::alpha_one;
    out.asymptotic_form = std::log(2.0 / one_minus);
  } else {
    out.regime = Regime::alpha_above_one;
    out.asymptotic_form = std::pow(one_minus, 1.0 - alpha);
  }
  out.ratio = out.computed / out.asymptotic_form;
  return out;
}

EstimateComparison disk_integral(cplx w, cplx a, double t, double r, double delta, double k) {
  const double aw = std::abs(w), aa = std::abs(a);
  if (!(aw < 1.0) || !(aa < 1.0)) throw DomainError("disk_integral requires |w|, |a| < 1");
  if (!(delta > -1.0)) throw ParameterError("disk_integral requires delta > -1");
  if (!(t >= 0.0) || !(r >= 0.0) || !(k >= 0.0)) throw ParameterError("disk_integral requires t, r, k >= 0");

  EstimateComparison out;
  const double inner = std::abs(1.0 - w * std::conj(a));
  if (t + r - delta > 2.0 && t - delta < 2.0 && r - delta < 2.0) {
    out.regime = Regime::case_one;
    out.asymptotic_form = std::pow(inner, -(t + r - delta - 2.0)) * std::pow(log_e_over(inner), k);
  } else if (t - delta > 2.0 && 2.0 > r - delta) {
    out.regime = Regime::case_two;
    out.dimension_n = 1;
    const double g = (1.0 - aw) * (1.0 + aw);
    out.asymptotic_form = std::pow(g, -(t - delta - 2.0)) * std::pow(inner, -r) * std::pow(log_e_over(g), k);
  } else if (t - delta < 2.0 && r - delta < 2.0 && t + r - delta < 2.0) {
    out.regime = Regime::degenerate;
    out.asymptotic_form = 1.0;
  } else {
    std::ostringstream os;
    os << "disk_integral parameters (t=" << t << ", r=" << r << ", delta=" << delta
       << ") fall outside the implemented regimes";
    throw UnsupportedRegimeError(os.str());
  }

  // dA = du dtheta / (2 pi) with u = 1 - |z|^2 = e^{-y}.
  const double pw = std::arg(w), pa = std::arg(a);
  std::size_t nodes = 0;
  auto radial = [&](double y) {
    const double u = std::exp(-y);
    const double rho = std::sqrt(-std::expm1(-y));
    const double one_minus_rho = u / (1.0 + rho);
    const double gw = (1.0 - aw) + aw * one_minus_rho, ga = (1.0 - aa) + aa * one_minus_rho;
    const auto m = periodic_mean(
        [&](double th) {
          double v = 1.0;
          if (t != 0.0) v *= std::pow(dist2(gw, rho * aw, th, pw), -0.5 * t);
          if (r != 0.0) v *= std::pow(dist2(ga, rho * aa, th, pa), -0.5 * r);
          return v;
        },
        1e-12, 16);
    nodes = std::max(nodes, m.nodes);
    double v = std::exp(-(delta + 1.0) * y) * m.value;
    if (k != 0.0) v *= std::pow(1.0 + y, k);
    return v;
  };
  quad::PanelOptions po;
  auto res = quad::integrate_panels(radial, po);
  if (!res.converged) throw QuadratureError("disk_integral radial quadrature did not converge", res.value);
  out.computed = res.value;
  out.nodes = nodes;
  out.ratio = out.computed / out.asymptotic_form;
  return out;
}

Prop31Report prop31_suprema(const RadialMeasure& m, double beta, double gamma, double q, double s, int w_depth,
                            unsigned threads) {
  if (!(beta > 0.0)) throw ParameterError("prop31_suprema requires beta > 0");
  if (!(gamma >= 0.0)) throw ParameterError("prop31_suprema requires gamma >= 0");
  if (!(q >= 0.0 && q < s)) throw ParameterError("prop31_suprema requires 0 <= q < s");
  if (w_depth < 8) throw ParameterError("prop31_suprema requires w_depth >= 8");
  const double e = s + beta - q;

  // which: 1, 2 or 3. For real w >= 0, |1 - wt| = (1 - w) + w u.
  auto evaluate_s = [&](int which, cplx w, double gap) {
    const double aw = std::abs(w);
    const double lw_log = gamma == 0.0 ? 0.0 : gamma * std::log(log_e_over(gap));
    const bool real_w = w.imag() == 0.0 && w.real() >= 0.0;
    auto res = integrate(m, [&](const MeasurePoint& p) {
      double lden;
      if (which == 2 && !real_w)
        lden = std::log(std::abs(1.0 - w * p.t));
      else
        lden = std::log(gap + aw * p.u);
      double l = beta * std::log(gap) + q * p.x - e * lden + p.log_weight;
      if (which == 3)
        l += gamma == 0.0 ? 0.0 : gamma * std::log1p(p.x);
      else
        l += lw_log;
      return std::exp(l);
    });
    return res.converged ? res.value : kInf;
  };

  Prop31Report rep;
  const std::size_t n = static_cast<std::size_t>(w_depth);
  std::vector<double> gaps(n), x(n);
  for (std::size_t j = 0; j < n; ++j) {
    gaps[j] = std::exp2(-0.5 * static_cast<double>(j + 1));
    x[j] = -std::log(gaps[j]);
  }
  SupremumReport* out[3] = {&rep.s1, &rep.s2, &rep.s3};
  for (auto* o : out) {
    o->grid.resize(n);
    o->values.resize(n);
  }
  rep.tail_lower_bound.resize(n);
  parallel_for(n, threads, [&](std::size_t j) {
    const double w = 1.0 - gaps[j];
    for (int which = 1; which <= 3; ++which) {
      out[which - 1]->grid[j] = w;
      out[which - 1]->values[j] = evaluate_s(which, w, gaps[j]);
    }
    double lb = tail_mass(m, w) / std::pow(gaps[j], s);
    if (gamma != 0.0) lb *= std::pow(log_e_over(gaps[j]), gamma);
    rep.tail_lower_bound[j] = lb;
  });
  for (double rho : {0.5, 0.9}) {
    for (int k = 0; k < 8; ++k) {
      const cplx w = std::polar(rho, 2.0 * std::numbers::pi * k / 8.0);
      rep.s2.ring.push_back(w);
      rep.s2.ring_values.push_back(evaluate_s(2, w, 1.0 - rho));
    }
  }
  for (auto* o : out) {
    o->trend = classify_trend(x, o->values);
    o->sup = o->trend.sup;
    for (double v : o->ring_values) o->sup = std::max(o->sup, v);
  }
  return rep;
}

}  // namespace cesaro
