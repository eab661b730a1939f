#include "cesaro/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "cesaro/error.hpp"
#include "cesaro/fft.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

namespace {

double radial_cap(double r_max, int depth) { return std::min(r_max, 1.0 - std::exp2(-0.5 * depth)); }

// f^(order) with the convention that low-degree polynomials differentiate to 0.
PowerSeries derivative(const PowerSeries& f, int order) {
  if (f.is_polynomial() && f.truncation_order() < static_cast<std::size_t>(order))
    return PowerSeries(std::vector<cplx>{0.0});
  return differentiate(f, order);
}

double max_abs_on_circle(const PowerSeries& f, double r) {
  const auto v = fft::sample_circle(f.coeffs(), r, fft::circle_nodes(f.truncation_order()));
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double mean_of_samples(const std::vector<cplx>& v, double p) {
  double mx = 0.0;
  for (const auto& z : v) mx = std::max(mx, std::abs(z));
  if (std::isinf(p) || mx == 0.0) return mx;
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& z : v) acc += std::norm(z / mx);
    return mx * std::sqrt(acc / static_cast<double>(v.size()));
  }
  for (const auto& z : v) acc += std::pow(std::abs(z) / mx, p);
  return mx * std::pow(acc / static_cast<double>(v.size()), 1.0 / p);
}

template <class F>
NormEstimate radial_sup(double r_cap, double offset, std::string description, std::size_t angles,
                        const NormOptions& opt, F&& at) {
  NormEstimate est;
  est.grid.description = std::move(description);
  est.grid.radii = radial_grid(r_cap);
  est.grid.angles = angles;
  const auto& radii = est.grid.radii;
  std::vector<double> vals(radii.size());
  parallel_for(radii.size(), opt.threads, [&](std::size_t i) { vals[i] = at(radii[i]); });
  double sup = 0.0;
  std::vector<double> x(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    est.profile.emplace_back(radii[i], vals[i]);
    sup = std::max(sup, vals[i]);
    x[i] = -std::log1p(-radii[i]);
  }
  est.value = offset + sup;
  if (vals.size() >= 2) {
    const double a = vals[vals.size() - 1], b = vals[vals.size() - 2];
    est.converged = std::fabs(a - b) <= 0.02 * std::max(std::fabs(a), std::fabs(b));
  }
  if (vals.size() >= 4) est.trend = classify_trend(x, vals);
  return est;
}

std::string grid_text(const char* what, double r_cap, std::size_t angles) {
  std::ostringstream os;
  os.precision(15);
  os << what << ": r in {0, 1-2^(-j/4)} up to " << r_cap << ", " << angles << " angle(s)";
  return os.str();
}

}  // namespace

void validate(const SpaceSpec& s) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, space::Hardy>) {
          if (!(v.p > 0.0)) throw ParameterError("Hardy space requires p > 0");
        } else if constexpr (std::is_same_v<T, space::BlochType>) {
          if (!(v.alpha > 0.0) || std::isinf(v.alpha)) throw ParameterError("Bloch-type space requires alpha > 0");
        } else if constexpr (std::is_same_v<T, space::Morrey>) {
          if (!(v.lambda > 0.0 && v.lambda <= 1.0)) throw ParameterError("Morrey space requires 0 < lambda <= 1");
        } else {
          if (!(v.p >= 1.0) || std::isinf(v.p)) throw ParameterError("mean Lipschitz space requires 1 <= p < inf");
          if (!(v.alpha > 0.0 && v.alpha <= 1.0))
            throw ParameterError("mean Lipschitz space requires 0 < alpha <= 1");
        }
      },
      s);
}

std::string describe(const SpaceSpec& s) {
  std::ostringstream os;
  os.precision(15);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, space::Hardy>)
          os << "hardy(p=" << v.p << ")";
        else if constexpr (std::is_same_v<T, space::BlochType>)
          os << "bloch(alpha=" << v.alpha << ")";
        else if constexpr (std::is_same_v<T, space::Morrey>)
          os << "morrey(lambda=" << v.lambda << ")";
        else
          os << "mean_lipschitz(p=" << v.p << ",alpha=" << v.alpha << ")";
      },
      s);
  return os.str();
}

std::vector<double> radial_grid(double r_cap) {
  if (!(r_cap >= 0.0 && r_cap < 1.0)) throw ParameterError("radial grid cap must lie in [0, 1)");
  std::vector<double> g{0.0};
  for (int j = 1;; ++j) {
    const double r = 1.0 - std::exp2(-0.25 * j);
    if (r > r_cap) break;
    g.push_back(r);
  }
  if (r_cap > g.back() * (1.0 + 1e-12) && r_cap > 0.0) g.push_back(r_cap);
  return g;
}

double integral_mean(const PowerSeries& f, double r, double p) {
  if (!(p > 0.0)) throw ParameterError("integral_mean requires p > 0");
  check_radius(f, r);
  if (f.truncation_order() == 0) return std::abs(f[0]);
  return mean_of_samples(fft::sample_circle(f.coeffs(), r, fft::circle_nodes(f.truncation_order())), p);
}

NormEstimate hardy_norm(const PowerSeries& f, double p, const NormOptions& opt) {
  validate(space::Hardy{p});
  const double cap = radial_cap(f.admissible_radius(), opt.depth);
  return radial_sup(cap, 0.0, grid_text("hardy", cap, fft::circle_nodes(f.truncation_order())),
                    fft::circle_nodes(f.truncation_order()), opt,
                    [&](double r) { return integral_mean(f, r, p); });
}

NormEstimate bloch_norm(const PowerSeries& f, double alpha, const NormOptions& opt) {
  validate(space::BlochType{alpha});
  const auto d = derivative(f, 1);
  const double cap = radial_cap(std::min(f.admissible_radius(), d.admissible_radius()), opt.depth);
  const bool radial = f.nonnegative_coefficients();
  const std::size_t angles = radial ? 1 : fft::circle_nodes(d.truncation_order());
  return radial_sup(cap, std::abs(f[0]), grid_text(radial ? "bloch, theta=0 (nonnegative coefficients)" : "bloch", cap, angles),
                    angles, opt, [&](double r) {
                      const double w = std::pow(1.0 - r * r, alpha);
                      const double m = radial ? std::abs(evaluate_unchecked(d, r)) : max_abs_on_circle(d, r);
                      return w * m;
                    });
}

double bloch_coefficient_statistic(const PowerSeries& f, double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("bloch_coefficient_statistic requires alpha > 0");
  if (!f.nonnegative_coefficients())
    throw DomainError("bloch_coefficient_statistic requires real nonnegative coefficients");
  double acc = 0.0, best = 0.0;
  for (std::size_t n = 1; n <= f.truncation_order(); ++n) {
    acc += static_cast<double>(n) * f[n].real();
    best = std::max(best, acc * std::pow(static_cast<double>(n), -alpha));
  }
  return best;
}

double morrey_area_integral(const PowerSeries& f, cplx w) {
  const std::size_t N = f.truncation_order();
  if (N == 0) return 0.0;
  const double x = std::norm(w);
  if (!(x < 1.0)) throw ParameterError("morrey_area_integral requires |w| < 1");
  const cplx wc = std::conj(w);
  cplx b = 0.0;
  double s = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    b = static_cast<double>(n + 1) * f[n + 1] + wc * b;
    const double n1 = static_cast<double>(n) + 1.0;
    s += std::norm(b) / (n1 * (n1 + 1.0));
  }
  // Past the degree b_n = conj(w)^(n-D) b_D.
  const double B = std::norm(b);
  if (B > 0.0 && x > 0.0) {
    double tail = 0.0, xj = 1.0;
    for (std::size_t j = 1;; ++j) {
      xj *= x;
      const double n1 = static_cast<double>(N - 1 + j) + 1.0;
      const double term = xj / (n1 * (n1 + 1.0));
      tail += term;
      // remaining terms are below term * x / (1 - x)
      if (term * x / (1.0 - x) <= 1e-17 * tail || xj == 0.0) break;
    }
    s += B * tail;
  }
  return (1.0 - x) * s;
}

NormEstimate morrey_norm(const PowerSeries& f, double lambda, const NormOptions& opt) {
  validate(space::Morrey{lambda});
  const double cap = radial_cap(f.admissible_radius(), opt.depth);
  auto statistic = [&](cplx w) {
    const double v = std::pow(1.0 - std::norm(w), 1.0 - lambda) * morrey_area_integral(f, w);
    return std::sqrt(std::max(v, 0.0));
  };
  std::ostringstream desc;
  desc.precision(15);
  desc << "morrey: real w in {0, 1-2^(-j/4)} up to " << cap << " plus ring |w| in {0.5, 0.9} x 8 angles";
  auto est = radial_sup(cap, std::abs(f[0]), desc.str(), 1, opt, [&](double r) { return statistic(r); });
  double ring_sup = 0.0;
  for (double rho : {0.5, 0.9}) {
    if (rho > cap) continue;
    for (int k = 0; k < 8; ++k) {
      const cplx w = std::polar(rho, 2.0 * std::numbers::pi * k / 8.0);
      est.grid.extra.push_back(w);
      ring_sup = std::max(ring_sup, statistic(w));
    }
  }
  est.value = std::max(est.value, std::abs(f[0]) + ring_sup);
  return est;
}

NormEstimate mean_lipschitz_norm(const PowerSeries& f, double p, double alpha, const NormOptions& opt) {
  validate(space::MeanLip{p, alpha});
  const auto d = derivative(f, 1);
  const double cap = radial_cap(std::min(f.admissible_radius(), d.admissible_radius()), opt.depth);
  const std::size_t M = fft::circle_nodes(d.truncation_order());
  return radial_sup(cap, std::abs(f[0]), grid_text("mean_lipschitz", cap, M), M, opt,
                    [&](double r) { return std::pow(1.0 - r, 1.0 - alpha) * integral_mean(d, r, p); });
}

NormEstimate lambda11_statistic(const PowerSeries& f, const NormOptions& opt) {
  const auto d2 = derivative(f, 2);
  const double cap = radial_cap(std::min(f.admissible_radius(), d2.admissible_radius()), opt.depth);
  const std::size_t M = fft::circle_nodes(d2.truncation_order());
  return radial_sup(cap, 0.0, grid_text("lambda11", cap, M), M, opt,
                    [&](double r) { return (1.0 - r) * integral_mean(d2, r, 1.0); });
}

GrowthReport growth_envelope_check(const PowerSeries& f, const SpaceSpec& spec, const NormOptions& opt) {
  validate(spec);
  std::function<double(double)> envelope;
  if (const auto* b = std::get_if<space::BlochType>(&spec)) {
    const double a = b->alpha;
    if (a < 1.0)
      envelope = [](double) { return 1.0; };
    else if (a == 1.0)
      envelope = [](double r) { return std::log(2.0) - std::log1p(-r); };
    else
      envelope = [a](double r) { return std::pow(1.0 - r, 1.0 - a); };
  } else if (const auto* m = std::get_if<space::Morrey>(&spec)) {
    const double e = -(1.0 - m->lambda) / 2.0;
    envelope = [e](double r) { return std::pow(1.0 - r, e); };
  } else {
    throw ParameterError("growth_envelope_check supports Bloch-type and Morrey spaces only");
  }
  GrowthReport rep;
  const double cap = radial_cap(f.admissible_radius(), opt.depth);
  rep.radii = radial_grid(cap);
  rep.ratio.resize(rep.radii.size());
  std::vector<double> x(rep.radii.size());
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    const double r = rep.radii[i];
    rep.ratio[i] = std::abs(evaluate(f, r)) / envelope(r);
    rep.sup = std::max(rep.sup, rep.ratio[i]);
    x[i] = -std::log1p(-r);
  }
  if (rep.radii.size() >= 4) rep.trend = classify_trend(x, rep.ratio);
  return rep;
}

}  // namespace cesaro
