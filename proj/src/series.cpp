#include "cesaro/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cesaro/error.hpp"

namespace cesaro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double envelope_tail(const CoefficientEnvelope& e, std::size_t N, double r) {
  if (e.scale == 0.0) return 0.0;
  const double x = e.ratio * r;
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return kInf;
  const double n1 = static_cast<double>(N) + 1.0;
  const double growth = std::pow((n1 + 2.0) / (n1 + 1.0), e.exponent);
  const double q = x * std::max(1.0, growth);
  if (q >= 1.0) return kInf;
  const double log_first = std::log(e.scale) + e.exponent * std::log(n1 + 1.0) + n1 * std::log(x);
  return std::exp(log_first) / (1.0 - q);
}

double radius_for(const std::optional<CoefficientEnvelope>& env, std::size_t N, double tol) {
  if (!env) return 1.0;
  if (envelope_tail(*env, N, 1.0) <= tol) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (envelope_tail(*env, N, mid) <= tol)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Gamma-ratio coefficients G(c+k)/(G(c) k!) * rho^k * lead, accumulated in logs.
// Also returns max_k of G(c+k)/(G(c) k!) / (k+1)^(c-1) over the computed range.
std::vector<cplx> gamma_ratio_coeffs(double c, double rho, double lead, std::size_t N,
                                     double& max_ratio) {
  std::vector<cplx> out(N + 1);
  double log_b = 0.0;
  const double log_rho = std::log(rho);
  const double log_lead = std::log(lead);
  max_ratio = 0.0;
  for (std::size_t k = 0; k <= N; ++k) {
    const double kd = static_cast<double>(k);
    if (k > 0) log_b += std::log((c + kd - 1.0) / kd);
    const double lv = log_b + kd * log_rho + log_lead;
    const double v = std::exp(lv);
    if (!std::isfinite(v)) throw ParameterError("coefficient overflow in Gamma-ratio series");
    out[k] = v;
    max_ratio = std::max(max_ratio, std::exp(log_b - (c - 1.0) * std::log(kd + 1.0)));
  }
  return out;
}

cplx horner(std::span<const cplx> c, cplx z) {
  double ar = 0.0, ai = 0.0;
  const double zr = z.real(), zi = z.imag();
  for (std::size_t k = c.size(); k-- > 0;) {
    const double nr = ar * zr - ai * zi + c[k].real();
    const double ni = ar * zi + ai * zr + c[k].imag();
    ar = nr;
    ai = ni;
  }
  return {ar, ai};
}

double horner_real(std::span<const cplx> c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].real();
  return acc;
}

CoefficientEnvelope merge(const std::optional<CoefficientEnvelope>& a, double wa,
                          const std::optional<CoefficientEnvelope>& b, double wb) {
  CoefficientEnvelope e{0.0, -kInf, 0.0};
  for (auto [env, w] : {std::pair{a, wa}, std::pair{b, wb}}) {
    if (!env || w == 0.0) continue;
    e.scale += w * env->scale;
    e.exponent = std::max(e.exponent, env->exponent);
    e.ratio = std::max(e.ratio, env->ratio);
  }
  if (e.exponent == -kInf) e.exponent = 0.0;
  return e;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<cplx> coeffs, std::optional<CoefficientEnvelope> envelope)
    : coeffs_(std::move(coeffs)), envelope_(envelope) {
  if (coeffs_.empty()) throw ParameterError("power series needs at least one coefficient");
  if (envelope_) {
    if (!(envelope_->scale >= 0.0) || !(envelope_->ratio >= 0.0) ||
        !std::isfinite(envelope_->exponent))
      throw ParameterError("invalid coefficient envelope");
  }
  real_ = std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx& c) { return c.imag() == 0.0; });
  nonneg_ = real_ && std::all_of(coeffs_.begin(), coeffs_.end(),
                                 [](const cplx& c) { return c.real() >= 0.0; });
  r_max_ = radius_for(envelope_, truncation_order(), kTruncationTolerance);
}

double PowerSeries::admissible_radius(double tol) const {
  if (tol == kTruncationTolerance) return r_max_;
  return radius_for(envelope_, truncation_order(), tol);
}

double PowerSeries::tail_bound(double r) const {
  if (!envelope_) return 0.0;
  return envelope_tail(*envelope_, truncation_order(), r);
}

std::string describe(const TestFunctionKind& k) {
  std::ostringstream os;
  os.precision(15);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, kind::ConformalKernel>)
          os << "conformal_kernel(a=" << v.a << ",p=" << v.p << ")";
        else if constexpr (std::is_same_v<T, kind::LogKernel>)
          os << "log_kernel";
        else if constexpr (std::is_same_v<T, kind::PowerKernel>)
          os << "power_kernel(c=" << v.c << ")";
        else if constexpr (std::is_same_v<T, kind::Lacunary>)
          os << "lacunary";
        else if constexpr (std::is_same_v<T, kind::Monomial>)
          os << "monomial(n=" << v.n << ")";
        else if constexpr (std::is_same_v<T, kind::Constant>)
          os << "constant(" << v.v.real() << (v.v.imag() < 0 ? "" : "+") << v.v.imag() << "i)";
        else
          os << "geometric_ones";
      },
      k);
  return os.str();
}

PowerSeries make_series(const TestFunctionKind& k, std::size_t N) {
  return std::visit(
      [N](const auto& v) -> PowerSeries {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, kind::ConformalKernel>) {
          if (!(v.a > 0.0 && v.a < 1.0)) throw ParameterError("ConformalKernel requires 0 < a < 1");
          if (!(v.p > 0.0)) throw ParameterError("ConformalKernel requires p > 0");
          const double c = 1.0 + 1.0 / v.p;
          double max_ratio = 0.0;
          auto co = gamma_ratio_coeffs(c, v.a, 1.0 - v.a, N, max_ratio);
          const double sc = (1.0 - v.a) * std::max(max_ratio, 1.0 / std::tgamma(c));
          return PowerSeries(std::move(co), CoefficientEnvelope{sc, c - 1.0, v.a});
        } else if constexpr (std::is_same_v<T, kind::PowerKernel>) {
          if (!(v.c > 0.0)) throw ParameterError("PowerKernel requires c > 0");
          double max_ratio = 0.0;
          auto co = gamma_ratio_coeffs(v.c, 1.0, 1.0, N, max_ratio);
          const double sc = std::max(max_ratio, 1.0 / std::tgamma(v.c));
          return PowerSeries(std::move(co), CoefficientEnvelope{sc, v.c - 1.0, 1.0});
        } else if constexpr (std::is_same_v<T, kind::LogKernel>) {
          std::vector<cplx> co(N + 1);
          for (std::size_t j = 1; j <= N; ++j) co[j] = 1.0 / static_cast<double>(j);
          return PowerSeries(std::move(co), CoefficientEnvelope{1.0, 0.0, 1.0});
        } else if constexpr (std::is_same_v<T, kind::Lacunary>) {
          std::vector<cplx> co(N + 1);
          for (std::size_t j = 1; j <= N; j <<= 1) co[j] = 1.0;
          return PowerSeries(std::move(co), CoefficientEnvelope{1.0, 0.0, 1.0});
        } else if constexpr (std::is_same_v<T, kind::Monomial>) {
          if (v.n > N) throw ParameterError("Monomial degree exceeds truncation order");
          std::vector<cplx> co(N + 1);
          co[v.n] = 1.0;
          return PowerSeries(std::move(co));
        } else if constexpr (std::is_same_v<T, kind::Constant>) {
          std::vector<cplx> co(N + 1);
          co[0] = v.v;
          return PowerSeries(std::move(co));
        } else {
          return PowerSeries(std::vector<cplx>(N + 1, cplx(1.0)),
                             CoefficientEnvelope{1.0, 0.0, 1.0});
        }
      },
      k);
}

void check_radius(const PowerSeries& f, double r) {
  const double rm = f.admissible_radius();
  if (r > rm * (1.0 + 1e-13)) throw RadiusError(r, rm);
}

cplx evaluate_unchecked(const PowerSeries& f, cplx z) {
  if (z.imag() == 0.0 && f.real_coefficients()) return horner_real(f.coeffs(), z.real());
  return horner(f.coeffs(), z);
}

cplx evaluate(const PowerSeries& f, cplx z) {
  check_radius(f, std::abs(z));
  return evaluate_unchecked(f, z);
}

PowerSeries differentiate(const PowerSeries& f, int order) {
  if (order < 1 || order > 2) throw ParameterError("differentiation order must be 1 or 2");
  const std::size_t N = f.truncation_order();
  if (static_cast<std::size_t>(order) > N)
    throw ParameterError("differentiation order exceeds truncation order");
  std::vector<cplx> out(N + 1 - order);
  for (std::size_t k = 0; k < out.size(); ++k) {
    double factor = 1.0;
    for (int j = 1; j <= order; ++j) factor *= static_cast<double>(k + j);
    out[k] = factor * f[k + order];
  }
  auto env = f.envelope();
  if (env) {
    for (int j = 0; j < order; ++j) {
      env->scale *= env->ratio * std::pow(2.0, std::max(env->exponent, 0.0));
      env->exponent += 1.0;
    }
  }
  return PowerSeries(std::move(out), env);
}

PowerSeries partial_sum_transform(const PowerSeries& f) {
  const std::size_t N = f.truncation_order();
  std::vector<cplx> out(N + 1);
  cplx acc = 0.0;
  for (std::size_t k = 0; k <= N; ++k) {
    acc += f[k];
    out[k] = acc;
  }
  // Beyond N the prefix sums move by at most the envelope mass added since N.
  const double last = std::abs(acc);
  CoefficientEnvelope e{last, 0.0, 1.0};
  if (const auto& fe = f.envelope()) {
    if (fe->ratio < 1.0) {
      e.scale = last + envelope_tail(*fe, N, 1.0);
    } else {
      const double m = fe->exponent;
      if (m >= 0.0) {
        e.scale = last + fe->scale;
        e.exponent = m + 1.0;
      } else if (m > -1.0) {
        e.scale = last + fe->scale / (m + 1.0);
        e.exponent = m + 1.0;
      } else {
        // 1 + log x <= 2 sqrt(x) for x >= 1
        e.scale = last + 2.0 * fe->scale;
        e.exponent = 0.5;
      }
    }
  }
  return PowerSeries(std::move(out), e);
}

PowerSeries linear_combination(cplx alpha, const PowerSeries& f, cplx beta, const PowerSeries& g) {
  const std::size_t N = std::max(f.truncation_order(), g.truncation_order());
  std::vector<cplx> out(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    cplx v = 0.0;
    if (k <= f.truncation_order()) v += alpha * f[k];
    if (k <= g.truncation_order()) v += beta * g[k];
    out[k] = v;
  }
  if (!f.envelope() && !g.envelope()) return PowerSeries(std::move(out));
  return PowerSeries(std::move(out), merge(f.envelope(), std::abs(alpha), g.envelope(), std::abs(beta)));
}

PowerSeries scale(const PowerSeries& f, cplx c) {
  std::vector<cplx> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v *= c;
  auto env = f.envelope();
  if (env) env->scale *= std::abs(c);
  return PowerSeries(std::move(out), env);
}

}  // namespace cesaro
