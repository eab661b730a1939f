#include "cesaro/operator.hpp"

#include <algorithm>
#include <sstream>

#include "cesaro/error.hpp"

namespace cesaro {

namespace {

template <class G>
cplx integrate_or_throw(const RadialMeasure& m, G&& g, const char* what) {
  auto r = integrate(m, g);
  if (!r.converged) {
    std::ostringstream os;
    os << what << " quadrature did not converge (error estimate " << r.error << ")";
    throw QuadratureError(os.str(), std::abs(r.value));
  }
  return r.value;
}

// A polynomial of degree below the order differentiates to zero; anything else
// must carry enough coefficients.
PowerSeries derivative_of(const PowerSeries& f, int order) {
  if (f.is_polynomial() && f.truncation_order() < static_cast<std::size_t>(order)) {
    std::vector<cplx> padded(f.coeffs().begin(), f.coeffs().end());
    padded.resize(order + 1);
    return differentiate(PowerSeries(std::move(padded)), order);
  }
  return differentiate(f, order);
}

// Zero-padding a polynomial is exact; pad until C_mu f is resolved to well
// below rounding at radius r.
PowerSeries pad_for_apply(const OperatorInstance& op, const PowerSeries& f, double r) {
  if (!f.is_polynomial()) return f;
  std::size_t N = std::max<std::size_t>(f.truncation_order(), 16);
  for (;; N *= 2) {
    std::vector<cplx> padded(f.coeffs().begin(), f.coeffs().end());
    padded.resize(N + 1);
    PowerSeries g(std::move(padded));
    if (N >= (std::size_t{1} << 16) || apply(op, g).tail_bound(r) <= 1e-17) return g;
  }
}

}  // namespace

OperatorInstance::OperatorInstance(RadialMeasure m, unsigned threads)
    : measure_(std::move(m)), threads_(threads) {}

MomentSequence OperatorInstance::moments(std::size_t M) const {
  std::lock_guard lock(mutex_);
  if (cache_.size() < M + 1) cache_ = cesaro::moments(measure_, M, threads_);
  MomentSequence out;
  out.values.assign(cache_.values.begin(), cache_.values.begin() + M + 1);
  out.err.assign(cache_.err.begin(), cache_.err.begin() + M + 1);
  out.method.assign(cache_.method.begin(), cache_.method.begin() + M + 1);
  return out;
}

std::size_t OperatorInstance::cached_order() const {
  std::lock_guard lock(mutex_);
  return cache_.size() == 0 ? 0 : cache_.size() - 1;
}

PowerSeries apply(const OperatorInstance& op, const PowerSeries& f) {
  const std::size_t N = f.truncation_order();
  const auto mu = op.moments(N);
  const auto A = partial_sum_transform(f);
  std::vector<cplx> out(N + 1);
  for (std::size_t n = 0; n <= N; ++n) out[n] = mu.values[n] * A[n];
  auto env = A.envelope();
  // mu_n <= mu_N past the truncation.
  if (env) env->scale *= mu.values[N];
  return PowerSeries(std::move(out), env);
}

cplx apply_integral(const RadialMeasure& m, const PowerSeries& f, cplx z) {
  check_radius(f, std::abs(z));
  return integrate_or_throw(
      m,
      [&](const MeasurePoint& p) {
        const cplx tz = p.t * z;
        return evaluate_unchecked(f, tz) / (1.0 - tz) * std::exp(p.log_weight);
      },
      "apply_integral");
}

cplx derivative_at(const RadialMeasure& m, const PowerSeries& f, cplx z, int order) {
  if (order != 1 && order != 2) throw ParameterError("derivative order must be 1 or 2");
  const double r = std::abs(z);
  check_radius(f, r);
  const auto d1 = derivative_of(f, 1);
  check_radius(d1, r);
  if (order == 1) {
    return integrate_or_throw(
        m,
        [&](const MeasurePoint& p) {
          const cplx tz = p.t * z;
          const cplx k = 1.0 / (1.0 - tz);
          const cplx v = evaluate_unchecked(d1, tz) * k + evaluate_unchecked(f, tz) * k * k;
          return p.t * v * std::exp(p.log_weight);
        },
        "derivative_at");
  }
  const auto d2 = derivative_of(f, 2);
  check_radius(d2, r);
  return integrate_or_throw(
      m,
      [&](const MeasurePoint& p) {
        const cplx tz = p.t * z;
        const cplx k = 1.0 / (1.0 - tz);
        const cplx v = evaluate_unchecked(d2, tz) * k + 2.0 * evaluate_unchecked(d1, tz) * k * k +
                       2.0 * evaluate_unchecked(f, tz) * k * k * k;
        return p.t * p.t * v * std::exp(p.log_weight);
      },
      "derivative_at");
}

double representation_residual(const RadialMeasure& m, const PowerSeries& f, std::span<const cplx> z_grid) {
  OperatorInstance op(m);
  double rmax = 0.0;
  for (const cplx& z : z_grid) rmax = std::max(rmax, std::abs(z));
  check_radius(f, rmax);
  const auto cf = apply(op, pad_for_apply(op, f, rmax));
  double worst = 0.0;
  for (const cplx& z : z_grid) {
    const cplx lhs = evaluate(cf, z);
    const cplx rhs = apply_integral(m, f, z);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  return worst;
}

}  // namespace cesaro
