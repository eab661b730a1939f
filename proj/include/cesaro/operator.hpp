#pragma once

#include <cstddef>
#include <mutex>
#include <span>

#include "cesaro/measure.hpp"
#include "cesaro/series.hpp"

namespace cesaro {

// C_mu bound to one measure. The moment cache only grows; growth recomputes
// the sequence from scratch so every prefix is identical to a cold start.
class OperatorInstance {
 public:
  explicit OperatorInstance(RadialMeasure m, unsigned threads = 1);
  OperatorInstance(const OperatorInstance&) = delete;
  OperatorInstance& operator=(const OperatorInstance&) = delete;

  const RadialMeasure& measure() const { return measure_; }
  // Moments 0..M (extends the cache when needed).
  MomentSequence moments(std::size_t M) const;
  std::size_t cached_order() const;

 private:
  RadialMeasure measure_;
  unsigned threads_;
  mutable std::mutex mutex_;
  mutable MomentSequence cache_;
};

// Coefficient n of the result is mu_n * sum_{k<=n} c_k.
PowerSeries apply(const OperatorInstance& op, const PowerSeries& f);

// int f(tz) / (1 - tz) dmu(t).
cplx apply_integral(const RadialMeasure& m, const PowerSeries& f, cplx z);

// d^order/dz^order of the integral form at z, order 1 or 2.
cplx derivative_at(const RadialMeasure& m, const PowerSeries& f, cplx z, int order);

// max_z |evaluate(apply(f), z) - apply_integral(f, z)| / (1 + |value|).
double representation_residual(const RadialMeasure& m, const PowerSeries& f, std::span<const cplx> z_grid);

}  // namespace cesaro
