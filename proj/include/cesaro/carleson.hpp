#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cesaro/measure.hpp"
#include "cesaro/trend.hpp"

namespace cesaro {

inline constexpr int kDefaultCarlesonDepth = 40;

struct MomentFit {
  double s_hat = 0.0;
  double residual = 0.0;
};

struct CarlesonReport {
  double target_exponent = 0.0;  // t
  double log_exponent = 0.0;     // beta
  std::vector<double> grid;      // a_j = 1 - 2^(-j/2)
  std::vector<double> statistic;
  double sup_statistic = 0.0;
  double trend_slope = 0.0;
  Verdict verdict = Verdict::consistent_bounded;
  std::optional<MomentFit> fitted_moment_exponent;
};

// Grid a_j = 1 - 2^(-j/2), j = 1..depth, returned as 1 - a_j to keep the
// small quantity exact.
std::vector<double> carleson_gaps(int depth);

// mu([a,1)) log^beta(e/(1-a)) / (1-a)^t on the grid.
CarlesonReport tail_statistic(const RadialMeasure& m, double t, double beta,
                              int depth = kDefaultCarlesonDepth, unsigned threads = 1);

// -slope of log mu_n against log n over [M/4, M]. Zero moments in the window
// (decay faster than any power) raise DegenerateFitError.
MomentFit moment_decay_fit(const MomentSequence& moms);

struct LogMomentFit {
  double c_hat = 0.0;  // sup of mu_n n^s log(n+1) over the window
  double trend = 0.0;  // slope of its log against log n
  bool all_zero = false;
};
LogMomentFit log_moment_decay_fit(const MomentSequence& moms, double s);

struct BlascoResult {
  double sup_value = 0.0;
  std::size_t argmax_n = 0;
  double tail_exponent = 0.0;  // fitted decay exponent used beyond M
  Trend trend;                 // of (n+1)^3 sum_{k>=n} mu_k^2 on n = 2^(j/2)
};
// sup over n <= M/2 of (n+1)^3 sum_{k>=n} mu_k^2 with a power-law tail past M.
BlascoResult blasco_statistic(const MomentSequence& moms);

}  // namespace cesaro
