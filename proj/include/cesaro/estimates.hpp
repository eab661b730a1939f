#pragma once

#include <vector>

#include "cesaro/measure.hpp"
#include "cesaro/series.hpp"
#include "cesaro/trend.hpp"

namespace cesaro {

enum class Regime { alpha_below_one, alpha_one, alpha_above_one, case_one, case_two, degenerate };
const char* to_string(Regime r);

struct EstimateComparison {
  double computed = 0.0;
  double asymptotic_form = 0.0;
  double ratio = 0.0;
  Regime regime = Regime::degenerate;
  // Case (2) uses the dimension constant n = 1; recorded so reports can flag it.
  int dimension_n = 0;
  std::size_t nodes = 0;
};

// int_0^{2pi} dtheta / |1 - z e^{-i theta}|^alpha against its three-regime form.
EstimateComparison circle_integral(cplx z, double alpha);

// Normalized-area integral of (1-|z|^2)^delta log^k(e/(1-|z|^2)) /
// (|1 - z conj(w)|^t |1 - z conj(a)|^r). Supported: case (1)
// t+r-delta > 2 with t-delta, r-delta < 2; case (2) t-delta > 2 > r-delta;
// and the bounded regime where t-delta, r-delta and t+r-delta are all < 2.
EstimateComparison disk_integral(cplx w, cplx a, double t, double r, double delta, double k);

struct SupremumReport {
  std::vector<double> grid;    // real w
  std::vector<double> values;  // +inf where the t-integral diverges
  std::vector<cplx> ring;      // off-axis w (S2 only)
  std::vector<double> ring_values;
  double sup = 0.0;
  Trend trend;
};

struct Prop31Report {
  SupremumReport s1, s2, s3;
  // mu([|w|,1)) log^gamma(e/(1-|w|)) / (1-|w|)^s on the same grid
  std::vector<double> tail_lower_bound;
};

// The three suprema on w_j = 1 - 2^(-j/2), j = 1..w_depth, plus for S2 the
// ring |w| in {0.5, 0.9} x 8 angles.
Prop31Report prop31_suprema(const RadialMeasure& m, double beta, double gamma, double q, double s, int w_depth = 30,
                            unsigned threads = 1);

}  // namespace cesaro
