#pragma once

#include <span>
#include <string>
#include <vector>

namespace cesaro {

inline constexpr double kSlopeThreshold = 0.05;
inline constexpr double kVanishFraction = 0.2;

enum class Verdict { consistent_bounded, consistent_vanishing, growing };

const char* to_string(Verdict v);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS
};

// Ordinary least squares of y on x. Needs at least two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct Trend {
  double slope = 0.0;  // d log(value) / d x over the window
  double sup = 0.0;
  Verdict verdict = Verdict::consistent_bounded;
};

// x is the log-scale abscissa (e.g. log 1/(1-a)), values are nonnegative.
// The window is the last half of the grid. An infinite value in the window
// forces growing; zeros are left out of the regression.
Trend classify_trend(std::span<const double> x, std::span<const double> values);

inline bool is_growing(const Trend& t) { return t.verdict == Verdict::growing; }

}  // namespace cesaro
