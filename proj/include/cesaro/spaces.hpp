#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cesaro/series.hpp"
#include "cesaro/trend.hpp"

namespace cesaro {

namespace space {
struct Hardy {
  double p;  // (0, inf]
};
struct BlochType {
  double alpha;
};
struct Morrey {
  double lambda;  // (0, 1]
};
struct MeanLip {
  double p;      // [1, inf)
  double alpha;  // (0, 1]
};
}  // namespace space

using SpaceSpec = std::variant<space::Hardy, space::BlochType, space::Morrey, space::MeanLip>;
void validate(const SpaceSpec& s);
std::string describe(const SpaceSpec& s);

struct GridSpec {
  std::string description;
  std::vector<double> radii;  // radial grid (or real w-grid for Morrey)
  std::size_t angles = 1;     // angular nodes per radius, 1 = theta 0 only
  std::vector<cplx> extra;    // off-axis points (Morrey ring)
};

struct NormEstimate {
  double value = 0.0;
  GridSpec grid;
  bool converged = false;  // last two grid values within 2%
  std::vector<std::pair<double, double>> profile;  // (r, sup of the integrand at r)
  Trend trend;  // of the profile against log 1/(1-r), last half
};

struct NormOptions {
  int depth = 40;  // radial grid stops at 1 - 2^(-depth/2) even for polynomials
  unsigned threads = 1;
};

// 0, then 1 - 2^(-j/4) up to r_cap, then r_cap itself.
std::vector<double> radial_grid(double r_cap);

double integral_mean(const PowerSeries& f, double r, double p);

NormEstimate hardy_norm(const PowerSeries& f, double p, const NormOptions& opt = {});
NormEstimate bloch_norm(const PowerSeries& f, double alpha, const NormOptions& opt = {});
// max_n n^-alpha sum_{k<=n} k c_k; coefficients must be real and nonnegative.
double bloch_coefficient_statistic(const PowerSeries& f, double alpha);
NormEstimate morrey_norm(const PowerSeries& f, double lambda, const NormOptions& opt = {});
NormEstimate mean_lipschitz_norm(const PowerSeries& f, double p, double alpha, const NormOptions& opt = {});
NormEstimate lambda11_statistic(const PowerSeries& f, const NormOptions& opt = {});

// int |f'|^2 (1 - |sigma_w|^2) dA for the polynomial f, via the coefficients
// of f'(z)/(1 - conj(w) z).
double morrey_area_integral(const PowerSeries& f, cplx w);

struct GrowthReport {
  std::vector<double> radii;
  std::vector<double> ratio;  // |f(r)| / envelope(r)
  double sup = 0.0;
  Trend trend;
};
// |f(r)| against the pointwise growth envelope of a Bloch-type or Morrey space.
GrowthReport growth_envelope_check(const PowerSeries& f, const SpaceSpec& spec, const NormOptions& opt = {});

}  // namespace cesaro
