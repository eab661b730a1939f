#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cesaro {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 4096;
inline constexpr double kTruncationTolerance = 1e-10;

// Bound |c_k| <= scale * (k+1)^exponent * ratio^k, claimed only for k > N.
struct CoefficientEnvelope {
  double scale = 1.0;
  double exponent = 0.0;
  double ratio = 1.0;
};

namespace kind {
struct ConformalKernel {  // (1-a) / (1-az)^(1+1/p), p may be +inf
  double a;
  double p;
};
struct LogKernel {};  // log 1/(1-z)
struct PowerKernel {  // (1-z)^(-c)
  double c;
};
struct Lacunary {};  // sum z^(2^k)
struct Monomial {
  std::size_t n;
};
struct Constant {
  cplx v;
};
struct GeometricOnes {};  // 1/(1-z)
}  // namespace kind

using TestFunctionKind =
    std::variant<kind::ConformalKernel, kind::LogKernel, kind::PowerKernel, kind::Lacunary,
                 kind::Monomial, kind::Constant, kind::GeometricOnes>;

std::string describe(const TestFunctionKind& k);

class PowerSeries {
 public:
  // No envelope means the coefficients are the whole function (a polynomial).
  explicit PowerSeries(std::vector<cplx> coeffs,
                       std::optional<CoefficientEnvelope> envelope = std::nullopt);

  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::optional<CoefficientEnvelope>& envelope() const { return envelope_; }
  bool is_polynomial() const { return !envelope_.has_value(); }

  // Largest r in [0,1] whose envelope tail beyond N stays below tol.
  double admissible_radius(double tol = kTruncationTolerance) const;
  // Envelope bound on sum_{k>N} |c_k| r^k (0 for polynomials).
  double tail_bound(double r) const;

  bool real_coefficients() const { return real_; }
  bool nonnegative_coefficients() const { return nonneg_; }

 private:
  std::vector<cplx> coeffs_;
  std::optional<CoefficientEnvelope> envelope_;
  double r_max_;
  bool real_;
  bool nonneg_;
};

PowerSeries make_series(const TestFunctionKind& k, std::size_t N = kDefaultTruncation);

// Throws RadiusError when |z| exceeds the admissible radius.
cplx evaluate(const PowerSeries& f, cplx z);
// Same, without the radius check; callers that have already validated use it.
cplx evaluate_unchecked(const PowerSeries& f, cplx z);
void check_radius(const PowerSeries& f, double r);

PowerSeries differentiate(const PowerSeries& f, int order);
PowerSeries partial_sum_transform(const PowerSeries& f);

// alpha*f + beta*g; the result has the larger truncation order.
PowerSeries linear_combination(cplx alpha, const PowerSeries& f, cplx beta, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, cplx c);

}  // namespace cesaro
