#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "cesaro/quadrature.hpp"

namespace cesaro {

struct Atom {
  double location;  // in [0, 1)
  double weight;    // > 0
};

class RadialMeasure;

struct AtomsFamily {
  std::vector<Atom> atoms;
};
// density normalizer * (1-t)^(s-1) * log^(-gamma)(e/(1-t)) on [0, 1)
struct BetaLogFamily {
  double s;
  double gamma;
  double normalizer;
};
struct LebesgueFamily {};
struct SumFamily {
  std::vector<RadialMeasure> parts;
};

class RadialMeasure {
 public:
  using Family = std::variant<AtomsFamily, BetaLogFamily, LebesgueFamily, SumFamily>;

  static RadialMeasure atoms(std::vector<Atom> atoms);
  static RadialMeasure beta_log(double s, double gamma, double normalizer = 1.0);
  static RadialMeasure lebesgue();
  static RadialMeasure sum(std::vector<RadialMeasure> parts);

  const Family& family() const { return family_; }
  RadialMeasure scaled(double lambda) const;
  std::string describe() const;

 private:
  explicit RadialMeasure(Family f) : family_(std::move(f)) {}
  Family family_;
};

// A quadrature node as seen by an integrand: t, u = 1-t and x = log(1/u) are
// all supplied so integrands never form 1-t themselves. log_weight is the log
// of the measure's mass element at the node (dx already absorbed).
struct MeasurePoint {
  double t;
  double u;
  double x;
  double log_weight;
};

template <class R>
struct Integral {
  R value{};
  double error = 0.0;
  bool converged = true;
};

struct IntegrationOptions {
  double lower = 0.0;        // integrate over [lower, 1)
  double skip_before_x = 0.0;  // integrand known to vanish for x below this
  double relative_cutoff = 1e-15;
};

namespace detail {
inline MeasurePoint point_at(double x, double log_density) {
  return {-std::expm1(-x), std::exp(-x), x, log_density};
}
}  // namespace detail

// g(const MeasurePoint&) returns the integrand already multiplied by the
// weight exp(p.log_weight); integrands with power singularities combine the
// exponents before exponentiating.
template <class G>
auto integrate(const RadialMeasure& m, G&& g, const IntegrationOptions& opt = {})
    -> Integral<std::decay_t<decltype(g(MeasurePoint{}))>> {
  using R = std::decay_t<decltype(g(MeasurePoint{}))>;
  Integral<R> out;
  const double x0 = opt.lower > 0.0 ? -std::log1p(-opt.lower) : 0.0;
  auto density = [&](double log_norm, double s, double gamma) {
    quad::PanelOptions po;
    po.x_begin = x0;
    po.relative_cutoff = opt.relative_cutoff;
    po.skip_before = opt.skip_before_x;
    auto r = quad::integrate_panels(
        [&](double x) {
          double lw = log_norm - s * x;
          if (gamma != 0.0) lw -= gamma * std::log1p(x);
          return g(detail::point_at(x, lw));
        },
        po);
    out.value += r.value;
    out.error += r.error;
    out.converged = out.converged && r.converged;
  };
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          for (const auto& a : fam.atoms) {
            if (a.location < opt.lower) continue;
            out.value += g(MeasurePoint{a.location, 1.0 - a.location, -std::log1p(-a.location),
                                        std::log(a.weight)});
          }
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          density(std::log(fam.normalizer), fam.s, fam.gamma);
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          density(0.0, 1.0, 0.0);
        } else {
          for (const auto& part : fam.parts) {
            auto r = integrate(part, g, opt);
            out.value += r.value;
            out.error += r.error;
            out.converged = out.converged && r.converged;
          }
        }
      },
      m.family());
  return out;
}

enum class MomentMethod { closed_form, quadrature };

struct MomentValue {
  double value;
  double err;
  MomentMethod method;
};

struct MomentSequence {
  std::vector<double> values;
  std::vector<double> err;
  std::vector<MomentMethod> method;
  std::size_t size() const { return values.size(); }
};

MomentValue moment(const RadialMeasure& m, std::size_t n);
// Entries 0..M; threads = 0 uses every hardware thread.
MomentSequence moments(const RadialMeasure& m, std::size_t M, unsigned threads = 1);
double tail_mass(const RadialMeasure& m, double a);
double total_mass(const RadialMeasure& m);

// Carleson exponent implied by the family parameters: (s, gamma) with the
// convention that atoms are s-Carleson for every s. Sums take the weakest part.
struct NominalExponent {
  double s;
  double gamma;
};
NominalExponent nominal_exponent(const RadialMeasure& m);

}  // namespace cesaro
