#include "cesaro/measure.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <limits>
#include <sstream>

#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(what);
}

MomentValue beta_log_moment(const BetaLogFamily& b, std::size_t n) {
  if (b.gamma == 0.0) {
    const double v = b.normalizer * boost::math::beta(static_cast<double>(n) + 1.0, b.s);
    return {v, 8.0 * kEps * v, MomentMethod::closed_form};
  }
  const double nd = static_cast<double>(n);
  IntegrationOptions opt;
  // t^n <= exp(-n u) underflows completely once n e^{-x} > 745.
  if (nd > 745.0) opt.skip_before_x = std::log(nd / 745.0);
  RadialMeasure part = RadialMeasure::beta_log(b.s, b.gamma, b.normalizer);
  auto r = integrate(
      part, [nd](const MeasurePoint& p) { return std::exp(nd * std::log1p(-p.u) + p.log_weight); },
      opt);
  if (!r.converged) {
    std::ostringstream os;
    os << "moment " << n << " quadrature did not converge within the panel budget";
    throw QuadratureError(os.str(), r.value);
  }
  return {r.value, r.error, MomentMethod::quadrature};
}

MomentValue moment_impl(const RadialMeasure& m, std::size_t n) {
  return std::visit(
      [n](const auto& fam) -> MomentValue {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          double v = 0.0;
          for (const auto& a : fam.atoms) v += a.weight * std::pow(a.location, static_cast<double>(n));
          return {v, 4.0 * kEps * v, MomentMethod::closed_form};
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          return {1.0 / (static_cast<double>(n) + 1.0), 0.0, MomentMethod::closed_form};
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          return beta_log_moment(fam, n);
        } else {
          MomentValue out{0.0, 0.0, MomentMethod::closed_form};
          for (const auto& part : fam.parts) {
            const auto v = moment_impl(part, n);
            out.value += v.value;
            out.err += v.err;
            if (v.method == MomentMethod::quadrature) out.method = MomentMethod::quadrature;
          }
          return out;
        }
      },
      m.family());
}

}  // namespace

RadialMeasure RadialMeasure::atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ParameterError("atom list must not be empty");
  for (const auto& a : atoms) {
    if (!(a.location >= 0.0 && a.location < 1.0))
      throw ParameterError("atom locations must lie in [0, 1)");
    require_finite_positive(a.weight, "atom weights must be positive");
  }
  return RadialMeasure(AtomsFamily{std::move(atoms)});
}

RadialMeasure RadialMeasure::beta_log(double s, double gamma, double normalizer) {
  require_finite_positive(s, "BetaLog requires s > 0");
  require_finite_positive(normalizer, "BetaLog requires a positive normalizer");
  if (!std::isfinite(gamma)) throw ParameterError("BetaLog requires a finite gamma");
  return RadialMeasure(BetaLogFamily{s, gamma, normalizer});
}

RadialMeasure RadialMeasure::lebesgue() { return RadialMeasure(LebesgueFamily{}); }

RadialMeasure RadialMeasure::sum(std::vector<RadialMeasure> parts) {
  if (parts.empty()) throw ParameterError("sum of measures needs at least one part");
  return RadialMeasure(SumFamily{std::move(parts)});
}

RadialMeasure RadialMeasure::scaled(double lambda) const {
  require_finite_positive(lambda, "scale factor must be positive");
  return std::visit(
      [lambda](const auto& fam) -> RadialMeasure {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          auto atoms = fam.atoms;
          for (auto& a : atoms) a.weight *= lambda;
          return RadialMeasure::atoms(std::move(atoms));
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          return RadialMeasure::beta_log(fam.s, fam.gamma, fam.normalizer * lambda);
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          return RadialMeasure::beta_log(1.0, 0.0, lambda);
        } else {
          std::vector<RadialMeasure> parts;
          for (const auto& p : fam.parts) parts.push_back(p.scaled(lambda));
          return RadialMeasure::sum(std::move(parts));
        }
      },
      family_);
}

std::string RadialMeasure::describe() const {
  std::ostringstream os;
  os.precision(15);
  std::visit(
      [&os](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          os << "atoms[";
          for (std::size_t i = 0; i < fam.atoms.size(); ++i)
            os << (i ? "," : "") << "(" << fam.atoms[i].location << "," << fam.atoms[i].weight << ")";
          os << "]";
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          os << "beta_log(s=" << fam.s << ",gamma=" << fam.gamma << ",normalizer=" << fam.normalizer
             << ")";
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          os << "lebesgue";
        } else {
          os << "sum[";
          for (std::size_t i = 0; i < fam.parts.size(); ++i) os << (i ? "," : "") << fam.parts[i].describe();
          os << "]";
        }
      },
      family_);
  return os.str();
}

MomentValue moment(const RadialMeasure& m, std::size_t n) { return moment_impl(m, n); }

MomentSequence moments(const RadialMeasure& m, std::size_t M, unsigned threads) {
  MomentSequence seq;
  seq.values.resize(M + 1);
  seq.err.resize(M + 1);
  seq.method.resize(M + 1);
  parallel_for(M + 1, threads, [&](std::size_t n) {
    const auto v = moment_impl(m, n);
    seq.values[n] = v.value;
    seq.err[n] = v.err;
    seq.method[n] = v.method;
  });
  for (std::size_t n = 0; n < M; ++n) {
    const double excess = seq.values[n + 1] - seq.values[n];
    if (excess <= 0.0) continue;
    const double slack = 2.0 * (seq.err[n] + seq.err[n + 1]) + 4.0 * kEps * seq.values[n];
    if (excess > slack) {
      std::ostringstream os;
      os.precision(17);
      os << "moment sequence increases at n=" << n << " by " << excess << " (error budget " << slack
         << ")";
      throw QuadratureError(os.str(), seq.values[n + 1]);
    }
    seq.values[n + 1] = seq.values[n];
  }
  return seq;
}

double tail_mass(const RadialMeasure& m, double a) {
  if (!(a >= 0.0 && a < 1.0)) throw ParameterError("tail_mass requires 0 <= a < 1");
  return std::visit(
      [a](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          double v = 0.0;
          for (const auto& at : fam.atoms)
            if (at.location >= a) v += at.weight;
          return v;
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          return 1.0 - a;
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          if (fam.gamma == 0.0) return fam.normalizer * std::pow(1.0 - a, fam.s) / fam.s;
          IntegrationOptions opt;
          opt.lower = a;
          auto r = integrate(RadialMeasure::beta_log(fam.s, fam.gamma, fam.normalizer),
                             [](const MeasurePoint& p) { return std::exp(p.log_weight); }, opt);
          if (!r.converged) throw QuadratureError("tail mass quadrature did not converge", r.value);
          return r.value;
        } else {
          double v = 0.0;
          for (const auto& part : fam.parts) v += tail_mass(part, a);
          return v;
        }
      },
      m.family());
}

double total_mass(const RadialMeasure& m) { return tail_mass(m, 0.0); }

NominalExponent nominal_exponent(const RadialMeasure& m) {
  return std::visit(
      [](const auto& fam) -> NominalExponent {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          return {std::numeric_limits<double>::infinity(), 0.0};
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          return {1.0, 0.0};
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          return {fam.s, fam.gamma};
        } else {
          NominalExponent worst{std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity()};
          for (const auto& part : fam.parts) {
            const auto e = nominal_exponent(part);
            if (e.s < worst.s || (e.s == worst.s && e.gamma < worst.gamma)) worst = e;
          }
          return worst;
        }
      },
      m.family());
}

}  // namespace cesaro
