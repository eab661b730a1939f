#include "cesaro/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cesaro/carleson.hpp"
#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSameExponent = 1e-12;

double delta_p(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

enum class Family { conformal, log_kernel, power_kernel };
enum class RangeNorm { morrey, mean_lipschitz, lambda11, bloch };
enum class DomainNorm { hardy, bloch, morrey };
enum class Witness { none, derivative, log_sum, moment_power, blasco };

// A statement reduced to the statistics that test it.
struct Plan {
  Theorem resolved;
  Requirement req;
  Witness witness = Witness::none;
  double witness_exponent = 0.0;
  double witness_param = 0.0;  // p of f_a, or c of the power kernel
  bool sufficiency = true;
  Family family = Family::conformal;
  double family_param = 0.0;
  RangeNorm range = RangeNorm::morrey;
  double range_a = 0.0, range_b = 0.0;
  DomainNorm domain = DomainNorm::hardy;
  double domain_a = 0.0;
  json notes = json::array();
};

Plan plan_t1_1(double p, double lambda) {
  Plan pl;
  pl.resolved = Theorem::T1_1;
  pl.req = {(1.0 + lambda) / 2.0 + delta_p(p), 0.0};
  pl.witness = Witness::derivative;
  pl.witness_exponent = (3.0 - lambda) / 2.0;
  pl.witness_param = p;
  pl.family = Family::conformal;
  pl.family_param = p;
  pl.range = RangeNorm::morrey;
  pl.range_a = lambda;
  pl.domain = DomainNorm::hardy;
  pl.domain_a = p;
  return pl;
}

Plan plan_t1_2(double p, double q, DomainNorm domain, double domain_a) {
  Plan pl;
  pl.resolved = Theorem::T1_2;
  pl.req = {1.0 + delta_p(p), 0.0};
  pl.witness = Witness::derivative;
  pl.witness_exponent = 1.0;
  pl.witness_param = p;
  pl.family = Family::conformal;
  pl.family_param = p;
  pl.range = RangeNorm::mean_lipschitz;
  pl.range_a = q;
  pl.range_b = 1.0 / q;
  pl.domain = domain;
  pl.domain_a = domain_a;
  return pl;
}

Plan plan_t1_3(double lambda) {
  Plan pl;
  pl.resolved = Theorem::T1_3;
  pl.req = {(1.0 + lambda) / 2.0, 1.0};
  pl.witness = Witness::log_sum;
  pl.witness_exponent = (3.0 - lambda) / 2.0;
  pl.family = Family::log_kernel;
  pl.range = RangeNorm::morrey;
  pl.range_a = lambda;
  pl.domain = DomainNorm::bloch;
  pl.domain_a = 1.0;
  return pl;
}

Plan plan_t1_5(double l1, double l2) {
  Plan pl;
  pl.resolved = Theorem::T1_5;
  pl.req = {1.0 + (l2 - l1) / 2.0, 0.0};
  pl.witness = Witness::moment_power;
  pl.witness_exponent = (3.0 - l2) / 2.0;
  pl.witness_param = (1.0 - l1) / 2.0;
  pl.family = Family::power_kernel;
  pl.family_param = (1.0 - l1) / 2.0;
  pl.range = RangeNorm::morrey;
  pl.range_a = l2;
  pl.domain = DomainNorm::bloch;
  pl.domain_a = (3.0 - l1) / 2.0;
  return pl;
}

Plan make_plan(const ScenarioConfig& c) {
  const auto& sp = c.params;
  switch (c.theorem) {
    case Theorem::T1_1:
      return plan_t1_1(*sp.p, *sp.lambda);
    case Theorem::C3_3:
      return plan_t1_1(kInf, *sp.lambda);
    case Theorem::C3_5:
      return plan_t1_1(*sp.p, 1.0 - 2.0 / *sp.p);
    case Theorem::T1_2: {
      const double p = *sp.p;
      if (c.part == 1) return plan_t1_2(p, *sp.q, DomainNorm::bloch, 1.0 + delta_p(p));
      Plan pl;
      pl.resolved = Theorem::T1_2;
      pl.req = {1.0 + delta_p(p), 1.0};
      pl.family = Family::conformal;
      pl.family_param = p;
      pl.range = RangeNorm::lambda11;
      pl.domain = DomainNorm::bloch;
      pl.domain_a = 1.0 + delta_p(p);
      pl.notes.push_back("part 2 is stated as a sufficient condition only; no converse is tested");
      return pl;
    }
    case Theorem::C3_6:
      return plan_t1_2(*sp.p, *sp.q, DomainNorm::hardy, *sp.p);
    case Theorem::C3_8: {
      const double pt = 2.0 / (1.0 - *sp.lambda);
      auto pl = plan_t1_2(pt, *sp.p, DomainNorm::morrey, *sp.lambda);
      pl.notes.push_back("test functions f_a are normalized in H^p with p = 2/(1-lambda)");
      return pl;
    }
    case Theorem::T1_3:
    case Theorem::C3_9:
      return plan_t1_3(*sp.lambda);
    case Theorem::T1_4: {
      auto pl = plan_t1_3(1.0);
      pl.resolved = Theorem::T1_4;
      pl.range = RangeNorm::lambda11;
      return pl;
    }
    case Theorem::T1_5:
      return plan_t1_5(*sp.lambda1, *sp.lambda2);
    case Theorem::C3_10:
      return plan_t1_5(*sp.lambda, *sp.lambda);
    case Theorem::R3_4: {
      Plan pl;
      pl.resolved = Theorem::R3_4;
      pl.req = {*sp.alpha, 0.0};
      pl.family = Family::conformal;
      pl.family_param = kInf;
      pl.range = RangeNorm::bloch;
      pl.range_a = 2.0 - *sp.alpha;
      pl.domain = DomainNorm::hardy;
      pl.domain_a = kInf;
      return pl;
    }
    case Theorem::R3_7: {
      Plan pl;
      pl.resolved = Theorem::R3_7;
      pl.req = {2.0, 0.0};
      pl.witness = Witness::blasco;
      pl.sufficiency = false;
      return pl;
    }
  }
  throw ConfigError("unhandled theorem");
}

PowerSeries family_series(const Plan& pl, double a, std::size_t N) {
  switch (pl.family) {
    case Family::conformal:
      return make_series(kind::ConformalKernel{a, pl.family_param}, N);
    case Family::log_kernel:
      return dilate(make_series(kind::LogKernel{}, N), a);
    case Family::power_kernel:
      return dilate(make_series(kind::PowerKernel{pl.family_param}, N), a);
  }
  throw ParameterError("unhandled family");
}

// Admissible radius of apply(f) without forming it: the envelope of the
// partial sums scaled by mu_N.
double output_radius(const RadialMeasure& m, const PowerSeries& f) {
  auto A = partial_sum_transform(f);
  auto env = A.envelope();
  if (!env) return 1.0;
  env->scale *= moment(m, f.truncation_order()).value;
  return PowerSeries(std::vector<cplx>(A.coeffs().begin(), A.coeffs().end()), env).admissible_radius();
}

double domain_norm(const Plan& pl, const PowerSeries& f) {
  switch (pl.domain) {
    case DomainNorm::hardy: return hardy_norm(f, pl.domain_a).value;
    case DomainNorm::bloch: return bloch_norm(f, pl.domain_a).value;
    case DomainNorm::morrey: return morrey_norm(f, pl.domain_a).value;
  }
  return 0.0;
}

double range_norm(const Plan& pl, const PowerSeries& g) {
  switch (pl.range) {
    case RangeNorm::morrey: return morrey_norm(g, pl.range_a).value;
    case RangeNorm::mean_lipschitz: return mean_lipschitz_norm(g, pl.range_a, pl.range_b).value;
    case RangeNorm::lambda11: return lambda11_statistic(g).value;
    case RangeNorm::bloch: return bloch_norm(g, pl.range_a).value;
  }
  return 0.0;
}

const char* range_name(RangeNorm r) {
  switch (r) {
    case RangeNorm::morrey: return "morrey";
    case RangeNorm::mean_lipschitz: return "mean_lipschitz";
    case RangeNorm::lambda11: return "lambda11";
    case RangeNorm::bloch: return "bloch";
  }
  return "?";
}

const char* domain_name(DomainNorm d) {
  switch (d) {
    case DomainNorm::hardy: return "hardy";
    case DomainNorm::bloch: return "bloch";
    case DomainNorm::morrey: return "morrey";
  }
  return "?";
}

// One grid point's worth of rows, or the error that replaced them.
struct Slot {
  std::vector<std::pair<std::string, double>> values;
  std::optional<RowError> error;
};

template <class F>
Slot capture(F&& body) {
  Slot s;
  try {
    body(s.values);
  } catch (const Error& e) {
    s.error = RowError{e.kind(), e.what()};
  } catch (const std::exception& e) {
    s.error = RowError{"InternalError", e.what()};
  }
  return s;
}

struct Table {
  std::string name;
  std::string parameter;
  std::vector<double> params;
  std::vector<double> x;
  std::vector<Slot> slots;
};

void append_rows(ExperimentReport& rep, const Table& t) {
  for (std::size_t i = 0; i < t.slots.size(); ++i) {
    const auto& s = t.slots[i];
    if (s.error) {
      rep.rows.push_back({t.name, t.parameter, t.params[i], "*", 0.0, s.error});
      continue;
    }
    for (const auto& [stat, v] : s.values) rep.rows.push_back({t.name, t.parameter, t.params[i], stat, v, {}});
  }
}

// Trend of one statistic across the table; nullopt when any slot failed.
std::optional<Trend> table_trend(ExperimentReport& rep, const Table& t, const std::string& stat) {
  std::vector<double> v;
  for (const auto& s : t.slots) {
    if (s.error) {
      rep.trends.push_back({t.name, stat, std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(), "unavailable"});
      return std::nullopt;
    }
    for (const auto& [name, val] : s.values)
      if (name == stat) v.push_back(val);
  }
  auto tr = classify_trend(t.x, v);
  rep.trends.push_back({t.name, stat, tr.slope, tr.sup, to_string(tr.verdict)});
  return tr;
}

// "growing", "not_growing" or empty for no assertion.
std::string expected_verdict(const ScenarioConfig& c, Standing st, bool necessity_like) {
  switch (c.expect) {
    case Expectation::bounded: return "not_growing";
    case Expectation::growing: return "growing";
    case Expectation::none: return "";
    case Expectation::automatic: break;
  }
  if (st == Standing::satisfies) return "not_growing";
  if (st == Standing::below && necessity_like) return "growing";
  return "";
}

void add_check(ExperimentReport& rep, const std::string& name, const std::string& expected,
               const std::optional<Trend>& tr) {
  if (expected.empty()) return;
  const std::string observed = !tr ? "error" : is_growing(*tr) ? "growing" : "not_growing";
  rep.checks.push_back({name, expected, observed, observed == expected});
}

std::vector<std::size_t> sequence_grid(std::size_t N) {
  std::vector<std::size_t> out;
  for (int j = 2;; ++j) {
    const auto n = static_cast<std::size_t>(std::floor(std::exp2(0.5 * j)));
    if (n > N) break;
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

Table derivative_witness(const ScenarioConfig& c, const Plan& pl, unsigned threads) {
  Table t{"necessity", "a", {}, {}, {}};
  const auto gaps = carleson_gaps(c.depth);
  t.slots.resize(gaps.size());
  for (double g : gaps) {
    t.params.push_back(1.0 - g);
    t.x.push_back(-std::log(g));
  }
  parallel_for(gaps.size(), threads, [&](std::size_t i) {
    t.slots[i] = capture([&](auto& out) {
      const double gap = gaps[i], a = 1.0 - gap;
      std::size_t N = 64;
      auto f = make_series(kind::ConformalKernel{a, pl.witness_param}, N);
      while ((f.admissible_radius() < a || differentiate(f, 1).admissible_radius() < a) &&
             N < c.max_truncation) {
        N *= 2;
        f = make_series(kind::ConformalKernel{a, pl.witness_param}, N);
      }
      const double d = std::abs(derivative_at(c.measure, f, a, 1));
      out.emplace_back("witness", std::pow(gap, pl.witness_exponent) * d);
      out.emplace_back("tail_quotient", tail_mass(c.measure, a) / std::pow(gap, pl.req.s) *
                                            std::pow(1.0 - std::log(gap), pl.req.beta));
      out.emplace_back("truncation", static_cast<double>(N));
    });
  });
  return t;
}

Table sequence_witness(const ScenarioConfig& c, const Plan& pl, const OperatorInstance& op) {
  Table t{"necessity", "n", {}, {}, {}};
  const auto grid = sequence_grid(c.truncation);
  for (auto n : grid) {
    t.params.push_back(static_cast<double>(n));
    t.x.push_back(std::log(static_cast<double>(n)));
  }
  Slot all = capture([&](auto&) {
    const auto mu = op.moments(c.truncation).values;
    // running sums in one pass; the grid is increasing
    double acc = 0.0, inner = 0.0, b = 1.0;
    std::size_t k = 0;
    for (auto n : grid) {
      while (k < n) {
        ++k;
        if (pl.witness == Witness::log_sum) {
          inner += 1.0 / static_cast<double>(k);
        } else {
          if (k == 1) inner = 1.0;  // b_0
          b *= (pl.witness_param + static_cast<double>(k) - 1.0) / static_cast<double>(k);
          inner += b;
        }
        acc += static_cast<double>(k) * mu[k] * inner;
      }
      Slot s;
      const double nd = static_cast<double>(n);
      if (pl.witness == Witness::log_sum) {
        s.values.emplace_back("witness", acc * std::pow(nd, -pl.witness_exponent));
      } else {
        s.values.emplace_back("witness", mu[n] * std::pow(nd, pl.req.s));
        s.values.emplace_back("partial_sum_witness", acc * std::pow(nd, -pl.witness_exponent));
      }
      t.slots.push_back(std::move(s));
    }
  });
  if (all.error) t.slots.assign(grid.size(), Slot{{}, all.error});
  return t;
}

Table sufficiency_ratio(const ScenarioConfig& c, const Plan& pl, const OperatorInstance& op, unsigned threads) {
  Table t{"sufficiency", "a", {}, {}, {}};
  const auto gaps = carleson_gaps(c.depth);
  for (double g : gaps) {
    t.params.push_back(1.0 - g);
    t.x.push_back(-std::log(g));
  }
  // Truncations first, so the moment cache grows once.
  std::vector<std::size_t> Ns(gaps.size(), 0);
  std::vector<std::optional<RowError>> errs(gaps.size());
  parallel_for(gaps.size(), threads, [&](std::size_t i) {
    auto s = capture([&](auto&) {
      const double target = 1.0 - gaps[i] / 4.0, a = 1.0 - gaps[i];
      std::size_t N = 64;
      while (N < c.max_truncation && output_radius(c.measure, family_series(pl, a, N)) < target) N *= 2;
      Ns[i] = std::min(N, c.max_truncation);
    });
    errs[i] = s.error;
  });
  std::size_t top = 0;
  for (std::size_t i = 0; i < Ns.size(); ++i)
    if (!errs[i]) top = std::max(top, Ns[i]);
  Slot warm = capture([&](auto&) { op.moments(top); });
  t.slots.resize(gaps.size());
  parallel_for(gaps.size(), threads, [&](std::size_t i) {
    if (errs[i] || warm.error) {
      t.slots[i].error = errs[i] ? errs[i] : warm.error;
      return;
    }
    t.slots[i] = capture([&](auto& out) {
      const double a = 1.0 - gaps[i];
      const auto f = family_series(pl, a, Ns[i]);
      const auto g = apply(op, f);
      const double dn = domain_norm(pl, f);
      const double rn = range_norm(pl, g);
      out.emplace_back("domain_norm", dn);
      out.emplace_back("range_norm", rn);
      out.emplace_back("ratio", rn / dn);
      out.emplace_back("truncation", static_cast<double>(Ns[i]));
      out.emplace_back("resolved_radius", g.admissible_radius());
    });
  });
  return t;
}

}  // namespace

const char* to_string(Standing s) {
  switch (s) {
    case Standing::satisfies: return "satisfies";
    case Standing::below: return "below";
    case Standing::gap: return "gap";
  }
  return "?";
}

Requirement required_exponent(const ScenarioConfig& c) {
  validate(c);
  return make_plan(c).req;
}

Standing standing(const RadialMeasure& m, Requirement req, double margin) {
  const auto e = nominal_exponent(m);
  const bool same = std::fabs(e.s - req.s) <= kSameExponent;
  if (e.s > req.s + kSameExponent || (same && e.gamma >= req.beta)) return Standing::satisfies;
  if (e.s < req.s - margin || (same && e.gamma <= req.beta - 1.0)) return Standing::below;
  return Standing::gap;
}

PowerSeries dilate(const PowerSeries& f, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw ParameterError("dilation factor must lie in (0, 1]");
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  double ak = 1.0;
  for (auto& v : c) {
    v *= ak;
    ak *= a;
  }
  auto env = f.envelope();
  if (env) env->ratio *= a;
  return PowerSeries(std::move(c), env);
}

const OperatorInstance& OperatorPool::get(const RadialMeasure& m) {
  const auto key = measure_to_json(m).dump();
  std::lock_guard lock(mutex_);
  auto& slot = ops_[key];
  if (!slot) slot = std::make_unique<OperatorInstance>(m, threads_);
  return *slot;
}

ExperimentReport run_scenario(const ScenarioConfig& c, unsigned threads, OperatorPool* pool) {
  validate(c);
  const Plan pl = make_plan(c);
  std::unique_ptr<OperatorInstance> own;
  const OperatorInstance* op = nullptr;
  if (pool) {
    op = &pool->get(c.measure);
  } else {
    own = std::make_unique<OperatorInstance>(c.measure, threads);
    op = own.get();
  }

  ExperimentReport rep;
  rep.command = "scenario";
  rep.name = c.name;
  rep.config = scenario_to_json(c);
  const auto nominal = nominal_exponent(c.measure);
  const Standing st = standing(c.measure, pl.req, c.tolerances.exponent_margin);
  rep.metadata = {{"resolved_theorem", to_string(pl.resolved)},
                  {"required_exponent", number_to_json(quantize(pl.req.s))},
                  {"required_log_exponent", number_to_json(quantize(pl.req.beta))},
                  {"measure_exponent", number_to_json(quantize(nominal.s))},
                  {"measure_log_exponent", number_to_json(quantize(nominal.gamma))},
                  {"standing", to_string(st)},
                  {"notes", pl.notes}};

  const bool want_nec = c.direction != Direction::sufficiency;
  const bool want_suf = c.direction != Direction::necessity;

  if (pl.witness == Witness::blasco) {
    Table t{"equivalence", "M", {static_cast<double>(c.truncation)}, {}, {}};
    std::optional<Trend> tr;
    Slot s = capture([&](auto& out) {
      const auto b = blasco_statistic(op->moments(c.truncation));
      out.emplace_back("sup", b.sup_value);
      out.emplace_back("argmax_n", static_cast<double>(b.argmax_n));
      out.emplace_back("tail_exponent", b.tail_exponent);
      tr = b.trend;
    });
    t.slots.push_back(s);
    append_rows(rep, t);
    if (tr) rep.trends.push_back({"equivalence", "blasco", tr->slope, tr->sup, to_string(tr->verdict)});
    else rep.trends.push_back({"equivalence", "blasco", std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::quiet_NaN(), "unavailable"});
    add_check(rep, "equivalence:blasco", expected_verdict(c, st, true), tr);
    return rep;
  }

  if (want_nec && pl.witness != Witness::none) {
    const Table t = pl.witness == Witness::derivative ? derivative_witness(c, pl, threads)
                                                      : sequence_witness(c, pl, *op);
    append_rows(rep, t);
    const auto tr = table_trend(rep, t, "witness");
    if (pl.witness == Witness::moment_power) table_trend(rep, t, "partial_sum_witness");
    if (pl.witness == Witness::derivative) table_trend(rep, t, "tail_quotient");
    add_check(rep, "necessity:witness", expected_verdict(c, st, true), tr);
  }
  if (want_suf && pl.sufficiency) {
    rep.metadata["sufficiency_ratio"] = std::string(range_name(pl.range)) + " / " + domain_name(pl.domain);
    const Table t = sufficiency_ratio(c, pl, *op, threads);
    append_rows(rep, t);
    const auto tr = table_trend(rep, t, "ratio");
    add_check(rep, "sufficiency:ratio", expected_verdict(c, st, false), tr);
  }
  return rep;
}

namespace {

ScenarioConfig scenario(std::string name, Theorem th, Direction d, SpaceParams sp, RadialMeasure m, int depth = 0) {
  ScenarioConfig c;
  c.name = std::move(name);
  c.theorem = th;
  c.direction = d;
  c.params = sp;
  c.measure = std::move(m);
  if (depth) c.depth = depth;
  return c;
}

}  // namespace

std::vector<ScenarioConfig> verify_suite() {
  using D = Direction;
  auto bl = [](double s, double g = 0.0) { return RadialMeasure::beta_log(s, g); };
  auto leb = RadialMeasure::lebesgue();
  std::vector<ScenarioConfig> v;
  SpaceParams inf_half;
  inf_half.p = kInf;
  inf_half.lambda = 0.5;
  SpaceParams inf_one;
  inf_one.p = kInf;
  inf_one.lambda = 1.0;
  SpaceParams two_half;
  two_half.p = 2.0;
  two_half.lambda = 0.5;
  v.push_back(scenario("T1_1 p=inf lambda=0.5 sufficiency", Theorem::T1_1, D::sufficiency, inf_half, bl(0.75)));
  v.push_back(scenario("T1_1 p=inf lambda=0.5 necessity", Theorem::T1_1, D::necessity, inf_half, bl(0.5)));
  v.push_back(scenario("T1_1 p=inf lambda=1 sufficiency", Theorem::T1_1, D::sufficiency, inf_one, leb));
  v.push_back(scenario("T1_1 p=inf lambda=1 necessity", Theorem::T1_1, D::necessity, inf_one, bl(0.75)));
  v.push_back(scenario("T1_1 p=2 lambda=0.5 sufficiency", Theorem::T1_1, D::sufficiency, two_half, bl(1.25)));
  v.push_back(scenario("T1_1 p=2 lambda=0.5 necessity", Theorem::T1_1, D::necessity, two_half, bl(1.0)));

  SpaceParams half;
  half.lambda = 0.5;
  v.push_back(scenario("T1_3 lambda=0.5 necessity gamma=0", Theorem::T1_3, D::necessity, half, bl(0.75)));
  v.push_back(scenario("T1_3 lambda=0.5 sufficiency gamma=1", Theorem::T1_3, D::sufficiency, half, bl(0.75, 1.0), 24));
  v.push_back(scenario("T1_4 necessity gamma=0", Theorem::T1_4, D::necessity, {}, bl(1.0)));
  v.push_back(scenario("T1_4 sufficiency gamma=1", Theorem::T1_4, D::sufficiency, {}, bl(1.0, 1.0)));

  for (auto [l1, l2] : {std::pair{0.5, 0.5}, std::pair{0.25, 0.75}}) {
    SpaceParams sp;
    sp.lambda1 = l1;
    sp.lambda2 = l2;
    const double req = 1.0 + (l2 - l1) / 2.0;
    const std::string tag = "T1_5 lambda1=" + std::to_string(l1).substr(0, 4) + " lambda2=" +
                            std::to_string(l2).substr(0, 4);
    v.push_back(scenario(tag + " at threshold", Theorem::T1_5, D::necessity, sp, bl(req)));
    v.push_back(scenario(tag + " below threshold", Theorem::T1_5, D::necessity, sp, bl(req - 0.25)));
  }

  v.push_back(scenario("R3_7 BetaLog(2,0)", Theorem::R3_7, D::both, {}, bl(2.0)));
  v.push_back(scenario("R3_7 Lebesgue", Theorem::R3_7, D::both, {}, leb));

  SpaceParams p2q2;
  p2q2.p = 2.0;
  p2q2.q = 2.0;
  v.push_back(scenario("T1_2(1) p=2 q=2", Theorem::T1_2, D::both, p2q2, bl(1.5)));
  SpaceParams p2;
  p2.p = 2.0;
  auto t12b = scenario("T1_2(2) p=2", Theorem::T1_2, D::sufficiency, p2, bl(1.5, 1.0));
  t12b.part = 2;
  v.push_back(t12b);
  SpaceParams al;
  al.alpha = 0.5;
  v.push_back(scenario("R3_4 alpha=0.5", Theorem::R3_4, D::sufficiency, al, bl(0.5)));
  SpaceParams l1;
  l1.lambda = 1.0;
  v.push_back(scenario("C3_3 lambda=1 Lebesgue", Theorem::C3_3, D::both, l1, leb));
  SpaceParams p4;
  p4.p = 4.0;
  v.push_back(scenario("C3_5 p=4 Lebesgue", Theorem::C3_5, D::sufficiency, p4, leb));
  SpaceParams p1q2;
  p1q2.p = 1.0;
  p1q2.q = 2.0;
  v.push_back(scenario("C3_6 p=1 q=2 below", Theorem::C3_6, D::necessity, p1q2, bl(1.5)));
  SpaceParams c38;
  c38.lambda = 0.5;
  c38.p = 2.0;
  v.push_back(scenario("C3_8 lambda=0.5 p=2", Theorem::C3_8, D::sufficiency, c38, bl(1.25)));
  v.push_back(scenario("C3_9 lambda=1 Lebesgue below", Theorem::C3_9, D::necessity, l1, leb));
  SpaceParams c310;
  c310.lambda = 0.5;
  v.push_back(scenario("C3_10 lambda=0.5 Lebesgue", Theorem::C3_10, D::both, c310, leb));
  for (auto& c : v) validate(c);
  return v;
}

std::vector<ExperimentReport> run_suite(const std::vector<ScenarioConfig>& configs, unsigned threads) {
  OperatorPool pool(threads);
  std::vector<ExperimentReport> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back(run_scenario(c, threads, &pool));
  return out;
}

}  // namespace cesaro
