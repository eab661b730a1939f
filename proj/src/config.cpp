#include "cesaro/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cesaro/error.hpp"

namespace cesaro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks which keys were read so leftovers can be rejected.
class Fields {
 public:
  Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + " must be an object");
  }
  bool has(const std::string& k) const { return j_.contains(k); }
  const json& at(const std::string& k) {
    seen_.insert(k);
    if (!j_.contains(k)) throw ConfigError(where_ + " is missing \"" + k + "\"");
    return j_.at(k);
  }
  double number(const std::string& k) { return number_from_json(at(k), where_ + "." + k); }
  double number_or(const std::string& k, double dflt) { return has(k) ? number(k) : dflt; }
  std::optional<double> optional_number(const std::string& k) {
    if (!has(k)) return std::nullopt;
    return number(k);
  }
  std::string string(const std::string& k) {
    const auto& v = at(k);
    if (!v.is_string()) throw ConfigError(where_ + "." + k + " must be a string");
    return v.get<std::string>();
  }
  std::size_t count(const std::string& k) {
    const auto& v = at(k);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(where_ + "." + k + " must be a nonnegative integer");
    return v.get<std::size_t>();
  }
  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!seen_.count(k)) throw ConfigError(where_ + " has unknown field \"" + k + "\"");
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

template <class E, std::size_t K>
E enum_from(const std::string& s, const E (&values)[K], const char* what) {
  for (E v : values)
    if (s == to_string(v)) return v;
  throw ConfigError(std::string("unknown ") + what + " \"" + s + "\"");
}

constexpr Theorem kTheorems[] = {Theorem::T1_1, Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::T1_5,
                                 Theorem::C3_3, Theorem::C3_5, Theorem::C3_6, Theorem::C3_8, Theorem::C3_9,
                                 Theorem::C3_10, Theorem::R3_4, Theorem::R3_7};
constexpr Direction kDirections[] = {Direction::necessity, Direction::sufficiency, Direction::both};
constexpr Expectation kExpectations[] = {Expectation::automatic, Expectation::bounded, Expectation::growing,
                                         Expectation::none};

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

void require_range(const std::optional<double>& v, const char* name, double lo, bool lo_open, double hi,
                   bool hi_open, const char* theorem) {
  std::ostringstream os;
  os << theorem << " requires " << name << " in " << (lo_open ? "(" : "[") << lo << ", " << hi
     << (hi_open ? ")" : "]");
  if (!v) throw ConfigError(os.str());
  const double x = *v;
  const bool ok = (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  if (!ok) throw ConfigError(os.str());
}

}  // namespace

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T1_1: return "T1_1";
    case Theorem::T1_2: return "T1_2";
    case Theorem::T1_3: return "T1_3";
    case Theorem::T1_4: return "T1_4";
    case Theorem::T1_5: return "T1_5";
    case Theorem::C3_3: return "C3_3";
    case Theorem::C3_5: return "C3_5";
    case Theorem::C3_6: return "C3_6";
    case Theorem::C3_8: return "C3_8";
    case Theorem::C3_9: return "C3_9";
    case Theorem::C3_10: return "C3_10";
    case Theorem::R3_4: return "R3_4";
    case Theorem::R3_7: return "R3_7";
  }
  return "?";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::necessity: return "necessity";
    case Direction::sufficiency: return "sufficiency";
    case Direction::both: return "both";
  }
  return "?";
}

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::automatic: return "auto";
    case Expectation::bounded: return "bounded";
    case Expectation::growing: return "growing";
    case Expectation::none: return "none";
  }
  return "?";
}

double number_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ConfigError(what + " must be a number or \"inf\"");
}

json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

RadialMeasure measure_from_json(const json& j) {
  Fields f(j, "measure");
  const auto family = f.string("family");
  try {
    if (family == "lebesgue") {
      f.finish();
      return RadialMeasure::lebesgue();
    }
    if (family == "beta_log") {
      const double s = f.number("s");
      const double gamma = f.number_or("gamma", 0.0);
      const double norm = f.number_or("normalizer", 1.0);
      f.finish();
      return RadialMeasure::beta_log(s, gamma, norm);
    }
    if (family == "atoms") {
      const auto& list = f.at("atoms");
      require(list.is_array(), "measure.atoms must be an array");
      std::vector<Atom> atoms;
      for (const auto& a : list) {
        Fields af(a, "measure.atoms[]");
        atoms.push_back({af.number("location"), af.number("weight")});
        af.finish();
      }
      f.finish();
      return RadialMeasure::atoms(std::move(atoms));
    }
    if (family == "sum") {
      const auto& list = f.at("parts");
      require(list.is_array(), "measure.parts must be an array");
      std::vector<RadialMeasure> parts;
      for (const auto& p : list) parts.push_back(measure_from_json(p));
      f.finish();
      return RadialMeasure::sum(std::move(parts));
    }
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("invalid measure: ") + e.what());
  }
  throw ConfigError("unknown measure family \"" + family + "\"");
}

json measure_to_json(const RadialMeasure& m) {
  return std::visit(
      [](const auto& fam) -> json {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, AtomsFamily>) {
          json list = json::array();
          for (const auto& a : fam.atoms) list.push_back({{"location", a.location}, {"weight", a.weight}});
          return {{"family", "atoms"}, {"atoms", list}};
        } else if constexpr (std::is_same_v<T, BetaLogFamily>) {
          return {{"family", "beta_log"}, {"s", fam.s}, {"gamma", fam.gamma}, {"normalizer", fam.normalizer}};
        } else if constexpr (std::is_same_v<T, LebesgueFamily>) {
          return {{"family", "lebesgue"}};
        } else {
          json list = json::array();
          for (const auto& p : fam.parts) list.push_back(measure_to_json(p));
          return {{"family", "sum"}, {"parts", list}};
        }
      },
      m.family());
}

TestFunctionKind function_from_json(const json& j) {
  Fields f(j, "function");
  const auto k = f.string("kind");
  TestFunctionKind out;
  if (k == "conformal_kernel") {
    out = kind::ConformalKernel{f.number("a"), f.number("p")};
  } else if (k == "log_kernel") {
    out = kind::LogKernel{};
  } else if (k == "power_kernel") {
    out = kind::PowerKernel{f.number("c")};
  } else if (k == "lacunary") {
    out = kind::Lacunary{};
  } else if (k == "monomial") {
    out = kind::Monomial{f.count("n")};
  } else if (k == "constant") {
    out = kind::Constant{cplx(f.number("re"), f.number_or("im", 0.0))};
  } else if (k == "geometric_ones") {
    out = kind::GeometricOnes{};
  } else {
    throw ConfigError("unknown function kind \"" + k + "\"");
  }
  f.finish();
  return out;
}

json function_to_json(const TestFunctionKind& k) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, kind::ConformalKernel>)
          return {{"kind", "conformal_kernel"}, {"a", v.a}, {"p", number_to_json(v.p)}};
        else if constexpr (std::is_same_v<T, kind::LogKernel>)
          return {{"kind", "log_kernel"}};
        else if constexpr (std::is_same_v<T, kind::PowerKernel>)
          return {{"kind", "power_kernel"}, {"c", v.c}};
        else if constexpr (std::is_same_v<T, kind::Lacunary>)
          return {{"kind", "lacunary"}};
        else if constexpr (std::is_same_v<T, kind::Monomial>)
          return {{"kind", "monomial"}, {"n", v.n}};
        else if constexpr (std::is_same_v<T, kind::Constant>)
          return {{"kind", "constant"}, {"re", v.v.real()}, {"im", v.v.imag()}};
        else
          return {{"kind", "geometric_ones"}};
      },
      k);
}

SpaceSpec space_from_json(const json& j) {
  Fields f(j, "space");
  const auto k = f.string("space");
  SpaceSpec out;
  if (k == "hardy")
    out = space::Hardy{f.number("p")};
  else if (k == "bloch")
    out = space::BlochType{f.number("alpha")};
  else if (k == "morrey")
    out = space::Morrey{f.number("lambda")};
  else if (k == "mean_lipschitz")
    out = space::MeanLip{f.number("p"), f.number("alpha")};
  else
    throw ConfigError("unknown space \"" + k + "\"");
  f.finish();
  try {
    validate(out);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return out;
}

json space_to_json(const SpaceSpec& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, space::Hardy>)
          return {{"space", "hardy"}, {"p", number_to_json(v.p)}};
        else if constexpr (std::is_same_v<T, space::BlochType>)
          return {{"space", "bloch"}, {"alpha", v.alpha}};
        else if constexpr (std::is_same_v<T, space::Morrey>)
          return {{"space", "morrey"}, {"lambda", v.lambda}};
        else
          return {{"space", "mean_lipschitz"}, {"p", v.p}, {"alpha", v.alpha}};
      },
      s);
}

void validate(const ScenarioConfig& c) {
  const auto& sp = c.params;
  const char* th = to_string(c.theorem);
  // which parameters each statement takes
  auto only = [&](std::initializer_list<const char*> names) {
    const std::pair<const char*, const std::optional<double>*> all[] = {
        {"p", &sp.p}, {"q", &sp.q}, {"lambda", &sp.lambda}, {"lambda1", &sp.lambda1},
        {"lambda2", &sp.lambda2}, {"alpha", &sp.alpha}};
    for (const auto& [n, v] : all) {
      if (!v->has_value()) continue;
      bool allowed = false;
      for (const char* a : names) allowed = allowed || std::string(a) == n;
      if (!allowed) throw ConfigError(std::string(th) + " does not take space parameter " + n);
    }
  };
  switch (c.theorem) {
    case Theorem::T1_1:
      only({"p", "lambda"});
      require_range(sp.p, "p", 0, true, kInf, false, th);
      require_range(sp.lambda, "lambda", 0, true, 1, false, th);
      break;
    case Theorem::T1_2:
      require(c.part == 1 || c.part == 2, "T1_2 part must be 1 or 2");
      require_range(sp.p, "p", 0, true, kInf, true, th);
      if (c.part == 1) {
        only({"p", "q"});
        require_range(sp.q, "q", 1, true, kInf, true, th);
      } else {
        only({"p"});
        require(c.direction != Direction::necessity, "T1_2 part 2 states sufficiency only");
      }
      break;
    case Theorem::T1_3:
    case Theorem::C3_9:
      only({"lambda"});
      require_range(sp.lambda, "lambda", 0, true, 1, false, th);
      break;
    case Theorem::T1_4:
      only({});
      break;
    case Theorem::T1_5:
      only({"lambda1", "lambda2"});
      require_range(sp.lambda1, "lambda1", 0, true, 1, true, th);
      require_range(sp.lambda2, "lambda2", 0, true, 1, false, th);
      break;
    case Theorem::C3_3:
      only({"lambda"});
      require_range(sp.lambda, "lambda", 0, true, 1, false, th);
      break;
    case Theorem::C3_5:
      only({"p"});
      require_range(sp.p, "p", 2, true, kInf, false, th);
      break;
    case Theorem::C3_6:
      only({"p", "q"});
      require_range(sp.p, "p", 0, true, kInf, false, th);
      require_range(sp.q, "q", 1, true, kInf, true, th);
      break;
    case Theorem::C3_8:
      only({"lambda", "p"});
      require_range(sp.lambda, "lambda", 0, true, 1, true, th);
      require_range(sp.p, "p", 1, true, kInf, true, th);
      break;
    case Theorem::C3_10:
      only({"lambda"});
      require_range(sp.lambda, "lambda", 0, true, 1, true, th);
      break;
    case Theorem::R3_4:
      only({"alpha"});
      require_range(sp.alpha, "alpha", 0, true, 0.5, false, th);
      require(c.direction != Direction::necessity, "R3_4 states sufficiency only");
      break;
    case Theorem::R3_7:
      only({});
      break;
  }
  if (c.theorem != Theorem::T1_2) require(c.part == 1, "part applies to T1_2 only");
  require(c.depth >= 8 && c.depth <= 40, "depth must lie in [8, 40]");
  require(c.truncation >= 64 && c.truncation <= (std::size_t{1} << 20), "truncation must lie in [64, 2^20]");
  require(c.max_truncation >= 64 && c.max_truncation <= (std::size_t{1} << 20),
          "max_truncation must lie in [64, 2^20]");
  require(c.tolerances.exponent_margin >= 0.0 && std::isfinite(c.tolerances.exponent_margin),
          "exponent_margin must be finite and nonnegative");
}

ScenarioConfig scenario_from_json(const json& j) {
  Fields f(j, "scenario");
  ScenarioConfig c;
  c.theorem = enum_from(f.string("theorem"), kTheorems, "theorem");
  if (f.has("name")) c.name = f.string("name");
  if (f.has("part")) {
    const auto& v = f.at("part");
    require(v.is_number_integer(), "scenario.part must be an integer");
    c.part = v.get<int>();
  }
  if (f.has("direction")) c.direction = enum_from(f.string("direction"), kDirections, "direction");
  if (f.has("space_params")) {
    Fields p(f.at("space_params"), "space_params");
    c.params.p = p.optional_number("p");
    c.params.q = p.optional_number("q");
    c.params.lambda = p.optional_number("lambda");
    c.params.lambda1 = p.optional_number("lambda1");
    c.params.lambda2 = p.optional_number("lambda2");
    c.params.alpha = p.optional_number("alpha");
    p.finish();
  }
  c.measure = measure_from_json(f.at("measure"));
  if (f.has("truncation")) c.truncation = f.count("truncation");
  if (f.has("max_truncation")) c.max_truncation = f.count("max_truncation");
  if (f.has("depth")) c.depth = static_cast<int>(f.count("depth"));
  if (f.has("tolerances")) {
    Fields t(f.at("tolerances"), "tolerances");
    c.tolerances.exponent_margin = t.number_or("exponent_margin", c.tolerances.exponent_margin);
    t.finish();
  }
  if (f.has("expect")) c.expect = enum_from(f.string("expect"), kExpectations, "expectation");
  f.finish();
  if (c.name.empty()) c.name = std::string(to_string(c.theorem)) + "/" + to_string(c.direction);
  validate(c);
  return c;
}

json scenario_to_json(const ScenarioConfig& c) {
  json sp = json::object();
  auto put = [&](const char* n, const std::optional<double>& v) {
    if (v) sp[n] = number_to_json(*v);
  };
  put("p", c.params.p);
  put("q", c.params.q);
  put("lambda", c.params.lambda);
  put("lambda1", c.params.lambda1);
  put("lambda2", c.params.lambda2);
  put("alpha", c.params.alpha);
  json out = {{"name", c.name},
              {"theorem", to_string(c.theorem)},
              {"direction", to_string(c.direction)},
              {"space_params", sp},
              {"measure", measure_to_json(c.measure)},
              {"truncation", c.truncation},
              {"max_truncation", c.max_truncation},
              {"depth", c.depth},
              {"tolerances", {{"exponent_margin", c.tolerances.exponent_margin}}},
              {"expect", to_string(c.expect)}};
  if (c.theorem == Theorem::T1_2) out["part"] = c.part;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace cesaro
