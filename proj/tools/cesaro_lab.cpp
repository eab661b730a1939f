#include <CLI11.hpp>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <set>

#include "cesaro/carleson.hpp"
#include "cesaro/error.hpp"
#include "cesaro/estimates.hpp"
#include "cesaro/lab.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/report.hpp"
#include "cesaro/spaces.hpp"

using namespace cesaro;

namespace {

struct Globals {
  std::string config;
  std::string out;
  std::string format = "json";
  std::optional<std::size_t> truncation;
  std::optional<int> depth;
  unsigned threads = 1;
};

// Inline overrides for the single-shot commands, merged over --config.
struct Inputs {
  std::string measure, function, space, kind;
  std::optional<double> t, beta, s, alpha, r, delta, k;
  std::string z, w, a;
};

json load_input(const Globals& g) {
  if (g.config.empty()) return json::object();
  auto j = read_json_file(g.config);
  if (!j.is_object()) throw ConfigError("config document must be a JSON object");
  return j;
}

void merge(json& j, const Inputs& in) {
  auto put_json = [&](const char* key, const std::string& text) {
    if (text.empty()) return;
    try {
      j[key] = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("--") + key + ": " + e.what());
    }
  };
  put_json("measure", in.measure);
  put_json("function", in.function);
  put_json("space", in.space);
  put_json("z", in.z);
  put_json("w", in.w);
  put_json("a", in.a);
  if (!in.kind.empty()) j["kind"] = in.kind;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  put("t", in.t);
  put("beta", in.beta);
  put("s", in.s);
  put("alpha", in.alpha);
  put("r", in.r);
  put("delta", in.delta);
  put("k", in.k);
}

void only(const json& j, const std::set<std::string>& allowed, const std::string& cmd) {
  for (const auto& [key, v] : j.items())
    if (!allowed.count(key)) throw ConfigError(cmd + ": unknown field '" + key + "'");
}

const json& need(const json& j, const char* key, const std::string& cmd) {
  if (!j.contains(key)) throw ConfigError(cmd + ": missing field '" + key + "'");
  return j.at(key);
}

double number(const json& j, const char* key, double fallback, const std::string& cmd) {
  if (!j.contains(key)) {
    if (std::isnan(fallback)) throw ConfigError(cmd + ": missing field '" + key + "'");
    return fallback;
  }
  return number_from_json(j.at(key), key);
}

// A number or [re, im].
cplx complex_from(const json& j, const char* key) {
  if (j.is_array()) {
    if (j.size() != 2) throw ConfigError(std::string(key) + ": complex values are [re, im]");
    return {number_from_json(j[0], key), number_from_json(j[1], key)};
  }
  return number_from_json(j, key);
}

json complex_to(cplx z) { return json::array({number_to_json(quantize(z.real())), number_to_json(quantize(z.imag()))}); }

ExperimentReport base(const std::string& cmd, json config) {
  ExperimentReport r;
  r.command = cmd;
  r.name = cmd;
  r.config = std::move(config);
  r.metadata = json::object();
  return r;
}

void add_trend(ExperimentReport& r, const std::string& table, const std::string& stat, const Trend& t) {
  r.trends.push_back({table, stat, t.slope, t.sup, to_string(t.verdict)});
}

ExperimentReport cmd_moments(json j, const Globals& g) {
  only(j, {"measure"}, "moments");
  const auto m = measure_from_json(need(j, "measure", "moments"));
  const std::size_t N = g.truncation.value_or(kDefaultTruncation);
  j["measure"] = measure_to_json(m);
  j["truncation"] = N;
  auto r = base("moments", j);
  const auto seq = moments(m, N, g.threads);
  for (std::size_t n = 0; n <= N; ++n) {
    r.rows.push_back({"moments", "n", double(n), "moment", seq.values[n], {}});
    r.rows.push_back({"moments", "n", double(n), "error", seq.err[n], {}});
  }
  try {
    r.metadata["decay_exponent"] = number_to_json(quantize(moment_decay_fit(seq).s_hat));
  } catch (const Error&) {
    // too few moments, or they vanish inside the window
    r.metadata["decay_exponent"] = nullptr;
  }
  return r;
}

ExperimentReport tail_like(const std::string& cmd, json j, const Globals& g, const char* exponent_key) {
  only(j, {"measure", exponent_key, "beta"}, cmd);
  const auto m = measure_from_json(need(j, "measure", cmd));
  const double t = number(j, exponent_key, NAN, cmd);
  const double beta = number(j, "beta", 0.0, cmd);
  const int depth = g.depth.value_or(kDefaultCarlesonDepth);
  j["measure"] = measure_to_json(m);
  j[exponent_key] = number_to_json(t);
  j["beta"] = number_to_json(beta);
  j["depth"] = depth;
  auto r = base(cmd, j);
  const auto rep = tail_statistic(m, t, beta, depth, g.threads);
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    r.rows.push_back({"tail", "a", rep.grid[i], "quotient", rep.statistic[i], {}});
  r.trends.push_back({"tail", "quotient", rep.trend_slope, rep.sup_statistic, to_string(rep.verdict)});
  r.metadata["verdict"] = to_string(rep.verdict);
  r.metadata["sup"] = number_to_json(quantize(rep.sup_statistic));
  if (rep.fitted_moment_exponent)
    r.metadata["fitted_moment_exponent"] = number_to_json(quantize(rep.fitted_moment_exponent->s_hat));
  return r;
}

ExperimentReport cmd_classify(json j, const Globals& g) {
  auto r = tail_like("classify", std::move(j), g, "s");
  const auto m = measure_from_json(r.config["measure"]);
  const auto e = nominal_exponent(m);
  r.metadata["nominal_exponent"] = number_to_json(e.s);
  r.metadata["nominal_log_exponent"] = number_to_json(e.gamma);
  const std::string v = r.metadata["verdict"];
  r.metadata["carleson"] = v != "growing";
  r.metadata["vanishing"] = v == "consistent_vanishing";
  return r;
}

ExperimentReport cmd_apply(json j, const Globals& g) {
  only(j, {"measure", "function"}, "apply");
  const auto m = measure_from_json(need(j, "measure", "apply"));
  const auto k = function_from_json(need(j, "function", "apply"));
  const std::size_t N = g.truncation.value_or(kDefaultTruncation);
  j["measure"] = measure_to_json(m);
  j["function"] = function_to_json(k);
  j["truncation"] = N;
  auto r = base("apply", j);
  OperatorInstance op(m, g.threads);
  const auto out = apply(op, make_series(k, N));
  for (std::size_t n = 0; n < out.coeffs().size(); ++n) {
    r.rows.push_back({"coefficients", "n", double(n), "re", out[n].real(), {}});
    r.rows.push_back({"coefficients", "n", double(n), "im", out[n].imag(), {}});
  }
  r.metadata["admissible_radius"] = number_to_json(quantize(out.admissible_radius()));
  return r;
}

ExperimentReport cmd_norm(json j, const Globals& g) {
  only(j, {"measure", "function", "space"}, "norm");
  const auto k = function_from_json(need(j, "function", "norm"));
  const auto sp = space_from_json(need(j, "space", "norm"));
  const std::size_t N = g.truncation.value_or(kDefaultTruncation);
  j["function"] = function_to_json(k);
  j["space"] = space_to_json(sp);
  j["truncation"] = N;
  NormOptions opt;
  opt.depth = g.depth.value_or(opt.depth);
  opt.threads = g.threads;
  j["depth"] = opt.depth;
  auto f = make_series(k, N);
  if (j.contains("measure")) {
    const auto m = measure_from_json(j["measure"]);
    j["measure"] = measure_to_json(m);
    OperatorInstance op(m, g.threads);
    f = apply(op, f);
  }
  auto r = base("norm", j);
  const auto est = std::visit(
      [&](const auto& s) -> NormEstimate {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, space::Hardy>) return hardy_norm(f, s.p, opt);
        else if constexpr (std::is_same_v<T, space::BlochType>) return bloch_norm(f, s.alpha, opt);
        else if constexpr (std::is_same_v<T, space::Morrey>) return morrey_norm(f, s.lambda, opt);
        else return mean_lipschitz_norm(f, s.p, s.alpha, opt);
      },
      sp);
  for (const auto& [rad, v] : est.profile) r.rows.push_back({"profile", "r", rad, "sup", v, {}});
  add_trend(r, "profile", "sup", est.trend);
  r.metadata["value"] = number_to_json(quantize(est.value));
  r.metadata["converged"] = est.converged;
  r.metadata["space"] = describe(sp);
  return r;
}

ExperimentReport cmd_estimate(json j, const Globals&) {
  const std::string kind = need(j, "kind", "estimate").get<std::string>();
  auto r = base("estimate", json::object());
  EstimateComparison c;
  if (kind == "circle") {
    only(j, {"kind", "z", "alpha"}, "estimate circle");
    const cplx z = complex_from(need(j, "z", "estimate"), "z");
    const double alpha = number(j, "alpha", NAN, "estimate");
    c = circle_integral(z, alpha);
    r.config = {{"kind", kind}, {"z", complex_to(z)}, {"alpha", number_to_json(alpha)}};
  } else if (kind == "disk") {
    only(j, {"kind", "w", "a", "t", "r", "delta", "k"}, "estimate disk");
    const cplx w = complex_from(need(j, "w", "estimate"), "w");
    const cplx a = complex_from(need(j, "a", "estimate"), "a");
    const double t = number(j, "t", NAN, "estimate"), rr = number(j, "r", NAN, "estimate");
    const double delta = number(j, "delta", NAN, "estimate"), k = number(j, "k", 0.0, "estimate");
    c = disk_integral(w, a, t, rr, delta, k);
    r.config = {{"kind", kind},
                {"w", complex_to(w)},
                {"a", complex_to(a)},
                {"t", number_to_json(t)},
                {"r", number_to_json(rr)},
                {"delta", number_to_json(delta)},
                {"k", number_to_json(k)}};
  } else {
    throw ConfigError("estimate: kind must be 'circle' or 'disk'");
  }
  r.rows.push_back({"estimate", "case", 0.0, "computed", c.computed, {}});
  r.rows.push_back({"estimate", "case", 0.0, "asymptotic_form", c.asymptotic_form, {}});
  r.rows.push_back({"estimate", "case", 0.0, "ratio", c.ratio, {}});
  r.metadata["regime"] = to_string(c.regime);
  r.metadata["nodes"] = c.nodes;
  // case (2) is evaluated with the dimension constant n = 1
  if (c.dimension_n) r.metadata["dimension_n"] = c.dimension_n;
  return r;
}

std::vector<ExperimentReport> cmd_verify(const Globals& g) {
  std::vector<ScenarioConfig> suite;
  if (g.config.empty()) {
    suite = verify_suite();
  } else {
    const auto j = read_json_file(g.config);
    if (j.is_object() && j.contains("scenarios")) {
      only(j, {"scenarios"}, "verify");
      for (const auto& s : j["scenarios"]) suite.push_back(scenario_from_json(s));
    } else {
      suite.push_back(scenario_from_json(j));
    }
  }
  for (auto& c : suite) {
    if (g.truncation) c.truncation = *g.truncation;
    if (g.depth) c.depth = *g.depth;
    validate(c);
  }
  return run_suite(suite, g.threads);
}

void write_output(const Globals& g, const std::string& doc) {
  if (g.out.empty()) {
    std::cout << doc;
    std::cout.flush();
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw std::runtime_error(g.out + ": " + std::strerror(errno));
  os << doc;
  os.close();
  if (!os) throw std::runtime_error(g.out + ": " + std::strerror(errno));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for Cesaro-like operators C_mu on the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Inputs in;
  app.add_option("--config", g.config, "JSON input document");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--truncation", g.truncation, "series / moment truncation N")->check(CLI::Range(1, 1 << 22));
  app.add_option("--depth", g.depth, "grid depth")->check(CLI::Range(1, 60));
  app.add_option("--threads", g.threads, "worker threads, 0 = all cores");

  auto* moments_cmd = app.add_subcommand("moments", "moments mu_0..mu_N of a measure");
  auto* tail_cmd = app.add_subcommand("tail", "Carleson tail quotient on the dyadic grid");
  auto* classify_cmd = app.add_subcommand("classify", "Carleson verdict at exponent s");
  auto* apply_cmd = app.add_subcommand("apply", "coefficients of C_mu f");
  auto* norm_cmd = app.add_subcommand("norm", "space norm of f, or of C_mu f with --measure");
  auto* estimate_cmd = app.add_subcommand("estimate", "circle or disk integral against its asymptotic form");
  auto* verify_cmd = app.add_subcommand("verify", "run the scenario suite, or the scenarios in --config");
  (void)verify_cmd;

  for (auto* c : {moments_cmd, tail_cmd, classify_cmd, apply_cmd, norm_cmd})
    c->add_option("--measure", in.measure, "measure as JSON");
  for (auto* c : {apply_cmd, norm_cmd}) c->add_option("--function", in.function, "test function as JSON");
  norm_cmd->add_option("--space", in.space, "space as JSON");
  tail_cmd->add_option("--t", in.t, "target exponent");
  for (auto* c : {tail_cmd, classify_cmd}) c->add_option("--beta", in.beta, "log exponent");
  classify_cmd->add_option("--s", in.s, "Carleson exponent");
  estimate_cmd->add_option("--kind", in.kind)->check(CLI::IsMember({"circle", "disk"}));
  estimate_cmd->add_option("--z", in.z, "number or [re, im]");
  estimate_cmd->add_option("--alpha", in.alpha);
  estimate_cmd->add_option("--w", in.w);
  estimate_cmd->add_option("--a", in.a);
  estimate_cmd->add_option("--t", in.t);
  estimate_cmd->add_option("--r", in.r);
  estimate_cmd->add_option("--delta", in.delta);
  estimate_cmd->add_option("--k", in.k);

  CLI11_PARSE(app, argc, argv);
  const auto fmt = g.format == "csv" ? ReportFormat::csv : ReportFormat::json;

  std::vector<ExperimentReport> reports;
  try {
    if (verify_cmd->parsed()) {
      reports = cmd_verify(g);
    } else {
      json j = load_input(g);
      merge(j, in);
      const std::string name = app.get_subcommands().front()->get_name();
      try {
        if (name == "moments") reports.push_back(cmd_moments(j, g));
        else if (name == "tail") reports.push_back(tail_like("tail", j, g, "t"));
        else if (name == "classify") reports.push_back(cmd_classify(j, g));
        else if (name == "apply") reports.push_back(cmd_apply(j, g));
        else if (name == "norm") reports.push_back(cmd_norm(j, g));
        else reports.push_back(cmd_estimate(j, g));
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        auto r = base(name, j);
        r.rows.push_back({name, "", 0.0, "*", 0.0, RowError{e.kind(), e.what()}});
        reports.push_back(std::move(r));
      }
    }
    write_output(g, emit_reports(reports, fmt));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return exit_code(reports);
}
