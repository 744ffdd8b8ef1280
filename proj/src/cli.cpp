#include "slepian/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slepian/approx.hpp"
#include "slepian/boundary_io.hpp"
#include "slepian/closedform.hpp"
#include "slepian/dispatch.hpp"
#include "slepian/errors.hpp"
#include "slepian/oracle.hpp"

namespace slepian::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  double a = 0.0;
  double b = 0.0;
  std::string file;
  std::string method = "auto";
  int max_segments = defaults::kMaxSegments;
  std::string dump;
  int dump_count = 16;

  std::uint64_t seed = defaults::kSeed;
  std::uint64_t samples = defaults::kSamples;
  std::uint64_t paths = defaults::kOraclePaths;
  int steps = defaults::kOracleSteps;
  std::optional<double> tol;
  int threads = defaults::kThreads;
  bool csv = false;
};

struct Outcome {
  json report;
  std::vector<json> rows;  // CSV view: label, method, p, err, err_kind, count
  int code = kExitOk;
};

// ---- environment -----------------------------------------------------------

template <typename T>
void env_override(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const std::string text(raw);
  try {
    std::size_t used = 0;
    if constexpr (std::is_floating_point_v<T>) {
      const double v = std::stod(text, &used);
      if (used == text.size()) {
        value = v;
        return;
      }
    } else {
      const long long v = std::stoll(text, &used);
      if (used == text.size() && v >= 0) {
        value = static_cast<T>(v);
        return;
      }
    }
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string("environment variable ") + name + " has invalid value \"" + text + "\"");
}

void apply_environment(Options& o) {
  env_override("SLEPIAN_SEED", o.seed);
  env_override("SLEPIAN_SAMPLES", o.samples);
  env_override("SLEPIAN_PATHS", o.paths);
  env_override("SLEPIAN_STEPS", o.steps);
  env_override("SLEPIAN_THREADS", o.threads);
  double tol = std::nan("");
  env_override("SLEPIAN_TOL", tol);
  if (!std::isnan(tol)) o.tol = tol;
}

// ---- configuration ---------------------------------------------------------

MethodPreference parse_method(const std::string& name) {
  if (name == "auto") return MethodPreference::automatic;
  if (name == "quad") return MethodPreference::quadrature;
  if (name == "mc") return MethodPreference::monte_carlo;
  if (name == "qmc") return MethodPreference::quasi_monte_carlo;
  throw InvalidInput("unknown method \"" + name + "\" (expected auto, quad, mc or qmc)");
}

QuadratureConfig quad_config(const Options& o) {
  QuadratureConfig q;
  if (o.tol) q.abs_tol = *o.tol;
  q.validate();
  return q;
}

McConfig mc_config(const Options& o) {
  McConfig m;
  m.n_samples = o.samples;
  m.seed = o.seed;
  m.threads = o.threads;
  m.validate();
  return m;
}

ApproxConfig approx_config(const Options& o) {
  ApproxConfig c;
  if (o.tol) c.convergence_tol = *o.tol;
  c.max_segments = o.max_segments;
  c.mc = mc_config(o);
  c.validate();
  return c;
}

OracleConfig oracle_config(const Options& o) {
  OracleConfig c;
  c.n_paths = o.paths;
  c.grid_steps = o.steps;
  c.seed = o.seed;
  c.threads = o.threads;
  c.validate();
  return c;
}

json to_json(const QuadratureConfig& q) {
  return {{"nodes_per_dim", q.nodes_per_dim}, {"truncation", q.truncation},
          {"abs_tol", q.abs_tol},             {"panel_width_sd", q.panel_width_sd},
          {"max_refinements", q.max_refinements}, {"max_segments", q.max_segments}};
}

json to_json(const McConfig& m) {
  return {{"n_samples", m.n_samples},
          {"sampler", std::string(to_string(m.sampler))},
          {"seed", m.seed},
          {"batch", m.batch},
          {"qmc_replicates", m.qmc_replicates}};
}

json to_json(const ApproxConfig& c) {
  return {{"convergence_tol", c.convergence_tol},
          {"max_segments", c.max_segments},
          {"stop_on_convergence", c.stop_on_convergence},
          {"evaluator", std::string(to_string(c.evaluator))},
          {"quadrature", to_json(c.quad)}};
}

json to_json(const OracleConfig& c) {
  return {{"n_paths", c.n_paths}, {"grid_steps", c.grid_steps}, {"seed", c.seed}};
}

json to_json(const ProbabilityResult& r) {
  json j = {{"method", std::string(to_string(r.method))},
            {"p", r.p},
            {"error", {{"kind", std::string(to_string(r.err_kind))}, {"value", r.err}}},
            {"n_evals", r.n_evals}};
  if (r.seed) j["seed"] = *r.seed;
  if (r.branch) j["branch"] = std::string(to_string(*r.branch));
  return j;
}

json row(const std::string& label, const std::string& method, double p, double err,
         const std::string& err_kind, std::uint64_t count) {
  return {{"label", label}, {"method", method},     {"p", p},
          {"err", err},     {"err_kind", err_kind}, {"count", count}};
}

json row(const std::string& label, const ProbabilityResult& r) {
  return row(label, std::string(to_string(r.method)), r.p, r.err, std::string(to_string(r.err_kind)),
             r.n_evals);
}

json oracle_json(const OracleEstimate& e) {
  return {{"method", "path_oracle"},
          {"p", e.p_hat},
          {"error", {{"kind", "std_error"}, {"value", e.se}}},
          {"n_paths", e.n_paths},
          {"grid_steps", e.grid_steps},
          {"seed", e.seed},
          {"coarse", {{"p", e.p_hat_coarse}, {"se", e.se_coarse}, {"grid_steps", e.grid_steps / 2}}},
          {"grid_bias_allowance", defaults::kGridBiasAllowance}};
}

// ---- subcommands -----------------------------------------------------------

struct FileBoundary {
  json raw;
  Boundary boundary;
};

FileBoundary load(const Options& o) {
  if (o.file.empty()) throw InvalidInput("--file is required");
  json raw = read_json_file(o.file);
  Boundary boundary = boundary_from_json(raw);
  return {std::move(raw), std::move(boundary)};
}

Outcome closed_form(const Boundary& boundary, const json& echo) {
  const ProbabilityResult r = dispatch(boundary);
  Outcome out;
  out.report = to_json(r);
  out.report["boundary"] = echo;
  out.report["config"] = json::object();
  out.rows.push_back(row(kind(boundary), r));
  return out;
}

Outcome cmd_piecewise(const Options& o) {
  const FileBoundary fb = load(o);
  if (std::holds_alternative<SampledBoundary>(fb.boundary))
    throw InvalidInput("sampled boundaries are evaluated by the general subcommand");
  DispatchPrefs prefs;
  prefs.method = parse_method(o.method);
  prefs.quad = quad_config(o);
  prefs.mc = mc_config(o);
  const PiecewiseLinearBoundary l = as_piecewise(fb.boundary);
  const ProbabilityResult r = dispatch(l, prefs);
  Outcome out;
  out.report = to_json(r);
  out.report["boundary"] = fb.raw;
  out.report["config"] = {{"method", o.method}, {"quadrature", to_json(prefs.quad)}, {"monte_carlo", to_json(prefs.mc)}};
  out.rows.push_back(row(kind(fb.boundary), r));
  return out;
}

Outcome cmd_general(const Options& o) {
  const FileBoundary fb = load(o);
  const ApproxConfig cfg = approx_config(o);
  const RefinementTrace trace = general_ncp(fb.boundary, cfg);
  Outcome out;
  out.report = to_json(trace.final);
  out.report["boundary"] = fb.raw;
  out.report["config"] = to_json(cfg);
  out.report["converged"] = trace.converged;
  json entries = json::array();
  for (const TraceEntry& e : trace.entries) {
    json j = to_json(e.result);
    j["segments"] = e.segments;
    entries.push_back(j);
    out.rows.push_back(row("n=" + std::to_string(e.segments), e.result));
  }
  out.report["trace"] = entries;
  out.rows.push_back(row("limit", trace.final));
  if (!trace.converged) {
    out.report["failure"] = {{"type", "NonConvergence"},
                             {"message", "refinement did not settle by " +
                                             std::to_string(trace.entries.back().segments) + " segments"}};
    out.code = kExitNonConvergence;
  }
  return out;
}

Outcome cmd_oracle(const Options& o) {
  const FileBoundary fb = load(o);
  const OracleConfig cfg = oracle_config(o);
  const OracleEstimate e = oracle_ncp(fb.boundary, cfg);
  if (!o.dump.empty()) {
    std::ofstream dump(o.dump);
    if (!dump) throw InvalidInput("cannot write " + o.dump);
    std::vector<PathSample> paths;
    const auto n = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(o.dump_count, 0)), cfg.n_paths);
    for (std::uint64_t i = 0; i < n; ++i) paths.push_back(slepian_path(cfg.seed, i, cfg.grid_steps));
    write_paths_csv(dump, paths);
  }
  Outcome out;
  out.report = oracle_json(e);
  out.report["boundary"] = fb.raw;
  out.report["config"] = to_json(cfg);
  out.rows.push_back(row("fine", "path_oracle", e.p_hat, e.se, "std_error", e.n_paths));
  out.rows.push_back(row("coarse", "path_oracle", e.p_hat_coarse, e.se_coarse, "std_error", e.n_paths));
  return out;
}

struct Entry {
  std::string name;
  double p;
  double err;
  std::string err_kind;
  bool oracle = false;
};

double combined_tolerance(const Entry& x, const Entry& y) {
  auto se = [](const Entry& e) { return e.err_kind == "std_error" ? e.err : 0.0; };
  auto tol = [](const Entry& e) { return e.err_kind == "abs_tol" ? e.err : 0.0; };
  double t = 1e-5 + tol(x) + tol(y) + 3.0 * std::hypot(se(x), se(y));
  if (x.oracle || y.oracle) t += defaults::kGridBiasAllowance;
  return t;
}

Outcome cmd_compare(const Options& o) {
  const FileBoundary fb = load(o);
  std::vector<Entry> entries;
  json skipped = json::array();
  auto add = [&](const std::string& name, const ProbabilityResult& r) {
    entries.push_back({name, r.p, r.err, std::string(to_string(r.err_kind))});
  };

  const bool sampled = std::holds_alternative<SampledBoundary>(fb.boundary);
  if (std::holds_alternative<ConstantBoundary>(fb.boundary) ||
      std::holds_alternative<LinearBoundary>(fb.boundary)) {
    add("closed_form", dispatch(fb.boundary));
  }
  const McConfig mc = mc_config(o);
  if (sampled) {
    const RefinementTrace trace = general_ncp(fb.boundary, approx_config(o));
    if (trace.converged) {
      add("refinement", trace.final);
    } else {
      skipped.push_back({{"method", "refinement"}, {"reason", "did not converge"}});
    }
  } else {
    const PiecewiseLinearBoundary l = as_piecewise(fb.boundary);
    const QuadratureConfig q = quad_config(o);
    if (l.segments() <= q.max_segments) {
      add("quadrature", piecewise_ncp_quadrature(l, q));
    } else {
      skipped.push_back({{"method", "quadrature"}, {"reason", "DimensionTooLarge"}});
    }
    add("monte_carlo", piecewise_ncp_mc(l, mc));
    McConfig qmc = mc;
    qmc.sampler = Sampler::low_discrepancy;
    add("quasi_monte_carlo", piecewise_ncp_mc(l, qmc));
  }
  const OracleConfig ocfg = oracle_config(o);
  const OracleEstimate e = oracle_ncp(fb.boundary, ocfg);
  entries.push_back({"path_oracle", e.p_hat, e.se, "std_error", true});

  Outcome out;
  json methods = json::array();
  for (const Entry& x : entries) {
    methods.push_back({{"method", x.name}, {"p", x.p}, {"error", {{"kind", x.err_kind}, {"value", x.err}}}});
    out.rows.push_back(row("compare", x.name, x.p, x.err, x.err_kind, 0));
  }
  json pairs = json::array();
  bool agree = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const double diff = std::abs(entries[i].p - entries[j].p);
      const double tol = combined_tolerance(entries[i], entries[j]);
      const bool ok = diff <= tol;
      agree = agree && ok;
      pairs.push_back({{"a", entries[i].name}, {"b", entries[j].name}, {"diff", diff}, {"tolerance", tol}, {"agree", ok}});
    }
  }
  out.report = {{"method", "compare"},
                {"methods", methods},
                {"pairs", pairs},
                {"agree", agree},
                {"skipped", skipped},
                {"boundary", fb.raw},
                {"config",
                 {{"quadrature", to_json(quad_config(o))}, {"monte_carlo", to_json(mc)}, {"oracle", to_json(ocfg)}}}};
  out.code = agree ? kExitOk : kExitDisagreement;
  return out;
}

// ---- output ----------------------------------------------------------------

std::string csv_field(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(std::ostream& out, const Outcome& outcome, bool csv) {
  if (!csv) {
    out << outcome.report.dump(2) << '\n';
    return;
  }
  out << "label,method,p,err,err_kind,count\n";
  for (const json& r : outcome.rows) {
    out << csv_field(r["label"]) << ',' << csv_field(r["method"]) << ',' << csv_field(r["p"]) << ','
        << csv_field(r["err"]) << ',' << csv_field(r["err_kind"]) << ',' << csv_field(r["count"]) << '\n';
  }
}

json failure_report(const std::string& command, const std::string& type, const std::string& message) {
  return {{"version", defaults::kVersion}, {"command", command}, {"failure", {{"type", type}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  std::string command = "none";
  const auto started = Clock::now();

  auto fail = [&](int code, const std::string& type, const std::string& message) {
    out << failure_report(command, type, message).dump(2) << '\n';
    err << "slepian: " << (message.starts_with(type) ? "" : type + ": ") << message << '\n';
    return code;
  };

  CLI::App app{"Non-crossing probabilities of the Slepian process S(t) = B(t+1) - B(t)", "slepian"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(defaults::kVersion));

  bool json_flag = false;
  app.add_option("--seed", o.seed, "Random seed for Monte Carlo and the path oracle");
  app.add_option("--samples", o.samples, "Monte Carlo samples");
  app.add_option("--tol", o.tol, "Quadrature tolerance or refinement convergence tolerance");
  app.add_option("--threads", o.threads, "Worker threads (0 = all hardware threads)");
  app.add_option("--paths", o.paths, "Path oracle sample paths");
  app.add_option("--steps", o.steps, "Path oracle grid steps (even, >= 256)");
  auto* json_opt = app.add_flag("--json", json_flag, "JSON report (default)");
  app.add_flag("--csv", o.csv, "CSV rows instead of JSON")->excludes(json_opt);

  auto* constant = app.add_subcommand("constant", "Closed form for a constant boundary f(t) = a");
  constant->add_option("--a", o.a, "Level")->required();
  auto* linear = app.add_subcommand("linear", "Closed form for a linear boundary f(t) = a + b t");
  linear->add_option("--a", o.a, "Intercept")->required();
  linear->add_option("--b", o.b, "Slope")->required();
  auto* piecewise = app.add_subcommand("piecewise", "Piecewise-linear boundary from a JSON file");
  piecewise->add_option("--file", o.file, "Boundary JSON file")->required();
  piecewise->add_option("--method", o.method, "auto, quad, mc or qmc");
  auto* general = app.add_subcommand("general", "Continuous boundary by dyadic refinement");
  general->add_option("--file", o.file, "Boundary JSON file")->required();
  general->add_option("--max-segments", o.max_segments, "Finest refinement level");
  auto* oracle = app.add_subcommand("oracle", "Path-simulation estimate");
  oracle->add_option("--file", o.file, "Boundary JSON file")->required();
  oracle->add_option("--dump", o.dump, "Write the first simulated paths as CSV");
  oracle->add_option("--dump-count", o.dump_count, "Number of paths to dump");
  auto* compare = app.add_subcommand("compare", "Run every applicable method and cross-check");
  compare->add_option("--file", o.file, "Boundary JSON file")->required();
  for (auto* sub : {constant, linear, piecewise, general, oracle, compare}) sub->fallthrough();

  try {
    apply_environment(o);
  } catch (const InvalidInput& e) {
    return fail(kExitInvalidInput, "InvalidInput", e.what());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << defaults::kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(kExitInvalidInput, "InvalidInput", e.what());
  }
  command = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    if (command == "constant") {
      outcome = closed_form(ConstantBoundary{o.a}, {{"type", "constant"}, {"a", o.a}});
    } else if (command == "linear") {
      outcome = closed_form(LinearBoundary{o.a, o.b}, {{"type", "linear"}, {"a", o.a}, {"b", o.b}});
    } else if (command == "piecewise") {
      outcome = cmd_piecewise(o);
    } else if (command == "general") {
      outcome = cmd_general(o);
    } else if (command == "oracle") {
      outcome = cmd_oracle(o);
    } else {
      outcome = cmd_compare(o);
    }
  } catch (const DimensionTooLarge& e) {
    return fail(kExitInvalidInput, "DimensionTooLarge", e.what());
  } catch (const InvalidInput& e) {
    return fail(kExitInvalidInput, "InvalidInput", e.what());
  } catch (const NonConvergence& e) {
    return fail(kExitNonConvergence, "NonConvergence", e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "InternalError", e.what());
  }

  outcome.report["version"] = defaults::kVersion;
  outcome.report["command"] = command;
  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  outcome.report["argv"] = args;
  outcome.report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  emit(out, outcome, o.csv);
  if (outcome.code == kExitNonConvergence) err << "slepian: NonConvergence: refinement did not settle\n";
  if (outcome.code == kExitDisagreement) err << "slepian: methods disagree beyond combined tolerance\n";
  return outcome.code;
}

}  // namespace slepian::cli
