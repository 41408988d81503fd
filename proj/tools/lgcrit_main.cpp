#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgcrit/json_io.hpp"
#include "lgcrit/quiver.hpp"

using namespace lgcrit;

namespace {

struct RunConfig {
  int s = 1;
  std::vector<int> a;
  double T = 12.0;
  double u = 0.0;
  double tol = 1e-10;
  int threads = 0;
  std::string output;
  std::string format;  // resolved per command when empty
  std::string direction = "minus";
  std::string divisor;
  std::string t_list;
  std::string what;  // verify selector
};

BundleSpec make_spec(const RunConfig& cfg) {
  BundleSpec spec{cfg.s, cfg.a};
  validate_spec(spec);
  return spec;
}

SolveOptions solve_opts(const RunConfig& cfg) {
  SolveOptions o;
  o.tol = cfg.tol;
  o.threads = cfg.threads;
  return o;
}

TrackOptions track_opts(const RunConfig& cfg) {
  TrackOptions o;
  o.threads = cfg.threads;
  return o;
}

std::string resolve_format(const RunConfig& cfg, const std::string& dflt,
                           const std::vector<std::string>& allowed) {
  const std::string f = cfg.format.empty() ? dflt : cfg.format;
  for (const std::string& ok : allowed)
    if (f == ok) return f;
  fail(ErrorCode::InvalidArgument, "format '" + f + "' not supported here");
}

void emit(const RunConfig& cfg, const std::string& payload) {
  const bool needs_nl = payload.empty() || payload.back() != '\n';
  if (cfg.output.empty()) {
    std::cout << payload;
    if (needs_nl) std::cout << "\n";
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot open output file " + cfg.output);
    f << payload;
    if (needs_nl) f << "\n";
  }
}

/// Deep-labeled critical set: solve at u = 0, continue to u = -T, label.
CritSet labeled_deep_set(const BundleSpec& spec, const RunConfig& cfg) {
  const CritSet base = solve_crit(spec, CoeffVector::unit(spec), solve_opts(cfg));
  CritSet deep = track_segment(base, 0.0, -cfg.T, track_opts(cfg));
  assign_labels(deep);
  return deep;
}

int cmd_describe(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  emit(cfg, fmt == "json" ? describe_json(spec) : describe_text(spec));
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  const CritSet set = solve_crit(spec, CoeffVector::with_u(spec, cfg.u), solve_opts(cfg));
  emit(cfg, fmt == "json" ? critset_json(set) : critset_text(set));
  return 0;
}

int cmd_label(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  const CritSet deep = labeled_deep_set(spec, cfg);
  emit(cfg, fmt == "json" ? critset_json(deep) : critset_text(deep));
  return 0;
}

int cmd_limits(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  if (cfg.direction != "minus" && cfg.direction != "plus")
    fail(ErrorCode::InvalidArgument, "direction must be plus or minus");
  std::vector<LimitRow> rows;
  const auto grid = limit_grid(spec);
  const double tolerance = grid_tolerance(spec);
  if (cfg.direction == "minus") {
    const CritSet deep = labeled_deep_set(spec, cfg);
    rows.resize(grid.size());
    for (const CritPoint& p : deep.points) {
      const int at = label_index(spec, p.label);
      rows[at].label = p.label;
      rows[at].measured = theta(spec, p.z, p.w);
      rows[at].grid = grid[at].node;
      rows[at].dist = torus_dist(rows[at].measured, rows[at].grid);
    }
  } else {
    for (const LabeledTheta& row : theta_plus(spec, cfg.T, track_opts(cfg), solve_opts(cfg))) {
      LimitRow r;
      r.label = row.label;
      r.measured = row.theta;
      r.dist = -1.0;  // no reference grid on this side
      rows.push_back(r);
    }
  }
  emit(cfg, fmt == "json" ? limits_json(spec, cfg.T, cfg.direction, rows, tolerance)
                          : limits_text(spec, cfg.T, cfg.direction, rows, tolerance));
  return 0;
}

int cmd_monodromy(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  if (cfg.divisor.empty()) fail(ErrorCode::InvalidArgument, "--divisor is required");
  const ToricDivisor D = parse_divisor(spec, cfg.divisor);
  const MonodromyReport report =
      verify_monodromy(spec, cfg.T, {D}, track_opts(cfg), solve_opts(cfg));
  emit(cfg, fmt == "json" ? monodromy_json(report) : monodromy_text(report));
  return 0;
}

int cmd_hom(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "json", {"json", "text"});
  const auto table = hom_table(spec, cfg.threads);
  emit(cfg, fmt == "json" ? hom_json(spec, table) : hom_text(spec, table));
  return 0;
}

int cmd_quiver(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "dot", {"dot", "json"});
  const Quiver q = build_quiver(spec);
  emit(cfg, fmt == "dot" ? quiver_dot(q) : quiver_json(q));
  return 0;
}

int cmd_curve(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  std::vector<double> ts;
  std::stringstream ss(cfg.t_list);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      try {
        size_t used = 0;
        ts.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (...) {
        fail(ErrorCode::InvalidArgument, "bad t value '" + tok + "'");
      }
    }
  if (ts.empty()) fail(ErrorCode::InvalidArgument, "--t-list is required");
  const auto rows = sample_curve(spec, ts, track_opts(cfg), solve_opts(cfg));
  emit(cfg, fmt == "csv" ? curve_csv(rows) : curve_json(rows));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const BundleSpec spec = make_spec(cfg);
  resolve_format(cfg, "json", {"json"});
  std::vector<std::string> parts;
  bool all_ok = true;

  auto run_labels = [&]() {
    const CritSet deep_unlabeled = [&] {
      const CritSet base = solve_crit(spec, CoeffVector::unit(spec), solve_opts(cfg));
      return track_segment(base, 0.0, -cfg.T, track_opts(cfg));
    }();
    CritSet deep = deep_unlabeled;
    AssignReport assign;
    bool ok = true;
    try {
      assign = assign_labels(deep);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LabelAmbiguity) throw;
      ok = false;
      assign.tolerance = grid_tolerance(spec);
      assign.max_dist = -1.0;
    }
    parts.push_back(
        verify_labels_json(spec, cfg.T, assign, hyperplane_residual(deep_unlabeled), ok));
    all_ok = all_ok && ok;
  };
  auto run_hom = [&]() {
    const HomReport report = verify_hom_equality(spec, DivPlusBounds::Inclusive, cfg.threads);
    parts.push_back(verify_hom_json(spec, report));
    all_ok = all_ok && report.verified();
  };
  auto run_monodromy = [&]() {
    const MonodromyReport report =
        verify_monodromy(spec, cfg.T, {}, track_opts(cfg), solve_opts(cfg));
    parts.push_back(verify_monodromy_json(report));
    all_ok = all_ok && report.all_shift;
  };
  auto run_composition = [&]() {
    const CompositionReport report = verify_composition(spec);
    parts.push_back(verify_composition_json(spec, report));
    all_ok = all_ok && report.verified();
  };

  if (cfg.what == "theorem-a") run_labels();
  else if (cfg.what == "theorem-b") run_hom();
  else if (cfg.what == "thm-4-2") run_monodromy();
  else if (cfg.what == "composition") run_composition();
  else {
    run_labels();
    run_hom();
    run_monodromy();
    run_composition();
  }

  std::string payload;
  if (parts.size() == 1) {
    payload = parts[0];
  } else {
    payload = "{\"checks\":[";
    for (size_t i = 0; i < parts.size(); ++i) payload += (i ? "," : "") + parts[i];
    payload += "],\"verified\":";
    payload += all_ok ? "true" : "false";
    payload += "}";
  }
  emit(cfg, payload);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"critical sets, asymptotic labels, monodromy, and hom tables of "
               "projectivized split bundles over projective space"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--s", cfg.s, "base projective dimension")->check(CLI::PositiveNumber);
  app.add_option("--a", cfg.a, "ascending twist vector, e.g. --a 1,2")
      ->delimiter(',')
      ->required();
  app.add_option("--T", cfg.T, "depth of the asymptotic regime (default 12)");
  app.add_option("--tol", cfg.tol, "residual tolerance recorded in critical sets");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware default)");
  app.add_option("--output", cfg.output, "write the result to this file instead of stdout");
  app.add_option("--format", cfg.format, "output format (json, text, csv, dot; per command)");

  CLI::App* c_describe = app.add_subcommand("describe", "fan, classes, and collection data");
  CLI::App* c_solve = app.add_subcommand("solve", "critical set at cv0 = exp(u)");
  c_solve->add_option("--u", cfg.u, "potential parameter (default 0)");
  CLI::App* c_label = app.add_subcommand("label", "deep critical set with collection labels");
  CLI::App* c_limits = app.add_subcommand("limits", "angular limits against the grid");
  c_limits->add_option("--direction", cfg.direction, "plus or minus (default minus)");
  CLI::App* c_mono = app.add_subcommand("monodromy", "label map of one divisor loop");
  c_mono->add_option("--divisor", cfg.divisor, "ray multiset, e.g. v0,v0,e1");
  CLI::App* c_hom = app.add_subcommand("hom", "hom dimension table of the collection");
  CLI::App* c_quiver = app.add_subcommand("quiver", "endomorphism quiver (dot or json)");
  CLI::App* c_curve = app.add_subcommand("curve", "monomial arguments along the family");
  c_curve->add_option("--t-list", cfg.t_list, "comma-separated u values");
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification and set the exit code");
  c_verify
      ->add_option("what", cfg.what, "theorem-a | theorem-b | thm-4-2 | composition | all")
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "thm-4-2", "composition", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_describe->parsed()) return cmd_describe(cfg);
    if (c_solve->parsed()) return cmd_solve(cfg);
    if (c_label->parsed()) return cmd_label(cfg);
    if (c_limits->parsed()) return cmd_limits(cfg);
    if (c_mono->parsed()) return cmd_monodromy(cfg);
    if (c_hom->parsed()) return cmd_hom(cfg);
    if (c_quiver->parsed()) return cmd_quiver(cfg);
    if (c_curve->parsed()) return cmd_curve(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
