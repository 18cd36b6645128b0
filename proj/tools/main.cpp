// forestdist: graph vertex distances on weighted multigraphs.
//
// Subcommands:
//   distances  compute a distance matrix (csv/json)
//   sweep      alpha sweep with max-error table against a limit target
//   verify     oracle and property verification for a graph file
//   geodetic   check a distance matrix for the graph-geodetic property
//
// Exit codes: 0 ok, 1 input parse error, 2 numerical failure or failed
// verification, 3 bad flags.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "forestdist/classical.hpp"
#include "forestdist/family.hpp"
#include "forestdist/forest.hpp"
#include "forestdist/geodetic.hpp"
#include "forestdist/io.hpp"

namespace fd = forestdist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitFlags = 3;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string input;
  std::string format = "csv";
  std::string output;
};

struct FamilyFlags {
  std::string family;
  std::string transform;
  std::string hvariant;
  std::string gamma;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-i,--input", opts.input, "edge-list file")->required();
  cmd->add_option("-f,--format", opts.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
}

void add_family(CLI::App* cmd, FamilyFlags& flags) {
  cmd->add_option("--family", flags.family,
                  "preset: shortest-path-preset|wsp-preset|unified-preset");
  cmd->add_option("--transform", flags.transform,
                  "edge transform: linear|power|exp-scaled|pure-exp");
  cmd->add_option("--hvariant", flags.hvariant, "H matrix variant: standard|alpha-ln");
  cmd->add_option("--gamma", flags.gamma,
                  "scaling: formula13|one|interpolating:<beta>|constant:<c>");
}

fd::WeightTransform parse_transform(const std::string& name) {
  if (name == "linear") return fd::WeightTransform::LinearScale;
  if (name == "power") return fd::WeightTransform::PowerOfAlpha;
  if (name == "exp-scaled") return fd::WeightTransform::ExpScaledByAlpha;
  if (name == "pure-exp") return fd::WeightTransform::PureExponential;
  throw FlagError("unknown transform: " + name);
}

fd::HVariant parse_hvariant(const std::string& name) {
  if (name == "standard") return fd::HVariant::Standard;
  if (name == "alpha-ln") return fd::HVariant::AlphaLn;
  throw FlagError("unknown hvariant: " + name);
}

fd::GammaRule parse_gamma(const std::string& name) {
  if (name == "formula13") return fd::GammaRule::formula13();
  if (name == "one") return fd::GammaRule::one();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const double param = std::strtod(name.c_str() + colon + 1, nullptr);
    if (head == "interpolating") return fd::GammaRule::interpolating(param);
    if (head == "constant") return fd::GammaRule::constant(param);
  }
  throw FlagError("unknown gamma rule: " + name);
}

fd::FamilyConfig resolve_family(const FamilyFlags& flags) {
  fd::FamilyConfig cfg = fd::shortest_path_family();
  if (!flags.family.empty()) {
    if (flags.family == "shortest-path-preset")
      cfg = fd::shortest_path_family();
    else if (flags.family == "wsp-preset")
      cfg = fd::wsp_family();
    else if (flags.family == "unified-preset")
      cfg = fd::unified_family();
    else
      throw FlagError("unknown family preset: " + flags.family);
  }
  if (!flags.transform.empty()) cfg.transform = parse_transform(flags.transform);
  if (!flags.hvariant.empty()) cfg.h_variant = parse_hvariant(flags.hvariant);
  if (!flags.gamma.empty()) cfg.gamma = parse_gamma(flags.gamma);
  return cfg;
}

fd::WeightedMultigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fd::ParseError("cannot open input file: " + path);
  return fd::parse_edge_list(in);
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw FlagError("cannot open output file: " + opts.output);
  out << text;
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> alphas;
  std::istringstream in(csv);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    const double a = std::strtod(cell.c_str(), nullptr);
    if (!(a > 0.0)) throw FlagError("alpha values must be positive: " + cell);
    alphas.push_back(a);
  }
  if (alphas.empty()) throw FlagError("empty alpha list");
  return alphas;
}

// ---------------------------------------------------------------- distances

struct DistanceOptions {
  CommonOptions common;
  FamilyFlags family;
  std::string kind;
  double alpha = -1.0;
};

int run_distances(const DistanceOptions& opts) {
  const fd::WeightedMultigraph g = load_graph(opts.common.input);
  fd::MatrixLabel label{opts.kind, std::nullopt, std::nullopt};
  fd::Matrix d;
  if (opts.kind == "logforest") {
    if (!(opts.alpha > 0.0)) throw FlagError("logforest requires --alpha > 0");
    const fd::FamilyConfig cfg = resolve_family(opts.family);
    if (!fd::transform_admissible(cfg.transform, opts.alpha))
      std::cerr << "note: transform '" << fd::transform_name(cfg.transform)
                << "' at alpha=" << opts.alpha
                << " is outside the admissible range of the weight transformation\n";
    d = fd::log_forest_distance_matrix(g, cfg, opts.alpha);
    label.alpha = opts.alpha;
    label.family = cfg;
  } else if (opts.kind == "ordinary-forest") {
    if (!(opts.alpha > 0.0)) throw FlagError("ordinary-forest requires --alpha > 0");
    d = fd::ordinary_forest_distance_matrix(g, opts.alpha);
    label.alpha = opts.alpha;
  } else if (opts.kind == "shortest") {
    d = fd::shortest_path_matrix(g);
  } else if (opts.kind == "wshortest") {
    d = fd::weighted_shortest_path_matrix(g);
  } else if (opts.kind == "resistance") {
    d = fd::resistance_matrix(g);
  } else {
    throw FlagError("unknown kind: " + opts.kind);
  }
  if (opts.common.format == "json")
    emit(opts.common, fd::matrix_to_json(d, label).dump(2) + "\n");
  else
    emit(opts.common, fd::matrix_to_csv(d));
  return kExitOk;
}

// -------------------------------------------------------------------- sweep

struct SweepOptions {
  CommonOptions common;
  FamilyFlags family;
  std::string target;
  std::string alphas;
  std::string range;
  int points = 5;
  double slack = 1.05;
};

int run_sweep(const SweepOptions& opts) {
  const fd::WeightedMultigraph g = load_graph(opts.common.input);
  const fd::FamilyConfig cfg = resolve_family(opts.family);

  fd::Matrix target;
  bool limit_at_zero = true;
  if (opts.target == "shortest") {
    target = fd::shortest_path_matrix(g);
  } else if (opts.target == "wshortest") {
    target = fd::weighted_shortest_path_matrix(g);
  } else if (opts.target == "resistance") {
    target = fd::resistance_matrix(g);
    limit_at_zero = false;
  } else {
    throw FlagError("unknown target: " + opts.target);
  }

  std::vector<double> alphas;
  if (!opts.alphas.empty()) {
    alphas = parse_alpha_list(opts.alphas);
  } else {
    double lo = 1e-4, hi = 1e4;
    if (!opts.range.empty()) {
      const auto colon = opts.range.find(':');
      if (colon == std::string::npos) throw FlagError("range must be lo:hi");
      lo = std::strtod(opts.range.substr(0, colon).c_str(), nullptr);
      hi = std::strtod(opts.range.substr(colon + 1).c_str(), nullptr);
      if (!(lo > 0.0) || !(hi > lo)) throw FlagError("range must satisfy 0 < lo < hi");
    }
    if (opts.points < 2) throw FlagError("--points must be at least 2");
    for (int i = 0; i < opts.points; ++i)
      alphas.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (opts.points - 1)));
    // Order toward the limit the target lives at.
    if (limit_at_zero) std::reverse(alphas.begin(), alphas.end());
  }

  const fd::ConvergenceReport report = fd::convergence_report(g, cfg, alphas, target);
  const bool monotone = report.monotone_decreasing(opts.slack);

  std::ostringstream out;
  if (opts.common.format == "json") {
    nlohmann::json j;
    j["kind"] = "sweep";
    j["target"] = opts.target;
    j["family"] = {{"transform", fd::transform_name(cfg.transform)},
                   {"hvariant", fd::h_variant_name(cfg.h_variant)},
                   {"gamma", fd::gamma_rule_name(cfg.gamma)}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows)
      rows.push_back({{"alpha", fd::quantize_sig9(row.alpha)},
                      {"max_error", fd::quantize_sig9(row.max_error)}});
    j["rows"] = std::move(rows);
    j["monotone"] = monotone;
    out << j.dump(2) << "\n";
  } else {
    out << "alpha,max_error\n";
    for (const auto& row : report.rows)
      out << fd::format_sig9(row.alpha) << ',' << fd::format_sig9(row.max_error) << '\n';
  }
  emit(opts.common, out.str());
  if (!monotone) {
    std::cerr << "sweep: errors are not monotone toward the limit\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
  CommonOptions common;
  FamilyFlags family;
  double tol = 1e-9;
  bool skip_oracle = false;
  std::string alphas;
};

int run_verify(const VerifyOptions& opts) {
  const fd::WeightedMultigraph g = load_graph(opts.common.input);
  const fd::FamilyConfig cfg = resolve_family(opts.family);
  std::vector<double> alphas = {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
  if (!opts.alphas.empty()) alphas = parse_alpha_list(opts.alphas);

  bool all_pass = true;
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << name;
    if (!detail.empty()) std::cout << " (" << detail << ')';
    std::cout << '\n';
    all_pass = all_pass && pass;
  };

  if (!opts.skip_oracle) {
    if (static_cast<int>(g.edges().size()) > fd::kMaxOracleEdges) {
      std::cerr << "verify: " << g.edges().size() << " edges exceed the enumeration cap of "
                << fd::kMaxOracleEdges << "; rerun with --skip-oracle\n";
      return kExitNumerical;
    }
    const fd::ForestCheckReport forest = fd::matrix_forest_check(g, opts.tol);
    check("matrix-forest identity", forest.passed,
          "max rel err " + fd::format_sig9(forest.max_rel_error));

    bool res_pass = true;
    double res_err = 0.0;
    for (const auto& component : fd::connected_components(g)) {
      if (component.size() < 2) continue;
      const fd::Subgraph sub = fd::induced_subgraph(g, component);
      const fd::Matrix via_pinv = fd::resistance_matrix(sub.graph);
      const fd::Matrix via_forests = fd::resistance_via_forests(sub.graph);
      const double err = (via_pinv - via_forests).cwiseAbs().maxCoeff();
      res_err = std::max(res_err, err);
      res_pass = res_pass && err <= 1e-8;
    }
    check("resistance via forests", res_pass, "max abs err " + fd::format_sig9(res_err));
  }

  bool metric_pass = true;
  std::string metric_detail;
  for (double alpha : alphas) {
    fd::Matrix d;
    try {
      d = fd::log_forest_distance_matrix(g, cfg, alpha);
    } catch (const fd::NumericalError& err) {
      metric_detail = "alpha=" + fd::format_sig9(alpha) + " skipped: " + err.what();
      continue;
    }
    const int n = g.vertex_count();
    const double scale = fd::geodetic_tolerance(d);
    for (int i = 0; i < n && metric_pass; ++i)
      for (int j = 0; j < n && metric_pass; ++j) {
        if (i == j) {
          metric_pass = d(i, j) == 0.0;
          continue;
        }
        if (!std::isfinite(d(i, j))) continue;
        metric_pass = d(i, j) >= -scale && d(i, j) == d(j, i);
        if (metric_pass && fd::transform_admissible(cfg.transform, alpha))
          metric_pass = d(i, j) > 10.0 * scale;
        for (int k = 0; k < n && metric_pass; ++k) {
          if (k == i || k == j || !std::isfinite(d(j, k)) || !std::isfinite(d(i, k))) continue;
          metric_pass = d(i, j) + d(j, k) - d(i, k) >= -scale;
        }
        if (!metric_pass) metric_detail = "violated at alpha=" + fd::format_sig9(alpha);
      }
  }
  check("metric axioms", metric_pass, metric_detail);

  bool geo_pass = true;
  std::int64_t equalities = 0;
  std::string geo_detail;
  for (double alpha : alphas) {
    fd::Matrix d;
    try {
      d = fd::log_forest_distance_matrix(g, cfg, alpha);
    } catch (const fd::NumericalError&) {
      continue;
    }
    const fd::GeodeticReport report = fd::verify_geodetic(g, d, fd::geodetic_tolerance(d));
    equalities = static_cast<std::int64_t>(report.equality_triples.size());
    if (!report.passed()) {
      geo_pass = false;
      const auto& mm = report.mismatches.front();
      geo_detail = "alpha=" + fd::format_sig9(alpha) + " triple (" +
                   std::to_string(mm.triple[0] + 1) + "," + std::to_string(mm.triple[1] + 1) +
                   "," + std::to_string(mm.triple[2] + 1) + ")";
      break;
    }
  }
  if (geo_pass) geo_detail = std::to_string(equalities) + " equality triples per alpha";
  check("graph-geodetic property", geo_pass, geo_detail);

  return all_pass ? kExitOk : kExitNumerical;
}

// ----------------------------------------------------------------- geodetic

struct GeodeticOptions {
  CommonOptions common;
  FamilyFlags family;
  std::string kind = "logforest";
  double alpha = -1.0;
  double tol = -1.0;
};

int run_geodetic(const GeodeticOptions& opts) {
  const fd::WeightedMultigraph g = load_graph(opts.common.input);
  fd::Matrix d;
  if (opts.kind == "logforest") {
    if (!(opts.alpha > 0.0)) throw FlagError("logforest requires --alpha > 0");
    d = fd::log_forest_distance_matrix(g, resolve_family(opts.family), opts.alpha);
  } else if (opts.kind == "ordinary-forest") {
    if (!(opts.alpha > 0.0)) throw FlagError("ordinary-forest requires --alpha > 0");
    d = fd::ordinary_forest_distance_matrix(g, opts.alpha);
  } else if (opts.kind == "shortest") {
    d = fd::shortest_path_matrix(g);
  } else if (opts.kind == "wshortest") {
    d = fd::weighted_shortest_path_matrix(g);
  } else if (opts.kind == "resistance") {
    d = fd::resistance_matrix(g);
  } else {
    throw FlagError("unknown kind: " + opts.kind);
  }
  const double tol = opts.tol > 0.0 ? opts.tol : fd::geodetic_tolerance(d);
  const fd::GeodeticReport report = fd::verify_geodetic(g, d, tol);

  std::ostringstream out;
  out << "triples checked: " << report.triples_checked << '\n'
      << "equality triples: " << report.equality_triples.size() << '\n'
      << "separation triples: " << report.separation_triples.size() << '\n'
      << "mismatches: " << report.mismatches.size() << '\n';
  for (const auto& t : report.equality_triples)
    out << "  equality (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")\n";
  for (const auto& mm : report.mismatches)
    out << "  mismatch (" << mm.triple[0] + 1 << "," << mm.triple[1] + 1 << ","
        << mm.triple[2] + 1 << ") residual " << fd::format_sig9(mm.residual)
        << (mm.separated ? " separated without equality\n" : " equality without separation\n");
  emit(opts.common, out.str());
  return report.passed() ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logarithmic forest distances and their limiting graph metrics"};
  app.require_subcommand(1);

  DistanceOptions dist;
  CLI::App* cmd_dist = app.add_subcommand("distances", "compute a distance matrix");
  add_common(cmd_dist, dist.common);
  add_family(cmd_dist, dist.family);
  cmd_dist->add_option("-k,--kind", dist.kind,
                       "logforest|shortest|wshortest|resistance|ordinary-forest")
      ->required();
  cmd_dist->add_option("-a,--alpha", dist.alpha, "family parameter alpha > 0");

  SweepOptions sweep;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "alpha sweep against a limit target");
  add_common(cmd_sweep, sweep.common);
  add_family(cmd_sweep, sweep.family);
  cmd_sweep->add_option("-t,--target", sweep.target, "shortest|wshortest|resistance")
      ->required();
  cmd_sweep->add_option("--alphas", sweep.alphas, "explicit comma-separated alpha list");
  cmd_sweep->add_option("--range", sweep.range, "geometric range lo:hi");
  cmd_sweep->add_option("--points", sweep.points, "points in --range (default 5)");
  cmd_sweep->add_option("--slack", sweep.slack, "monotonicity slack factor (default 1.05)");

  VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run oracle and property checks");
  add_common(cmd_verify, verify.common);
  add_family(cmd_verify, verify.family);
  cmd_verify->add_option("--tol", verify.tol, "oracle tolerance (default 1e-9)");
  cmd_verify->add_flag("--skip-oracle", verify.skip_oracle,
                       "skip forest-enumeration checks (needed above the edge cap)");
  cmd_verify->add_option("--alphas", verify.alphas, "alpha grid for the property scans");

  GeodeticOptions geodetic;
  CLI::App* cmd_geo = app.add_subcommand("geodetic", "graph-geodetic report for a distance");
  add_common(cmd_geo, geodetic.common);
  add_family(cmd_geo, geodetic.family);
  cmd_geo->add_option("-k,--kind", geodetic.kind,
                      "logforest|shortest|wshortest|resistance|ordinary-forest");
  cmd_geo->add_option("-a,--alpha", geodetic.alpha, "family parameter alpha > 0");
  cmd_geo->add_option("--tol", geodetic.tol, "equality tolerance override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitFlags;
  }

  try {
    if (cmd_dist->parsed()) return run_distances(dist);
    if (cmd_sweep->parsed()) return run_sweep(sweep);
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_geo->parsed()) return run_geodetic(geodetic);
    return kExitFlags;
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFlags;
  } catch (const fd::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const fd::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
