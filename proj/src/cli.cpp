#include "hardylab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "hardylab/continuum.hpp"
#include "hardylab/error.hpp"
#include "hardylab/greens.hpp"
#include "hardylab/hardy_weights.hpp"
#include "hardylab/radial_model.hpp"
#include "hardylab/report.hpp"
#include "hardylab/suites.hpp"

namespace hardylab::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::string model = "";
  double gamma = 0.0;
  std::optional<int> depth;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
  // weight
  std::optional<int> r_max;
  // verify
  std::string suite = "all";
  std::string json_path;
  // green
  bool compare = false;
  // continuum
  std::string space;
  double c_r_min = 0.5;
  double c_r_max = 5.0;
  double c_step = 0.1;
  std::string check = "table";
};

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) out << content;
  else write_file_atomically(cfg.out, content);
}

RadialModel load(const RunConfig& cfg) {
  RadialModel m = parse_model_source(cfg.model);
  if (cfg.depth) {
    if (*cfg.depth < 1 || *cfg.depth > m.depth())
      throw Error(ErrorKind::invalid_parameter, "--depth must lie in [1, " + std::to_string(m.depth()) + "]");
    m = m.truncated(*cfg.depth);
  }
  return m;
}

int cmd_model(const RunConfig& cfg, std::ostream& out) {
  const RadialModel m = load(cfg);
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  if (fmt == "text") {
    emit(cfg, write_model(m), out);
  } else if (fmt == "json") {
    ojson j;
    j["label"] = m.label();
    j["depth"] = m.depth();
    j["tail"] = to_string(m.tail());
    j["canonical_realization"] = m.has_canonical_realization();
    ojson rows = ojson::array();
    for (int r = 0; r <= m.depth(); ++r) {
      ojson row;
      row["r"] = r;
      if (r < m.depth()) row["k_plus"] = m.k_plus(r);
      else row["k_plus"] = nullptr;
      row["k_minus"] = m.k_minus(r);
      row["vol"] = m.vol(r).to_string();
      rows.push_back(row);
    }
    j["rows"] = rows;
    emit(cfg, j.dump(2) + "\n", out);
  } else {
    std::ostringstream s;
    s << "model " << m.label() << "\n"
      << "depth " << m.depth() << "\n"
      << "tail " << to_string(m.tail()) << "\n";
    if (m.depth() >= 2) s << "kappa(1) " << g17(m.kappa(1)) << "\n";
    const auto t = transience_test(m);
    s << "transience " << to_string(t.verdict) << " (" << t.method << ")\n";
    emit(cfg, s.str(), out);
  }
  return 0;
}

int cmd_weight(const RunConfig& cfg, std::ostream& out) {
  const RadialModel m = load(cfg);
  const WeightProfile w = optimal_weight(m, cfg.gamma);
  const int last = std::min(w.last(), cfg.r_max.value_or(w.last()));
  auto floor_at = [&](int r) -> std::optional<double> {
    if (r < 2 || r > m.depth() - 1) return std::nullopt;
    return weight_floor(m, r);
  };
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  std::ostringstream s;
  if (fmt == "csv") {
    s << "r,w,floor,admissible\n";
    for (int r = w.first(); r <= last; ++r) {
      const auto f = floor_at(r);
      s << r << ',' << g17(w.at(r)) << ',' << (f ? g17(*f) : "") << ',' << (w.admissible && w.at(r) >= 0 ? 1 : 0)
        << '\n';
    }
  } else if (fmt == "json") {
    ojson j;
    j["model"] = m.label();
    j["gamma"] = cfg.gamma;
    j["origin"] = to_string(w.origin);
    j["admissible"] = w.admissible;
    j["poincare_floor"] = w.poincare_floor;
    j["notes"] = w.notes;
    ojson rows = ojson::array();
    for (int r = w.first(); r <= last; ++r) {
      ojson row;
      row["r"] = r;
      row["w"] = w.at(r);
      if (const auto f = floor_at(r)) row["floor"] = *f;
      else row["floor"] = nullptr;
      row["admissible"] = w.admissible && w.at(r) >= 0;
      rows.push_back(row);
    }
    j["rows"] = rows;
    s << j.dump(2) << '\n';
  } else {
    for (const auto& n : w.notes) s << "NOTE: " << n << '\n';
    s << "model " << m.label() << "  gamma " << g17(cfg.gamma) << "  admissible " << (w.admissible ? "yes" : "no")
      << "  poincare floor " << g17(w.poincare_floor) << '\n';
    for (int r = w.first(); r <= last; ++r) {
      const auto f = floor_at(r);
      s << "  r=" << r << "  w=" << g17(w.at(r));
      if (f) s << "  floor=" << g17(*f);
      s << '\n';
    }
  }
  emit(cfg, s.str(), out);
  return w.admissible ? 0 : 3;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const RadialModel m = load(cfg);
  SuiteOptions opt;
  opt.gamma = cfg.gamma;
  opt.seed = cfg.seed;
  opt.eigen_tol = cfg.tol;
  const auto reports = run_suite(m, cfg.suite, opt);
  const std::string json = to_json(reports);
  if (!cfg.json_path.empty()) write_file_atomically(cfg.json_path, json);
  const std::string fmt = cfg.format.empty() ? "human" : cfg.format;
  if (fmt == "json") emit(cfg, json, out);
  else emit(cfg, to_human(reports), out);
  return exit_code(reports);
}

int cmd_green(const RunConfig& cfg, std::ostream& out) {
  const RadialModel m = load(cfg);
  const auto rows = green_table(m);
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  std::ostringstream s;
  if (fmt == "csv") {
    s << (cfg.compare ? "r,G,w_green,w0,margin\n" : "r,G,w_green\n");
    for (const auto& row : rows) {
      s << row.r << ',' << row.G.to_string() << ',' << g17(row.w_green);
      if (cfg.compare) s << ',' << g17(row.w0) << ',' << g17(row.margin);
      s << '\n';
    }
    emit(cfg, s.str(), out);
    if (!cfg.compare) return 0;
    return exit_code({compare_to_green(m)});
  }
  if (fmt == "json") {
    ojson j;
    j["model"] = m.label();
    const GreenProfile g = green_function(m);
    j["tail_method"] = to_string(g.tail_method);
    j["tail_error_bound"] = g.tail_error_bound;
    ojson arr = ojson::array();
    for (const auto& row : rows) {
      ojson o;
      o["r"] = row.r;
      o["G"] = row.G.to_string();
      o["w_green"] = row.w_green;
      if (cfg.compare) {
        o["w0"] = row.w0;
        o["margin"] = row.margin;
      }
      arr.push_back(o);
    }
    j["rows"] = arr;
    s << j.dump(2) << '\n';
    emit(cfg, s.str(), out);
    return cfg.compare ? exit_code({compare_to_green(m)}) : 0;
  }
  const auto rep = compare_to_green(m);
  s << to_human({rep});
  emit(cfg, s.str(), out);
  return exit_code({rep});
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::parse_error, "bad integer '" + s + "' in " + what);
}

struct Space {
  DensitySpec spec;
  std::function<long double(long double)> weight;
  int model_dimension = 0;  // set for model:… spaces
};

Space parse_space(const std::string& text) {
  const auto p = split(text, ':');
  Space sp;
  if (p.size() == 2 && p[0] == "hyperbolic") {
    const int d = to_int(p[1], text);
    sp.spec = hyperbolic_density(d);
    sp.weight = [d](long double r) { return weight_hyperbolic_ld(d, r); };
  } else if (p.size() == 2 && p[0] == "euclidean") {
    sp.spec = euclidean_density(to_int(p[1], text));
    const DensitySpec spec = sp.spec;
    sp.weight = [spec](long double r) { return weight_harmonic_ld(spec, r); };
  } else if (p.size() == 3 && p[0] == "dr") {
    const int a = to_int(p[1], text), b = to_int(p[2], text);
    sp.spec = damek_ricci_density(a, b);
    sp.weight = [a, b](long double r) { return weight_damek_ricci_ld(a, b, r); };
  } else if (p.size() == 3 && p[0] == "model" && (p[1] == "sinh" || p[1] == "euclid")) {
    const int d = to_int(p[2], text);
    if (d < 3) throw Error(ErrorKind::dimension_too_small, "model spaces need d >= 3");
    const bool hyp = p[1] == "sinh";
    using F = std::function<long double(long double)>;
    F h = hyp ? F([](long double r) { return std::sinh(r); }) : F([](long double r) { return r; });
    F h1 = hyp ? F([](long double r) { return std::cosh(r); }) : F([](long double) { return 1.0L; });
    F h2 = hyp ? F([](long double r) { return std::sinh(r); }) : F([](long double) { return 0.0L; });
    sp.spec = model_density(h, h1, h2, d, text);
    sp.model_dimension = d;
    const DensitySpec spec = sp.spec;
    sp.weight = [spec, d](long double r) { return static_cast<long double>(weight_model(spec, d, static_cast<double>(r))); };
  } else if (p.size() >= 2 && p[0] == "table") {
    sp.spec = table_density(text.substr(6));
    const DensitySpec spec = sp.spec;
    sp.weight = [spec](long double r) { return weight_harmonic_ld(spec, r); };
  } else {
    throw Error(ErrorKind::parse_error, "unknown space '" + text + "'");
  }
  return sp;
}

int cmd_continuum(const RunConfig& cfg, std::ostream& out) {
  const Space sp = parse_space(cfg.space);
  if (!(cfg.c_step > 0) || !(cfg.c_r_max > cfg.c_r_min) || !(cfg.c_r_min > 0))
    throw Error(ErrorKind::invalid_parameter, "need 0 < r-min < r-max and step > 0");
  std::ostringstream s;
  if (cfg.check == "table") {
    const bool model = sp.model_dimension > 0;
    s << (model ? "r,W,harmonic_condition,model_condition\n" : "r,W,harmonic_condition\n");
    const long n = static_cast<long>(std::floor((cfg.c_r_max - cfg.c_r_min) / cfg.c_step + 1e-9));
    for (long i = 0; i <= n; ++i) {
      const double r = cfg.c_r_min + i * cfg.c_step;
      s << g17(r) << ',' << g17(static_cast<double>(sp.weight(r))) << ',' << (check_harmonic_condition(sp.spec, r) ? 1 : 0);
      if (model) s << ',' << (check_model_optimality_condition(sp.spec, sp.model_dimension, r) ? 1 : 0);
      s << '\n';
    }
    emit(cfg, s.str(), out);
    return 0;
  }
  if (cfg.check != "residual") throw Error(ErrorKind::invalid_parameter, "--check must be residual or table");
  // Second-order differences: halving h should divide the residual by about 4.
  std::vector<VerificationReport> reports;
  for (Branch b : {Branch::sqrt_u, Branch::sqrt_u_log}) {
    VerificationReport rep;
    rep.check = b == Branch::sqrt_u ? "harmonicity-sqrt-u" : "harmonicity-sqrt-u-log";
    rep.status = Status::pass;
    const double coarse = harmonicity_residual(sp.spec, sp.weight, cfg.c_r_min, cfg.c_r_max, cfg.c_step, b);
    const double fine = harmonicity_residual(sp.spec, sp.weight, cfg.c_r_min, cfg.c_r_max, cfg.c_step / 2, b);
    rep.params["space"] = sp.spec.label;
    rep.params["r_min"] = cfg.c_r_min;
    rep.params["r_max"] = cfg.c_r_max;
    rep.params["h"] = cfg.c_step;
    rep.params["analytic_derivatives"] = sp.spec.analytic_derivatives;
    rep.params["seed"] = static_cast<std::int64_t>(cfg.seed);
    rep.residuals["residual_h"] = coarse;
    rep.residuals["residual_h_over_2"] = fine;
    const double ratio = fine > 0 ? coarse / fine : 0.0;
    rep.require_at_least("ratio", ratio, 3.2);
    rep.require_at_most("ratio_upper", ratio, 4.8);
    if (!sp.spec.analytic_derivatives) rep.notes.push_back("density derivatives from central differences");
    reports.push_back(std::move(rep));
  }
  const std::string fmt = cfg.format.empty() ? "human" : cfg.format;
  emit(cfg, fmt == "json" ? to_json(reports) : to_human(reports), out);
  return exit_code(reports);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_model) {
  auto* opt = sub->add_option("--model", cfg.model, "tree:<d>:<R> | antitree:poly:<p>:<R> | file:<path>");
  if (needs_model) opt->required();
  sub->add_option("--gamma", cfg.gamma, "value of u at the root (0 punctures the root)");
  sub->add_option("--depth", cfg.depth, "truncate the model to this depth");
  sub->add_option("--tol", cfg.tol, "eigenvalue tolerance");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--out", cfg.out, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hardy weights on weakly spherically symmetric graphs", "hardy-lab"};
  app.require_subcommand(1, 1);

  auto* model = app.add_subcommand("model", "build, validate and print a radial model");
  add_common(model, cfg, true);
  model->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "human"}));

  auto* weight = app.add_subcommand("weight", "optimal weight table");
  add_common(weight, cfg, true);
  weight->add_option("--r-max", cfg.r_max, "last radius");
  weight->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "human"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg, true);
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--json", cfg.json_path, "write the JSON report here");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "human"}));

  auto* green = app.add_subcommand("green", "Green's function and its Hardy weight");
  add_common(green, cfg, true);
  green->add_flag("--compare", cfg.compare, "add w0 and the margin w0 - w_green");
  green->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "human"}));

  auto* cont = app.add_subcommand("continuum", "continuum weight tables and residual checks");
  add_common(cont, cfg, false);
  cont->add_option("--space", cfg.space, "hyperbolic:d | euclidean:d | dr:p:q | model:sinh:d | model:euclid:d | table:path")
      ->required();
  cont->add_option("--r-min", cfg.c_r_min);
  cont->add_option("--r-max", cfg.c_r_max);
  cont->add_option("--step", cfg.c_step);
  cont->add_option("--check", cfg.check)->check(CLI::IsMember({"residual", "table"}));
  cont->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "human"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (model->parsed()) return cmd_model(cfg, out);
    if (weight->parsed()) return cmd_weight(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (green->parsed()) return cmd_green(cfg, out);
    return cmd_continuum(cfg, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::no_green_function:
      case ErrorKind::hypothesis_not_met:
      case ErrorKind::inconclusive:
        return 3;
      default:
        return 2;
    }
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hardylab::cli
