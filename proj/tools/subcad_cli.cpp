#include "subcad/complexity.hpp"
#include "subcad/driver.hpp"
#include "subcad/plot.hpp"
#include "subcad/serialize.hpp"
#include "subcad/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace subcad;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFail = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  std::string op;
  std::string format = "summary";
  std::string nullification = "fail";
  std::string coefficients = "finite_zeros";
  std::string output;
  bool leading_coeff_only = false;
  bool dump_projection = false;
  int jobs = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("file", c.file, "problem file")->required()->check(CLI::ExistingFile);
  app->add_option("--operator", c.op, "mccallum, ec (mccallum_ec), tticad or collins_hong");
  app->add_option("--format", c.format, "summary or json")->check(CLI::IsMember({"summary", "json"}));
  app->add_option("--nullification", c.nullification, "fail or include-stack")
      ->check(CLI::IsMember({"fail", "include-stack"}));
  app->add_option("--coefficients", c.coefficients, "finite_zeros, until_constant or all")
      ->check(CLI::IsMember({"finite_zeros", "until_constant", "all"}));
  app->add_flag("--leading-coeff-only", c.leading_coeff_only, "leading coefficients only (1-layered output)");
  app->add_flag("--dump-projection", c.dump_projection, "include the projection tiers");
  app->add_option("--jobs", c.jobs, "worker threads (default SUBCAD_JOBS or hardware)");
  app->add_option("-o,--output", c.output, "write to this file instead of stdout");
}

Request make_request(const Common& c, const Problem& problem, Construction what, int layers) {
  Request r;
  r.what = what;
  r.layers = layers;
  r.op = c.op.empty() ? default_operator(what, problem) : parse_operator(c.op);
  r.projection.coefficients = parse_coefficient_rule(c.coefficients);
  r.projection.leading_coeff_only = c.leading_coeff_only;
  r.subcad.nullification = c.nullification == "fail" ? NullificationPolicy::fail : NullificationPolicy::include_stack;
  r.subcad.jobs = c.jobs;
  if (r.projection.leading_coeff_only && !(what == Construction::layered && layers == 1)) {
    throw UsageError("--leading-coeff-only is only valid for a 1-layered sub-CAD");
  }
  return r;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

std::string dims_string(const std::vector<Cell>& cells) {
  std::map<int, size_t> dims;
  for (const auto& c : cells) ++dims[c.dim()];
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
    os << (first ? "" : ", ") << it->first << ':' << it->second;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string projection_summary(const ProjectionRun& run) {
  std::ostringstream os;
  os << "projection (" << to_string(run.op) << ", " << run.total_size() << " polynomials):\n";
  for (int v = run.dimension() - 1; v >= 0; --v) {
    const auto& tier = run.tiers[static_cast<size_t>(v)];
    os << "  " << run.order->name(v) << " [" << tier.size() << "]";
    for (const auto& p : tier) os << (run.is_ec(p) ? "  *" : "  ") << p.to_string();
    os << '\n';
  }
  return os.str();
}

std::string summary(const Outcome& out, bool dump) {
  std::ostringstream os;
  os << "kind: " << out.cad.kind_name() << '\n';
  os << "operator: " << to_string(out.run.op) << '\n';
  os << "invariance: " << out.cad.invariance() << '\n';
  os << "cells: " << out.cad.cells.size() << ", dims: " << dims_string(out.cad.cells) << '\n';
  os << "true: " << out.true_cells << '\n';
  if (out.cad.base_cells) os << "base cells: " << out.cad.base_cells << '\n';
  if (out.cad.superset()) {
    const size_t nb = out.cad.nullified_bases.size();
    os << "superset: whole stacks over " << nb << " nullified base cell" << (nb == 1 ? "" : "s") << ":";
    for (const auto& c : out.cad.nullified_bases) os << ' ' << c.index_string();
    os << '\n';
  }
  os << std::fixed << std::setprecision(3) << "time: projection " << out.projection_seconds << " s, lifting "
     << out.lifting_seconds << " s\n";
  if (dump) os << projection_summary(out.run);
  return os.str();
}

void report(const Common& c, const Problem& problem, const Outcome& out) {
  if (c.format == "json") {
    json j = outcome_to_json(problem, out);
    if (c.dump_projection) j["projection"] = projection_to_json(out.run);
    emit(c, j.dump(1) + "\n");
  } else {
    emit(c, summary(out, c.dump_projection));
  }
}

int run_construction(const Common& c, Construction what, int layers) {
  const Problem problem = load_problem(c.file);
  Request r = make_request(c, problem, what, layers);
  if (what == Construction::variety && c.op.empty()) {
    const auto ec = problem.designated_ec();
    if (problem.formulas.size() == 1 && ec && ec->main_var() < problem.order->size() - 1) {
      r.what = Construction::variety_lower;
      r.op = Operator::mccallum;
    }
  }
  report(c, problem, run_request(problem, r));
  return 0;
}

int run_recursive(const Common& c, int layers, const std::string& state_path) {
  const Problem problem = load_problem(c.file);
  const Request r = make_request(c, problem, Construction::layered, 1);
  Outcome out;
  LayeredState state;
  const auto t0 = std::chrono::steady_clock::now();
  if (std::filesystem::exists(state_path)) {
    std::ifstream f(state_path);
    state = layered_state_from_json(json::parse(f), out.run);
    if (!(*out.run.order == *problem.order)) throw UsageError("state file was built for other variables");
  } else {
    out.run = projection_phase(projection_input(problem, r.op), r.op, r.projection);
  }
  const auto t1 = std::chrono::steady_clock::now();
  const int target = layers > 0 ? layers : state.layers + 1;
  if (target > problem.order->size() + 1) throw UsageError("at most n+1 layers");
  if (target <= state.layers) throw UsageError("the state already has " + std::to_string(state.layers) + " layers");
  while (state.layers < target) out.cad = layered_recursive(out.run, state, r.subcad);
  const auto t2 = std::chrono::steady_clock::now();
  out.projection_seconds = std::chrono::duration<double>(t1 - t0).count();
  out.lifting_seconds = std::chrono::duration<double>(t2 - t1).count();
  evaluate_truth(problem, out);
  {
    std::ofstream f(state_path);
    if (!f) throw std::runtime_error("cannot write " + state_path);
    f << layered_state_to_json(out.run, state).dump() << '\n';
  }
  report(c, problem, out);
  return 0;
}

int run_bounds(const std::string& params, const std::string& csv, long from, long to) {
  const ComplexityParams p = parse_params(params);
  std::ostringstream os;
  os << "parameters: n=" << p.n << " m_A=" << p.m_A << " m_E=" << p.m_E << " m_AminusE=" << p.m_AminusE
     << " d_A=" << p.d_A << " d_E=" << p.d_E << " l_A=" << p.l_A << " l_E=" << p.l_E << '\n';
  for (auto k : all_bound_kinds()) {
    const Integer v = bound_value(k, p);
    const size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    os << std::left << std::setw(22) << to_string(k) << ' ';
    if (bits <= 128) {
      os << v.get_str();
    } else {
      os << "~2^" << bits;
    }
    if (const auto ll = log_log(v)) os << "  (ln ln " << std::setprecision(6) << *ll << ")";
    os << '\n';
  }
  os << std::left << std::setw(22) << "pEA_degree_max_form" << ' ' << pEA_degree_max_form(p).get_str() << '\n';
  const Figure7Table t = figure7_table(p, from, to);
  const std::string table = figure7_csv(t);
  os << '\n' << table;
  std::cout << os.str();
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw std::runtime_error("cannot write " + csv);
    f << table;
  }
  return 0;
}

int run_plot(const Common& c, const std::string& what, int layers, const std::string& svg) {
  const Problem problem = load_problem(c.file);
  if (problem.order->size() != 2) throw UsageError("plot2d needs two variables");
  Construction cons = parse_construction(what);
  Request r = make_request(c, problem, cons, layers);
  const Outcome out = run_request(problem, r);
  Common to = c;
  to.output = svg;
  emit(to, plot2d_svg(problem, out));
  if (!svg.empty()) std::cout << summary(out, false);
  return 0;
}

int run_verify(const Common& c, bool grid) {
  const Problem problem = load_problem(c.file);
  SuiteOptions opts;
  opts.grid = grid;
  opts.projection.coefficients = parse_coefficient_rule(c.coefficients);
  opts.subcad.jobs = c.jobs;
  size_t failed = 0;
  std::ostringstream os;
  for (const auto& check : verify_suite(problem, opts)) {
    os << (check.ok ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) os << " (" << check.detail << ")";
    os << '\n';
    if (!check.ok) ++failed;
  }
  os << (failed ? std::to_string(failed) + " checks failed" : "all checks passed") << '\n';
  emit(c, os.str());
  return failed ? kExitInternal : 0;
}

struct BenchRow {
  std::string name;
  Construction what;
  Operator op;
  int layers;
};

std::vector<BenchRow> bench_rows(const Problem& problem) {
  const int n = problem.order->size();
  std::vector<BenchRow> rows;
  bool tti = problem.formulas.size() > 1;
  for (size_t i = 0; tti && i < problem.formulas.size(); ++i) tti = problem.formula_ec(i).has_value();
  const auto ec = problem.designated_ec();
  if (tti) {
    rows.push_back({"full", Construction::cad, Operator::tticad, 0});
    rows.push_back({"variety", Construction::variety, Operator::tticad, 0});
    for (int l = n - 1; l >= 1; --l) rows.push_back({"lv" + std::to_string(l), Construction::layered_variety, Operator::tticad, l});
  } else if (ec && ec->main_var() == n - 1) {
    rows.push_back({"full", Construction::cad, Operator::mccallum, 0});
    rows.push_back({"ec", Construction::cad, Operator::mccallum_ec, 0});
    rows.push_back({"variety", Construction::variety, Operator::mccallum_ec, 0});
    for (int l = n - 1; l >= 1; --l) {
      rows.push_back({"lv" + std::to_string(l), Construction::layered_variety, Operator::mccallum_ec, l});
    }
  } else {
    rows.push_back({"full", Construction::cad, Operator::mccallum, 0});
    if (ec) rows.push_back({"variety_lower", Construction::variety_lower, Operator::mccallum, 0});
    rows.push_back({"layered1", Construction::layered, Operator::mccallum, 1});
  }
  return rows;
}

int run_bench(const Common& c, const std::string& dir, const std::vector<std::string>& only) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.emplace_back(dir);
  }
  std::ostringstream os;
  os << std::left << std::setw(24) << "fixture" << std::setw(12) << "row" << std::right << std::setw(10) << "cells"
     << std::setw(8) << "true" << std::setw(10) << "seconds" << '\n';
  for (const auto& path : files) {
    const Problem problem = load_problem(path.string());
    for (const auto& row : bench_rows(problem)) {
      if (!only.empty() && std::find(only.begin(), only.end(), row.name) == only.end()) continue;
      Common rc = c;
      rc.op = to_string(row.op);
      const Request r = make_request(rc, problem, row.what, row.layers);
      os << std::left << std::setw(24) << path.filename().string() << std::setw(12) << row.name << std::right;
      try {
        const Outcome out = run_request(problem, r);
        os << std::setw(10) << out.cad.cells.size() << std::setw(8) << out.true_cells << std::setw(10) << std::fixed
           << std::setprecision(2) << out.projection_seconds + out.lifting_seconds;
        if (out.cad.superset()) os << "  superset";
        os << '\n';
      } catch (const NotWellOriented& e) {
        os << std::setw(10) << "FAIL" << "  " << e.what() << '\n';
      } catch (const ProjectionError& e) {
        os << std::setw(10) << "n/a" << "  " << e.what() << '\n';
      }
      std::cout << os.str() << std::flush;
      os.str("");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylindrical algebraic decompositions and sub-decompositions"};
  app.require_subcommand(1);

  Common c;
  int layers = 1;
  std::string mode = "full";
  bool recursive = false;
  std::string state_path;

  auto* cad = app.add_subcommand("cad", "complete CAD (sign-invariant, or with --operator ec the EC-invariant CAD)");
  add_common(cad, c);
  auto* variety = app.add_subcommand("variety", "variety sub-CAD of the designated equational constraint");
  add_common(variety, c);
  auto* layered = app.add_subcommand("layered", "layered sub-CAD");
  add_common(layered, c);
  layered->add_option("--layers", layers, "number of layers, 1..n+1");
  layered->add_flag("--recursive", recursive, "extend a stored state one layer at a time");
  layered->add_option("--state", state_path, "state file for --recursive");
  auto* lv = app.add_subcommand("lv", "layered variety sub-CAD");
  add_common(lv, c);
  lv->add_option("--layers", layers, "number of layers, 1..n");
  auto* tticad = app.add_subcommand("tticad", "truth-table invariant CAD of the formula list");
  add_common(tticad, c);
  tticad->add_option("--mode", mode, "full, variety, layered or lv")
      ->check(CLI::IsMember({"full", "variety", "layered", "lv"}));
  tticad->add_option("--layers", layers, "layers for layered and lv");

  std::string params = "n=2";
  std::string csv;
  long from = 2, to = 8;
  auto* bounds = app.add_subcommand("bounds", "complexity bounds and the log-log comparison table");
  bounds->add_option("--params", params, "e.g. n=3,d_A=3,d_E=2,m_A=3,m_E=1,l_A=2,l_E=2");
  bounds->add_option("--csv", csv, "write the table as CSV");
  bounds->add_option("--from", from, "first n of the table");
  bounds->add_option("--to", to, "last n of the table");

  std::string what = "cad";
  std::string svg;
  auto* plot = app.add_subcommand("plot2d", "SVG of a two-variable (sub-)CAD");
  add_common(plot, c);
  plot->add_option("--what", what, "cad, variety, variety_lower, layered or lv");
  plot->add_option("--layers", layers, "layers for layered and lv");
  plot->add_option("--svg", svg, "SVG output file (stdout otherwise)");

  bool no_grid = false;
  auto* verify = app.add_subcommand("verify", "grid oracle and invariant suite");
  add_common(verify, c);
  verify->add_flag("--no-grid", no_grid, "skip the grid oracle");

  std::string bench_dir;
  std::vector<std::string> only;
  auto* bench = app.add_subcommand("bench", "cell counts and times over a fixture directory");
  bench->add_option("dir", bench_dir, "directory of problem files, or one file")->required();
  bench->add_option("--rows", only, "only these rows (full, ec, variety, lv2, lv1, ...)")->delimiter(',');
  bench->add_option("--coefficients", c.coefficients, "finite_zeros, until_constant or all");
  bench->add_option("--nullification", c.nullification, "fail or include-stack")
      ->check(CLI::IsMember({"fail", "include-stack"}));
  bench->add_option("--jobs", c.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cad) return run_construction(c, Construction::cad, 0);
    if (*variety) return run_construction(c, Construction::variety, 0);
    if (*layered) {
      if (recursive) {
        if (state_path.empty()) throw UsageError("--recursive needs --state FILE");
        return run_recursive(c, layered->count("--layers") ? layers : 0, state_path);
      }
      return run_construction(c, Construction::layered, layers);
    }
    if (*lv) return run_construction(c, Construction::layered_variety, layers);
    if (*tticad) {
      if (!c.op.empty() && c.op != "tticad") throw UsageError("tticad uses the tticad operator");
      c.op = "tticad";
      const std::map<std::string, Construction> modes = {{"full", Construction::cad},
                                                         {"variety", Construction::variety},
                                                         {"layered", Construction::layered},
                                                         {"lv", Construction::layered_variety}};
      return run_construction(c, modes.at(mode), layers);
    }
    if (*bounds) return run_bounds(params, csv, from, to);
    if (*plot) return run_plot(c, what, layers, svg);
    if (*verify) return run_verify(c, !no_grid);
    if (*bench) return run_bench(c, bench_dir, only);
  } catch (const NotWellOriented& e) {
    std::cout << "FAIL: " << e.what() << '\n';
    std::cout << "polynomial: " << e.poly().to_string() << '\n';
    std::cout << "cell: " << e.cell().index_string() << " (dimension " << e.cell().dim() << "), sample (";
    for (size_t i = 0; i < e.cell().sample.size(); ++i) std::cout << (i ? ", " : "") << e.cell().sample[i].to_string();
    std::cout << ")\n";
    return kExitFail;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
