// One PASS/FAIL/SKIP line per criterion, then indented detail lines.
// Exit status is 0 when every FAIL is an expected deviation whose cause was
// re-established in this run; see the detail lines of such a criterion.

#include "oracles.hpp"

#include "subcad/algebra.hpp"
#include "subcad/complexity.hpp"
#include "subcad/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace subcad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  enum class Status { pass, fail, skip } status = Status::pass;
  bool expected_deviation = false;
  std::string title;
  std::vector<std::string> details;

  void note(const std::string& s) { details.push_back(s); }
  void require(bool ok, const std::string& s) {
    details.push_back(std::string(ok ? "ok   " : "BAD  ") + s);
    if (!ok) status = Status::fail;
  }
};

Problem fixture(const std::string& name) { return load_problem(std::string(SUBCAD_FIXTURES) + "/" + name); }

std::string str(size_t v) { return std::to_string(v); }

std::string fixed(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

std::string counted(const std::string& what, size_t got, size_t want) {
  return what + ": " + str(got) + " (target " + str(want) + ")";
}

Outcome timed(const Problem& p, Construction what, Operator op, int layers, double& secs,
              NullificationPolicy policy = NullificationPolicy::fail) {
  Request r;
  r.what = what;
  r.op = op;
  r.layers = layers;
  r.subcad.nullification = policy;
  const auto t0 = Clock::now();
  Outcome out = run_request(p, r);
  secs = seconds_since(t0);
  return out;
}

/// Construction over a projection computed once per fixture.
Outcome over(const Problem& p, const ProjectionRun& run, Construction what, int layers,
             NullificationPolicy policy = NullificationPolicy::fail) {
  Outcome out;
  out.run = run;
  SubCadOptions opts;
  opts.nullification = policy;
  const auto t0 = Clock::now();
  out.cad = construct(run, what, layers, opts);
  out.lifting_seconds = seconds_since(t0);
  evaluate_truth(p, out);
  return out;
}

std::string tier_sizes(const ProjectionRun& run) {
  std::string s;
  for (size_t i = 0; i < run.tiers.size(); ++i) s += (i ? "/" : "") + str(run.tiers[i].size());
  return s;
}

Result criterion1() {
  Result r;
  r.title = "1 circle and line, x < y: cad 23, variety 8 (3 true), lower variety 11 over a 7-cell R^1 CAD, layered 8";
  const auto variety = fixture("circle_variety.txt");
  const auto line = fixture("circle_line.txt");
  const auto layered = fixture("circle_layered.txt");
  double t = 0;

  auto full = timed(variety, Construction::cad, Operator::mccallum, 1, t);
  r.require(full.cad.cells.size() == 23 && t < 1, counted("complete cad", full.cad.cells.size(), 23) + ", " + fixed(t) + " s");

  auto v = timed(variety, Construction::variety, Operator::mccallum_ec, 1, t);
  r.require(v.cad.cells.size() == 8 && v.true_cells == 3 && t < 1,
            counted("variety", v.cad.cells.size(), 8) + ", " + counted("true", v.true_cells, 3) + ", " + fixed(t) + " s");

  auto low = timed(line, Construction::variety_lower, Operator::mccallum, 1, t);
  const size_t r1 = base_phase(low.run.tiers[0]).size();
  r.require(low.cad.cells.size() == 11 && r1 == 7 && t < 1,
            counted("lower variety", low.cad.cells.size(), 11) + ", " + counted("R^1 CAD", r1, 7) + ", " + fixed(t) + " s");

  auto one = timed(layered, Construction::layered, Operator::mccallum, 1, t);
  bool top = true;
  for (const auto& c : one.cad.cells) top = top && c.dim() == 2;
  r.require(one.cad.cells.size() == 8 && top && t < 1,
            counted("1-layered", one.cad.cells.size(), 8) + (top ? ", all of dimension 2" : ", lower dimensions present") +
                ", " + fixed(t) + " s");
  return r;
}

Result criterion2() {
  Result r;
  r.title = "2 circle, y < x: cad 19, variety 4, lv(1) 2";
  const auto p = fixture("circle_variety_yx.txt");
  double t = 0;
  auto full = timed(p, Construction::cad, Operator::mccallum, 1, t);
  r.require(full.cad.cells.size() == 19 && t < 1, counted("complete cad", full.cad.cells.size(), 19) + ", " + fixed(t) + " s");
  auto v = timed(p, Construction::variety, Operator::mccallum_ec, 1, t);
  r.require(v.cad.cells.size() == 4 && t < 1, counted("variety", v.cad.cells.size(), 4) + ", " + fixed(t) + " s");
  auto lv = timed(p, Construction::layered_variety, Operator::mccallum_ec, 1, t);
  r.require(lv.cad.cells.size() == 2 && t < 1, counted("lv(1)", lv.cad.cells.size(), 2) + ", " + fixed(t) + " s");
  return r;
}

Result criterion3() {
  Result r;
  r.title = "3 random quadrics: 17047 full, 1315 ec, 422 variety, 348 lv(2), 138 lv(1) with 36 true";
  const auto t0 = Clock::now();
  const auto p = fixture("quadrics.txt");
  const auto plain = projection_phase(projection_input(p, Operator::mccallum), Operator::mccallum);
  const auto ec = projection_phase(projection_input(p, Operator::mccallum_ec), Operator::mccallum_ec);
  r.note("projection tiers x1/x2/x3: mccallum " + tier_sizes(plain) + ", mccallum_ec " + tier_sizes(ec));

  auto full = over(p, plain, Construction::cad, 1);
  r.require(full.cad.cells.size() == 17047, counted("full", full.cad.cells.size(), 17047));
  auto eci = over(p, ec, Construction::cad, 1);
  r.require(eci.cad.cells.size() == 1315, counted("ec-invariant", eci.cad.cells.size(), 1315));
  auto lv2 = over(p, ec, Construction::layered_variety, 2);
  r.require(lv2.cad.cells.size() == 348, counted("lv(2)", lv2.cad.cells.size(), 348));
  auto lv1 = over(p, ec, Construction::layered_variety, 1);
  r.require(lv1.cad.cells.size() == 138 && lv1.true_cells == 36,
            counted("lv(1)", lv1.cad.cells.size(), 138) + ", " + counted("true", lv1.true_cells, 36));
  const bool others_ok = r.status == Result::Status::pass;

  // The variety sub-CAD lifts with respect to the constraint over the whole
  // CAD of R^2, and the constraint vanishes identically over a point cell.
  bool deviation_explained = false;
  try {
    auto v = over(p, ec, Construction::variety, 1);
    r.require(v.cad.cells.size() == 422, counted("variety", v.cad.cells.size(), 422));
  } catch (const NotWellOriented& e) {
    r.require(false, "variety: FAIL, " + e.poly().to_string() + " vanishes identically over cell " + e.cell().index_string() +
                         " of dimension " + std::to_string(e.cell().dim()) + " (target 422)");
    auto sup = over(p, ec, Construction::variety, 1, NullificationPolicy::include_stack);
    size_t in_stacks = 0;
    for (const auto& c : sup.cad.cells) {
      for (const auto& b : sup.cad.nullified_bases) {
        if (std::equal(b.index.begin(), b.index.end(), c.index.begin())) ++in_stacks;
      }
    }
    const size_t outside = sup.cad.cells.size() - in_stacks;
    r.note("variety with --nullification include-stack: " + str(sup.cad.cells.size()) + " cells, " + str(in_stacks) +
           " of them over " + str(sup.cad.nullified_bases.size()) + " nullified base cell(s), " + str(outside) +
           " elsewhere");
    r.note("the ec, lv(2) and lv(1) rows use this same projection and match their targets");
    deviation_explained = e.cell().dim() == 0 && outside == 422;
    if (deviation_explained) {
      r.note("target 422 equals the output with the nullified stacks omitted; those stacks lie on the variety, "
             "so omitting them is unsound and neither policy gives 422");
    }
  }
  const double secs = seconds_since(t0);
  r.require(secs < 300, "total " + fixed(secs) + " s (budget 300 s)");
  r.expected_deviation = r.status == Result::Status::fail && others_ok && deviation_explained && secs < 300;
  return r;
}

Result criterion4() {
  Result r;
  r.title = "4 spheres TTICAD: 4861 full, 249 base cells, 528 lv(1), 1514 lv(2), 1976 variety; 10063, 1104, 3166, 4130";
  const auto t0 = Clock::now();
  struct Target {
    const char* file;
    size_t full, variety, lv2, lv1;
    std::optional<size_t> lv1_base;
  };
  for (const Target& t : {Target{"two_spheres.txt", 4861, 1976, 1514, 528, 249},
                          Target{"three_spheres.txt", 10063, 4130, 3166, 1104, std::nullopt}}) {
    const auto p = fixture(t.file);
    const auto s0 = Clock::now();
    const auto run = projection_phase(projection_input(p, Operator::tticad), Operator::tticad);
    const std::string name = std::string(t.file).substr(0, std::string(t.file).find('.'));
    const size_t full = over(p, run, Construction::cad, 1).cad.cells.size();
    r.require(full == t.full, counted(name + " full", full, t.full));
    auto v = over(p, run, Construction::variety, 1);
    r.require(v.cad.cells.size() == t.variety, counted(name + " variety", v.cad.cells.size(), t.variety));
    auto lv2 = over(p, run, Construction::layered_variety, 2);
    r.require(lv2.cad.cells.size() == t.lv2, counted(name + " lv(2)", lv2.cad.cells.size(), t.lv2));
    auto lv1 = over(p, run, Construction::layered_variety, 1);
    r.require(lv1.cad.cells.size() == t.lv1, counted(name + " lv(1)", lv1.cad.cells.size(), t.lv1));
    if (t.lv1_base) r.require(lv1.cad.base_cells == *t.lv1_base, counted(name + " lv(1) base cells in R^2", lv1.cad.base_cells, *t.lv1_base));
    r.note(name + " " + fixed(seconds_since(s0)) + " s");
  }
  const double secs = seconds_since(t0);
  r.require(secs < 900, "total " + fixed(secs) + " s (budget 900 s)");
  return r;
}

Result criterion5() {
  Result r;
  r.status = Result::Status::skip;
  r.title = "5 piano movers: 64764 1-layered, 101924 lifted variety stage";
  r.note("skipped: the problem formulation is not in the fixture corpus");
  return r;
}

Problem random_problem(std::mt19937& rng, int nvars) {
  const std::vector<std::string> names = {"x", "y", "z"};
  auto order = make_order(std::vector<std::string>(names.begin(), names.begin() + nvars));
  auto pick = [&](bool top) {
    for (;;) {
      auto q = oracle::random_poly(rng, order, 3, nvars == 2 ? 4 : 3, 5);
      if (top && !q.is_constant()) q = squarefree_part(primitive_part(q, q.main_var()));
      if (q.is_constant()) continue;
      if (top && q.main_var() != nvars - 1) continue;
      return q;
    }
  };
  const auto f = pick(true);
  const auto g = pick(false);
  std::string text = "vars: ";
  for (int i = 0; i < nvars; ++i) text += (i ? ", " : "") + names[i];
  text += "\nec: " + f.to_string() + "\nphi: " + f.to_string() + " = 0 /\\ " + g.to_string() + " > 0\n";
  return parse_problem(text);
}

Result criterion6() {
  Result r;
  r.title = "6 properties: layers, recursion, variety membership, grid oracle, index subsets, figure ordering";
  const auto t0 = Clock::now();
  std::mt19937 rng(2014);
  std::map<std::string, std::pair<size_t, size_t>> tally;  // label -> (passed, run)
  size_t skipped = 0;
  auto count = [&](const Check& c) {
    static const std::vector<std::pair<std::string, std::string>> labels = {
        {"equals filtered complete", "(a) layer union equals complete"},
        {"recursive equals batch", "(a) recursive equals batch"},
        {"variety membership", "(b) variety membership"},
        {"grid oracle", "(c) grid oracle"},
        {"index subset", "(d) index subset"},
    };
    if (c.detail.rfind("skipped", 0) == 0) {
      ++skipped;
      return;
    }
    for (const auto& [key, label] : labels) {
      if (c.name.find(key) != std::string::npos) {
        ++tally[label].second;
        if (c.ok) ++tally[label].first;
      }
    }
    if (!c.ok) r.note("failed: " + c.name + ": " + c.detail);
  };

  SuiteOptions no_grid;
  no_grid.grid = false;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_problem(rng, i % 2 == 0 ? 2 : 3);
    bool clean = true;
    for (const auto& c : verify_suite(p, no_grid)) {
      count(c);
      clean = clean && c.ok;
    }
    if (!clean) r.note("on input: " + p.formulas[0].to_string());
  }
  for (const char* name : {"circle_variety.txt", "circle_variety_yx.txt", "circle_layered.txt", "circle_line.txt"}) {
    for (const auto& c : verify_suite(fixture(name))) count(c);
  }
  for (const auto& [label, pr] : tally) r.require(pr.second > 0 && pr.first == pr.second, label + ": " + str(pr.first) + "/" + str(pr.second));
  if (skipped) r.note(str(skipped) + " constructions skipped as not well oriented");

  bool ordered = true;
  const auto table = figure7_table(figure7_params(2), 2, 8);
  for (const auto& row : table.rows) ordered = ordered && row.cad > row.variety && row.variety > row.layered && row.layered > row.lv;
  r.require(ordered && table.rows.size() == 7, "(e) figure ordering cad > variety > layered(1) > lv(1) for n = 2..8 (" + str(table.rows.size()) + " rows)");

  const double secs = seconds_since(t0);
  r.require(secs < 120, "total " + fixed(secs) + " s (budget 120 s)");
  return r;
}

Result criterion7() {
  Result r;
  r.title = "7 nullified constraint: FAIL naming the polynomial; include-stack superset confined to the nullified stack";
  const auto p = fixture("nullified.txt");
  const auto ec = *p.designated_ec();
  double t = 0;
  try {
    timed(p, Construction::variety, Operator::mccallum_ec, 1, t);
    r.require(false, "variety returned without FAIL");
  } catch (const NotWellOriented& e) {
    r.require(e.poly() == ec && e.cell().dim() > 0,
              "FAIL: " + e.poly().to_string() + " vanishes identically over cell " + e.cell().index_string() + " of dimension " +
                  std::to_string(e.cell().dim()));
  }

  auto sup = timed(p, Construction::variety, Operator::mccallum_ec, 1, t, NullificationPolicy::include_stack);
  r.require(sup.cad.superset() && sup.cad.nullified_bases.size() == 1, "include-stack output is marked superset over " +
                                                                          str(sup.cad.nullified_bases.size()) + " base cell(s)");
  size_t extra = 0, stray = 0;
  for (const auto& c : sup.cad.cells) {
    if (c.is_section()) continue;
    ++extra;
    bool inside = false;
    for (const auto& b : sup.cad.nullified_bases) inside = inside || std::equal(b.index.begin(), b.index.end(), c.index.begin());
    if (!inside) ++stray;
  }
  r.require(extra > 0 && stray == 0, str(sup.cad.cells.size()) + " cells, " + str(extra) + " beyond the sections, " + str(stray) +
                                         " of those outside the nullified stack");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<Result()>> all = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7};
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

  size_t unexpected = 0, deviations = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(i + 1)) == only.end()) continue;
    Result res;
    try {
      res = all[i]();
    } catch (const std::exception& e) {
      res.title = std::to_string(i + 1);
      res.require(false, std::string("exception: ") + e.what());
    }
    const char* tag = res.status == Result::Status::pass ? "PASS" : res.status == Result::Status::skip ? "SKIP" : "FAIL";
    std::cout << tag << " " << res.title << '\n';
    for (const auto& d : res.details) std::cout << "     " << d << '\n';
    if (res.status == Result::Status::fail) {
      if (res.expected_deviation) {
        ++deviations;
        std::cout << "     expected deviation: cause reproduced in this run\n";
      } else {
        ++unexpected;
      }
    }
    std::cout << std::flush;
  }
  std::cout << unexpected << " unexpected failure(s), " << deviations << " expected deviation(s)\n";
  return unexpected == 0 ? 0 : 1;
}
