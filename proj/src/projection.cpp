#include "subcad/projection.hpp"

#include "subcad/algebra.hpp"

#include <algorithm>

namespace subcad {

std::string to_string(Operator op) {
  switch (op) {
    case Operator::collins_hong: return "collins_hong";
    case Operator::mccallum: return "mccallum";
    case Operator::mccallum_ec: return "mccallum_ec";
    case Operator::tticad: return "tticad";
  }
  return "?";
}

Operator parse_operator(const std::string& name) {
  if (name == "collins_hong") return Operator::collins_hong;
  if (name == "mccallum") return Operator::mccallum;
  if (name == "mccallum_ec" || name == "ec") return Operator::mccallum_ec;
  if (name == "tticad") return Operator::tticad;
  throw std::invalid_argument("unknown operator '" + name + "'");
}

std::string to_string(CoefficientRule rule) {
  switch (rule) {
    case CoefficientRule::all_nonconstant: return "all";
    case CoefficientRule::until_constant: return "until_constant";
    case CoefficientRule::finite_zeros: return "finite_zeros";
  }
  return "?";
}

CoefficientRule parse_coefficient_rule(const std::string& name) {
  if (name == "all") return CoefficientRule::all_nonconstant;
  if (name == "until_constant") return CoefficientRule::until_constant;
  if (name == "finite_zeros") return CoefficientRule::finite_zeros;
  throw std::invalid_argument("unknown coefficient rule '" + name + "'");
}

bool ProjectionRun::is_ec(const Polynomial& p) const { return std::find(ec.begin(), ec.end(), p) != ec.end(); }

size_t ProjectionRun::total_size() const {
  size_t n = 0;
  for (const auto& t : tiers) n += t.size();
  return n;
}

namespace {

void push_nonconstant(std::vector<Polynomial>& out, const Polynomial& p) {
  if (!p.is_constant()) out.push_back(p);
}

std::vector<Polynomial> normalise(const std::vector<Polynomial>& raw) { return squarefree_basis(raw); }

void check_main_var(const std::vector<Polynomial>& a, int v) {
  for (const auto& f : a) {
    if (f.main_var() != v) throw ProjectionError("projection input " + f.to_string() + " does not have the projected main variable");
  }
}

std::vector<Polynomial> cross_resultants(const std::vector<Polynomial>& e, const std::vector<Polynomial>& g, int v) {
  std::vector<Polynomial> out;
  for (const auto& f : e) {
    for (const auto& h : g) {
      if (f == h) continue;
      push_nonconstant(out, resultant(f, h, v));
    }
  }
  return out;
}

std::vector<Polynomial> ec_set(const std::vector<Polynomial>& a, const std::vector<Polynomial>& e, int v,
                               const ProjectionOptions& opts) {
  if (e.empty()) throw ProjectionError("equational constraint set is empty");
  std::vector<Polynomial> out = mccallum_set(e, v, opts);
  std::vector<Polynomial> rest;
  for (const auto& g : a) {
    if (std::find(e.begin(), e.end(), g) == e.end()) rest.push_back(g);
  }
  for (auto& r : cross_resultants(e, rest, v)) out.push_back(std::move(r));
  return out;
}

std::vector<Polynomial> tticad_set(const std::vector<FormulaBasis>& phis, int v, const ProjectionOptions& opts) {
  std::vector<Polynomial> out;
  for (const auto& phi : phis) {
    for (auto& r : ec_set(phi.a, phi.e, v, opts)) out.push_back(std::move(r));
  }
  for (size_t i = 0; i < phis.size(); ++i) {
    for (size_t j = i + 1; j < phis.size(); ++j) {
      for (auto& r : cross_resultants(phis[i].e, phis[j].e, v)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Polynomial> dividing(const std::vector<Polynomial>& basis, const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.is_zero()) return out;
  for (const auto& b : basis) {
    if (exact_divide(f, b)) out.push_back(b);
  }
  return out;
}

// The factors of f all have main variable v.
void require_factors_in(const Polynomial& f, int v, const VarOrder& order) {
  if (f.main_var() != v || !content(f, v).is_constant()) {
    throw ProjectionError("equational constraint " + f.to_string() + " has a factor whose main variable is not " +
                          order.name(v));
  }
}

}  // namespace

std::vector<Polynomial> mccallum_set(const std::vector<Polynomial>& a, int v, const ProjectionOptions& opts) {
  std::vector<Polynomial> out;
  for (const auto& f : a) {
    const std::vector<Polynomial> cs = coefficients(f, v);
    if (opts.leading_coeff_only) {
      push_nonconstant(out, cs.front());
    } else {
      Polynomial common;
      for (const auto& c : cs) {
        if (c.is_zero()) continue;
        if (c.is_constant()) {
          if (opts.coefficients == CoefficientRule::all_nonconstant) continue;
          break;
        }
        out.push_back(c);
        if (opts.coefficients == CoefficientRule::finite_zeros) {
          // In one lower variable a nonzero coefficient has finitely many
          // zeros; in two, coprime curves meet in finitely many points.
          if (v == 1) break;
          common = common.order() ? gcd(common, c) : c.canonical();
          if (v == 2 && common.is_constant()) break;
        }
      }
    }
    if (f.degree(v) >= 2) push_nonconstant(out, discriminant(f, v));
  }
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) push_nonconstant(out, resultant(a[i], a[j], v));
  }
  return out;
}

std::vector<Polynomial> proj_mccallum(const std::vector<Polynomial>& a, int v, const ProjectionOptions& opts) {
  check_main_var(a, v);
  return normalise(mccallum_set(a, v, opts));
}

std::vector<Polynomial> proj_ec(const std::vector<Polynomial>& a, const std::vector<Polynomial>& e, int v,
                                const ProjectionOptions& opts) {
  check_main_var(e, v);
  // An element of A below v meets each f in E in res_v(f, g) = g^deg(f).
  std::vector<Polynomial> top, below;
  for (const auto& g : a) {
    if (g.main_var() > v) check_main_var({g}, v);
    (g.main_var() == v ? top : below).push_back(g);
  }
  std::vector<Polynomial> raw = ec_set(top, e, v, opts);
  for (auto& g : below) {
    if (!g.is_constant()) raw.push_back(std::move(g));
  }
  return normalise(raw);
}

std::vector<Polynomial> proj_tticad(const std::vector<FormulaBasis>& phis, int v, const ProjectionOptions& opts) {
  for (const auto& phi : phis) {
    check_main_var(phi.a, v);
    check_main_var(phi.e, v);
  }
  return normalise(tticad_set(phis, v, opts));
}

ProjectionRun projection_phase(const ProjectionInput& input, Operator op, const ProjectionOptions& opts) {
  if (op == Operator::collins_hong) {
    throw ProjectionError("the collins_hong operator is not available; use mccallum");
  }
  const VarOrderPtr& order = input.order;
  const int n = order->size();
  ProjectionRun run;
  run.order = order;
  run.op = op;
  run.options = opts;
  run.tiers.assign(static_cast<size_t>(n), {});

  std::vector<Polynomial> pending = input.polys;
  if (input.ec) pending.push_back(*input.ec);
  for (const auto& phi : input.formulas) {
    pending.insert(pending.end(), phi.polys.begin(), phi.polys.end());
    pending.push_back(phi.ec);
  }

  if (op == Operator::mccallum_ec) {
    if (!input.ec) throw ProjectionError("mccallum_ec needs a designated equational constraint");
    require_factors_in(*input.ec, n - 1, *order);
  }
  if (op == Operator::tticad) {
    if (input.formulas.empty()) throw ProjectionError("tticad needs at least one formula");
    for (const auto& phi : input.formulas) require_factors_in(phi.ec, n - 1, *order);
  }
  int ec_var = -1;
  if (input.ec && op != Operator::tticad) {
    ec_var = input.ec->main_var();
    if (ec_var < 0) throw ProjectionError("equational constraint is constant");
    require_factors_in(*input.ec, ec_var, *order);
  }

  for (int v = n - 1; v >= 0; --v) {
    std::vector<Polynomial> here;
    std::vector<Polynomial> lower;
    for (auto& p : pending) {
      if (p.is_constant()) continue;
      (p.main_var() == v ? here : lower).push_back(std::move(p));
    }
    for (auto& b : squarefree_basis(here)) {
      (b.main_var() == v ? run.tiers[static_cast<size_t>(v)] : lower).push_back(std::move(b));
    }
    pending = std::move(lower);
    std::vector<Polynomial>& tier = run.tiers[static_cast<size_t>(v)];
    sort_unique(tier);

    if (v == ec_var) {
      run.ec = dividing(tier, *input.ec);
      run.ec_level = v;
    }
    if (v == 0) break;

    std::vector<Polynomial> projected;
    if (v == n - 1 && op == Operator::mccallum_ec) {
      projected = ec_set(tier, run.ec, v, opts);
    } else if (v == n - 1 && op == Operator::tticad) {
      std::vector<FormulaBasis> phis;
      for (const auto& phi : input.formulas) {
        FormulaBasis fb;
        for (const auto& f : phi.polys) {
          for (auto& b : dividing(tier, f)) fb.a.push_back(std::move(b));
        }
        fb.e = dividing(tier, phi.ec);
        for (const auto& b : fb.e) fb.a.push_back(b);
        sort_unique(fb.a);
        run.ec_groups.push_back(fb.e);
        run.ec.insert(run.ec.end(), fb.e.begin(), fb.e.end());
        phis.push_back(std::move(fb));
      }
      sort_unique(run.ec);
      run.ec_level = v;
      projected = tticad_set(phis, v, opts);
    } else {
      projected = mccallum_set(tier, v, opts);
    }
    for (auto& p : projected) pending.push_back(std::move(p));
  }
  return run;
}

}  // namespace subcad
