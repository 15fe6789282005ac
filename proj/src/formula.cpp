#include "subcad/formula.hpp"

#include "subcad/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace subcad {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::ne: return "!=";
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
  }
  return "?";
}

bool holds(Relation r, int sign) {
  switch (r) {
    case Relation::eq: return sign == 0;
    case Relation::ne: return sign != 0;
    case Relation::lt: return sign < 0;
    case Relation::le: return sign <= 0;
    case Relation::gt: return sign > 0;
    case Relation::ge: return sign >= 0;
  }
  return false;
}

Formula Formula::atom(Polynomial p, Relation r) {
  Formula f;
  f.kind = Kind::atom;
  f.poly = std::move(p);
  f.rel = r;
  return f;
}

Formula Formula::both(std::vector<Formula> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Formula f;
  f.kind = Kind::conj;
  f.children = std::move(parts);
  return f;
}

Formula Formula::either(std::vector<Formula> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Formula f;
  f.kind = Kind::disj;
  f.children = std::move(parts);
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::neg;
  f.children.push_back(std::move(g));
  return f;
}

namespace {

void collect(const Formula& f, std::vector<Polynomial>& out) {
  if (f.kind == Formula::Kind::atom) {
    if (!f.poly.is_constant() && std::find(out.begin(), out.end(), f.poly) == out.end()) out.push_back(f.poly);
    return;
  }
  for (const auto& c : f.children) collect(c, out);
}

std::string wrap(const Formula& f) {
  const bool compound = f.kind == Formula::Kind::conj || f.kind == Formula::Kind::disj;
  return compound ? "(" + f.to_string() + ")" : f.to_string();
}

}  // namespace

std::vector<Polynomial> Formula::polynomials() const {
  std::vector<Polynomial> out;
  collect(*this, out);
  return out;
}

std::string Formula::to_string() const {
  switch (kind) {
    case Kind::truth: return "true";
    case Kind::falsity: return "false";
    case Kind::atom: return poly.to_string() + subcad::to_string(rel) + "0";
    case Kind::neg: {
      const Formula& c = children.front();
      return c.kind == Kind::neg ? "~" + c.to_string() : "~" + wrap(c);
    }
    case Kind::conj:
    case Kind::disj: {
      std::string s;
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) s += kind == Kind::conj ? " /\\ " : " \\/ ";
        s += wrap(children[i]);
      }
      return s;
    }
  }
  return "?";
}

namespace {

class FormulaParser {
 public:
  FormulaParser(const std::string& text, size_t pos, const VarOrderPtr& order, int line)
      : text_(text), order_(order), pos_(pos), line_(line) {}

  size_t pos() const { return pos_; }

  Formula formula() {
    std::vector<Formula> parts = {conjunction()};
    while (eat("\\/")) parts.push_back(conjunction());
    return Formula::either(std::move(parts));
  }

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ParseError(msg, line_, static_cast<int>(at) + 1);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  bool eat(const std::string& token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  bool eat_word(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    const size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  Formula conjunction() {
    std::vector<Formula> parts = {unary()};
    while (eat("/\\")) parts.push_back(unary());
    return Formula::both(std::move(parts));
  }

  Formula unary() {
    skip_ws();
    if (eat("~")) return Formula::negation(unary());
    if (eat_word("true")) return Formula{};
    if (eat_word("false")) {
      Formula f;
      f.kind = Formula::Kind::falsity;
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] == '(') {
      // Either a parenthesised formula or an atom whose left side starts
      // with a parenthesised polynomial.
      const size_t start = pos_;
      try {
        return atom();
      } catch (const ParseError&) {
        pos_ = start + 1;
      }
      Formula f = formula();
      if (!eat(")")) fail("expected ')'", pos_);
      return f;
    }
    return atom();
  }

  std::optional<Relation> relation() {
    skip_ws();
    static const std::pair<const char*, Relation> table[] = {
        {"<=", Relation::le}, {">=", Relation::ge}, {"!=", Relation::ne}, {"==", Relation::eq},
        {"=", Relation::eq},  {"<", Relation::lt},  {">", Relation::gt},
    };
    for (const auto& [tok, rel] : table) {
      if (eat(tok)) return rel;
    }
    return std::nullopt;
  }

  Polynomial polynomial() {
    skip_ws();
    try {
      return parse_polynomial_prefix(text_, pos_, order_);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_, e.column());
    }
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a formula", pos_);
    Polynomial lhs = polynomial();
    const auto rel = relation();
    if (!rel) fail("expected a relation (= != < <= > >=)", pos_);
    Polynomial rhs = polynomial();
    return Formula::atom(lhs - rhs, *rel);
  }

  const std::string& text_;
  VarOrderPtr order_;
  size_t pos_;
  int line_;
};

Formula parse_formula_at(const std::string& text, size_t& pos, const VarOrderPtr& order, int line) {
  FormulaParser parser(text, pos, order, line);
  Formula f = parser.formula();
  parser.skip_ws();
  pos = parser.pos();
  return f;
}

Polynomial parse_polynomial_at(const std::string& text, size_t pos, const VarOrderPtr& order, int line) {
  try {
    Polynomial p = parse_polynomial_prefix(text, pos, order);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) throw ParseError("unexpected '" + std::string(1, text[pos]) + "'", line, static_cast<int>(pos) + 1);
    return p;
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, e.column());
  }
}

}  // namespace

Formula parse_formula(const std::string& text, const VarOrderPtr& order, int line) {
  size_t pos = 0;
  Formula f = parse_formula_at(text, pos, order, line);
  if (pos < text.size()) throw ParseError("unexpected '" + std::string(1, text[pos]) + "'", line, static_cast<int>(pos) + 1);
  return f;
}

bool evaluate(const Formula& phi, const std::function<int(const Polynomial&)>& sign) {
  switch (phi.kind) {
    case Formula::Kind::truth: return true;
    case Formula::Kind::falsity: return false;
    case Formula::Kind::atom: return holds(phi.rel, phi.poly.is_constant() ? subcad::sign(phi.poly.is_zero() ? Rational(0) : phi.poly.constant_value()) : sign(phi.poly));
    case Formula::Kind::neg: return !evaluate(phi.children.front(), sign);
    case Formula::Kind::conj:
      return std::all_of(phi.children.begin(), phi.children.end(), [&](const Formula& c) { return evaluate(c, sign); });
    case Formula::Kind::disj:
      return std::any_of(phi.children.begin(), phi.children.end(), [&](const Formula& c) { return evaluate(c, sign); });
  }
  return false;
}

bool evaluate_on_cell(const Formula& phi, const Cell& c) {
  std::vector<std::pair<Polynomial, int>> cache;
  return evaluate(phi, [&](const Polynomial& p) {
    for (const auto& [q, s] : cache) {
      if (q == p) return s;
    }
    const int s = sign_at(p, c.sample);
    cache.emplace_back(p, s);
    return s;
  });
}

bool implies_ec(const Formula& phi, const Polynomial& f) {
  switch (phi.kind) {
    case Formula::Kind::atom:
      return phi.rel == Relation::eq && !phi.poly.is_constant() && exact_divide(f, phi.poly).has_value();
    case Formula::Kind::conj:
      return std::any_of(phi.children.begin(), phi.children.end(), [&](const Formula& c) { return implies_ec(c, f); });
    case Formula::Kind::disj:
      return std::all_of(phi.children.begin(), phi.children.end(), [&](const Formula& c) { return implies_ec(c, f); });
    default:
      return false;
  }
}

std::vector<Polynomial> explicit_ecs(const Formula& phi) {
  std::vector<Polynomial> out;
  auto take = [&](const Formula& a) {
    if (a.kind == Formula::Kind::atom && a.rel == Relation::eq && !a.poly.is_constant()) out.push_back(a.poly);
  };
  if (phi.kind == Formula::Kind::conj) {
    for (const auto& c : phi.children) take(c);
  } else {
    take(phi);
  }
  return out;
}

std::optional<Polynomial> detect_ec(const Formula& phi) {
  const auto direct = explicit_ecs(phi);
  if (direct.size() == 1) return direct.front();
  if (!direct.empty() || phi.kind != Formula::Kind::disj) return std::nullopt;
  std::optional<Polynomial> product;
  for (const auto& branch : phi.children) {
    const auto ecs = explicit_ecs(branch);
    if (ecs.size() != 1) return std::nullopt;
    product = product ? *product * ecs.front() : ecs.front();
  }
  return product;
}

Formula Problem::combined() const {
  return Formula::either(formulas);
}

std::optional<Polynomial> Problem::designated_ec() const {
  if (ec) return ec;
  if (ec_auto) return detect_ec(combined());
  return std::nullopt;
}

std::optional<Polynomial> Problem::formula_ec(size_t i) const {
  if (formula_ecs.at(i)) return formula_ecs[i];
  return detect_ec(formulas.at(i));
}

std::vector<Polynomial> Problem::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& f : formulas) {
    for (auto& p : f.polynomials()) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

size_t skip_spaces(const std::string& s, size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Problem prob;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, 1);
    const std::string key = trim(line.substr(0, colon));
    const size_t body = skip_spaces(line, colon + 1);
    if (key == "vars") {
      if (prob.order) throw ParseError("vars declared twice", lineno, 1);
      std::vector<std::string> names;
      std::string rest = line.substr(body);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream ns(rest);
      for (std::string n; ns >> n;) {
        if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
          throw ParseError("bad variable name '" + n + "'", lineno, static_cast<int>(line.find(n, body)) + 1);
        }
        names.push_back(n);
      }
      try {
        prob.order = make_order(names);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), lineno, static_cast<int>(body) + 1);
      }
      continue;
    }
    if (!prob.order) throw ParseError("'vars:' must come first", lineno, 1);
    if (key == "ec") {
      if (trim(line.substr(body)) == "auto") {
        prob.ec_auto = true;
      } else {
        prob.ec = parse_polynomial_at(line, body, prob.order, lineno);
      }
    } else if (key == "phi") {
      size_t pos = body;
      Formula f = parse_formula_at(line, pos, prob.order, lineno);
      std::optional<Polynomial> ec;
      if (pos < line.size() && line[pos] == ';') {
        pos = skip_spaces(line, pos + 1);
        if (line.compare(pos, 3, "ec=") != 0) throw ParseError("expected 'ec=' after ';'", lineno, static_cast<int>(pos) + 1);
        ec = parse_polynomial_at(line, pos + 3, prob.order, lineno);
        if (!implies_ec(f, *ec)) {
          throw ParseError("ec " + ec->to_string() + " is not implied by the formula", lineno, static_cast<int>(pos) + 1);
        }
      } else if (pos < line.size()) {
        throw ParseError("unexpected '" + std::string(1, line[pos]) + "'", lineno, static_cast<int>(pos) + 1);
      }
      prob.formulas.push_back(std::move(f));
      prob.formula_ecs.push_back(std::move(ec));
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (!prob.order) throw ParseError("missing 'vars:' line", lineno, 1);
  if (prob.formulas.empty()) throw ParseError("no 'phi:' line", lineno, 1);
  if (prob.ec && !implies_ec(prob.combined(), *prob.ec)) {
    throw ParseError("ec " + prob.ec->to_string() + " is not implied by the formula", lineno, 1);
  }
  return prob;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string to_string(const Problem& p) {
  std::string s = "vars: ";
  for (int i = 0; i < p.order->size(); ++i) s += (i ? ", " : "") + p.order->name(i);
  s += "\n";
  if (p.ec) s += "ec: " + p.ec->to_string() + "\n";
  if (p.ec_auto) s += "ec: auto\n";
  for (size_t i = 0; i < p.formulas.size(); ++i) {
    s += "phi: " + p.formulas[i].to_string();
    if (p.formula_ecs[i]) s += " ; ec=" + p.formula_ecs[i]->to_string();
    s += "\n";
  }
  return s;
}

}  // namespace subcad
