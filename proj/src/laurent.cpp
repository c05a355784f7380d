#include "fibtop/laurent.hpp"

#include "fibtop/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace fibtop {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("VarSet: empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("VarSet: duplicate variable " + n);
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Term-level helpers

class LaurentAccess {
public:
  static LaurentPoly make(VarSet vars, LaurentPoly::TermMap terms) {
    LaurentPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }
  static LaurentPoly::TermMap& terms(LaurentPoly& p) { return p.terms_; }
};

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents sub_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

void accumulate(LaurentPoly::TermMap& terms, const Exponents& e, const Integer& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// Operands over different variable sets are only compatible when one of them
// lives over the empty set (an integer constant).
VarSet common_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars()) return a.vars();
  if (a.vars().size() == 0) return b.vars();
  if (b.vars().size() == 0) return a.vars();
  throw std::invalid_argument("LaurentPoly: variable set mismatch");
}

Exponents min_exponents(const LaurentPoly& p) {
  Exponents m(p.vars().size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponents max_exponents(const LaurentPoly& p) {
  Exponents m(p.vars().size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponents negated(Exponents e) {
  for (auto& x : e) x = -x;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(VarSet vars, const Integer& c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.emplace(Exponents(vars.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exponents exps, const Integer& c) {
  if (exps.size() != vars.size())
    throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, std::string_view name, std::int64_t power) {
  auto idx = vars.index_of(name);
  if (!idx) throw std::invalid_argument("LaurentPoly: unknown variable " + std::string(name));
  Exponents e(vars.size(), 0);
  e[*idx] = power;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, const TermMap& terms) {
  LaurentPoly p(vars);
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size())
      throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    if (c != 0) p.terms_.emplace(e, c);
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Integer LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("min_degree of zero polynomial");
  std::int64_t m = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

std::int64_t LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("max_degree of zero polynomial");
  std::int64_t m = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

bool LaurentPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& t) { return t.first[var] != 0; });
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != vars_.size()) throw std::invalid_argument("shifted: length mismatch");
  TermMap out;
  for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), add_exps(e, shift), c);
  return LaurentAccess::make(vars_, std::move(out));
}

LaurentPoly LaurentPoly::embed(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto idx = target.index_of(vars_.name(i));
    if (idx) {
      where[i] = *idx;
    } else if (involves(i)) {
      throw std::invalid_argument("embed: variable " + vars_.name(i) + " missing from target");
    } else {
      where[i] = target.size();
    }
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (where[i] < target.size()) f[where[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  return LaurentAccess::make(target, std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("unit_inverse: polynomial is not a unit");
  const auto& [e, c] = *terms_.begin();
  return monomial(vars_, negated(e), c);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.name(i);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    Integer mag = abs(c);
    std::string body;
    if (mono.empty()) body = mag.get_str();
    else if (mag == 1) body = mono;
    else body = mag.get_str() + '*' + mono;
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  VarSet v = common_vars(*this, o);
  if (!(vars_ == v)) *this = embed(v);
  if (o.vars_ == v) {
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  } else {
    for (const auto& [e, c] : o.embed(v).terms_) accumulate(terms_, e, c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  VarSet v = common_vars(a, b);
  if (!(a.vars() == v)) return a.embed(v) * b;
  if (!(b.vars() == v)) return a * b.embed(v);
  LaurentPoly::TermMap out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) accumulate(out, add_exps(ea, eb), ca * cb);
  }
  return LaurentAccess::make(v, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  // Constants compare across variable sets only against the empty set.
  if (a.vars_.size() == 0 || b.vars_.size() == 0) {
    if (!a.is_constant() || !b.is_constant()) return false;
    return a.coefficient_sum() == b.coefficient_sum();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const VarSet& vars) : s_(text), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  LaurentPoly term() {
    LaurentPoly acc = signed_factor();
    while (eat('*')) acc *= signed_factor();
    return acc;
  }
  LaurentPoly signed_factor() {
    if (eat('-')) return -signed_factor();
    if (eat('+')) return signed_factor();
    return power();
  }
  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    Integer n = integer();
    if (!n.fits_uint_p()) fail("exponent too large");
    unsigned k = static_cast<unsigned>(n.get_ui());
    if (!neg) return base.pow(k);
    if (!base.is_unit()) fail("negative power of a non-unit");
    return base.unit_inverse().pow(k);
  }
  LaurentPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return LaurentPoly::constant(vars_, integer());
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!vars_.index_of(name)) fail("unknown variable '" + name + "'");
      return LaurentPoly::variable(vars_, name);
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }
  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, const VarSet& vars) {
  return PolyParser(text, vars).run();
}

// ---------------------------------------------------------------------------
// Exact division
//
// Lexicographic order is a monomial order on Z^n, so the leading term of a
// product is the product of leading terms. The quotient's exponents are boxed
// in by the extreme degrees of the operands, which bounds the loop.

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
  VarSet v = common_vars(p, d);
  if (p.is_zero()) return LaurentPoly(v);
  const LaurentPoly pp = p.embed(v);
  const LaurentPoly dd = d.embed(v);

  const Exponents lo = sub_exps(min_exponents(pp), min_exponents(dd));
  const Exponents hi = sub_exps(max_exponents(pp), max_exponents(dd));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (lo[i] > hi[i]) return std::nullopt;

  const auto& [lead_e, lead_c] = *dd.terms().rbegin();
  LaurentPoly::TermMap rem = pp.terms();
  LaurentPoly::TermMap quot;
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    Exponents qe = sub_exps(re, lead_e);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer qc = rc / lead_c;
    for (const auto& [de, dc] : dd.terms()) accumulate(rem, add_exps(qe, de), -qc * dc);
    quot.emplace(std::move(qe), std::move(qc));
  }
  return LaurentAccess::make(v, std::move(quot));
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw std::domain_error("exact_div: " + p.to_string() + " is not divisible by " + d.to_string());
  return *std::move(q);
}

// ---------------------------------------------------------------------------
// Normalization

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("normalize_unit: zero polynomial");
  LaurentPoly q = p.shifted(negated(min_exponents(p)));
  if (q.terms().begin()->second < 0) q = -q;
  return q;
}

bool are_associates(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  VarSet v = common_vars(p, q);
  return normalize_unit(p.embed(v)) == normalize_unit(q.embed(v));
}

Symmetrized symmetrize(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) throw std::domain_error("symmetrize: zero polynomial");
  auto idx = p.vars().index_of(var);
  if (!idx) throw std::invalid_argument("symmetrize: unknown variable " + std::string(var));
  const std::size_t k = *idx;

  Exponents shift = negated(min_exponents(p));
  const std::int64_t lo = p.min_degree(k);
  const std::int64_t hi = p.max_degree(k);
  const std::int64_t span = hi - lo;
  Symmetrized out;
  out.asymmetric_span = (span % 2) != 0;
  shift[k] = -(lo + span / 2);
  LaurentPoly q = p.shifted(shift);

  // Sign: the lexicographically largest among the terms of top degree in var.
  const Exponents* top = nullptr;
  Integer top_c;
  for (const auto& [e, c] : q.terms()) {
    if (!top || e[k] > (*top)[k] || (e[k] == (*top)[k] && e > *top)) {
      top = &e;
      top_c = c;
    }
  }
  out.poly = top_c < 0 ? -q : q;
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments,
                       const VarSet& target) {
  const VarSet& src = p.vars();
  std::vector<LaurentPoly> images;
  images.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = assignments.find(src.name(i));
    if (it != assignments.end()) {
      images.push_back(it->second.embed(target));
    } else if (target.index_of(src.name(i))) {
      images.push_back(LaurentPoly::variable(target, src.name(i)));
    } else if (!p.involves(i)) {
      images.push_back(LaurentPoly::constant(target, 1));
    } else {
      throw std::invalid_argument("substitute: no image for variable " + src.name(i));
    }
  }

  std::vector<std::map<std::int64_t, LaurentPoly>> cache(src.size());
  auto power_of = [&](std::size_t i, std::int64_t e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    LaurentPoly v;
    if (e >= 0) {
      v = images[i].pow(static_cast<unsigned>(e));
    } else {
      if (!images[i].is_unit())
        throw std::domain_error("substitute: negative power of non-unit image for " + src.name(i));
      v = images[i].unit_inverse().pow(static_cast<unsigned>(-e));
    }
    return cache[i].emplace(e, std::move(v)).first->second;
  };

  LaurentPoly result(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    result += term;
  }
  return result;
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments) {
  return substitute(p, assignments, p.vars());
}

// ---------------------------------------------------------------------------
// GCD
//
// Polynomials handed to the recursive routine have nonnegative exponents.
// A polynomial is viewed as univariate in one occurring variable with
// coefficients that do not involve it; content and primitive parts are taken
// recursively and the primitive parts are combined by the subresultant
// pseudo-remainder sequence.

namespace {

using Univariate = std::vector<LaurentPoly>;  // index = degree in the main variable

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

Univariate split(const LaurentPoly& p, std::size_t var) {
  Univariate out;
  for (const auto& [e, c] : p.terms()) {
    auto d = static_cast<std::size_t>(e[var]);
    if (out.size() <= d) out.resize(d + 1, LaurentPoly(p.vars()));
    Exponents f = e;
    f[var] = 0;
    LaurentAccess::terms(out[d]).emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly join(const Univariate& u, std::size_t var, const VarSet& vars) {
  LaurentPoly::TermMap out;
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& [e, c] : u[d].terms()) {
      Exponents f = e;
      f[var] = static_cast<std::int64_t>(d);
      out.emplace(std::move(f), c);
    }
  }
  return LaurentAccess::make(vars, std::move(out));
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

LaurentPoly content(const Univariate& u) {
  LaurentPoly g;
  bool any = false;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = any ? poly_gcd(g, c) : c;
    any = true;
    if (g.is_constant() && abs(g.coefficient_sum()) == 1) break;
  }
  return g;
}

Univariate divide_all(const Univariate& u, const LaurentPoly& d) {
  Univariate out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(exact_div(c, d));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r
Univariate pseudo_remainder(Univariate r, const Univariate& b) {
  const LaurentPoly& lc = b.back();
  const std::size_t db = b.size() - 1;
  long pending = static_cast<long>(r.size()) - static_cast<long>(b.size()) + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    LaurentPoly s = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= s * b[j];
    trim(r);
    --pending;
  }
  if (pending > 0) {
    LaurentPoly f = lc.pow(static_cast<unsigned>(pending));
    for (auto& c : r) c *= f;
  }
  return r;
}

Univariate subresultant_gcd(Univariate a, Univariate b, const VarSet& vars) {
  if (a.size() < b.size()) std::swap(a, b);
  LaurentPoly g = LaurentPoly::constant(vars, 1);
  LaurentPoly h = LaurentPoly::constant(vars, 1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    Univariate r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (r.size() == 1) return Univariate{LaurentPoly::constant(vars, 1)};
    a = std::move(b);
    b = divide_all(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const VarSet& vars = a.vars();
  std::optional<std::size_t> main;
  for (std::size_t i = 0; i < vars.size() && !main; ++i)
    if (a.involves(i) || b.involves(i)) main = i;
  if (!main) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.coefficient_sum().get_mpz_t(), b.coefficient_sum().get_mpz_t());
    return LaurentPoly::constant(vars, g);
  }
  Univariate ua = split(a, *main);
  Univariate ub = split(b, *main);
  LaurentPoly ca = content(ua);
  LaurentPoly cb = content(ub);
  LaurentPoly c = poly_gcd(ca, cb);
  if (ua.size() == 1 || ub.size() == 1) return c;  // one side is free of the main variable
  Univariate g = subresultant_gcd(divide_all(ua, ca), divide_all(ub, cb), vars);
  g = divide_all(g, content(g));
  return c * join(g, *main, vars);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd: both arguments are zero");
  VarSet v = common_vars(p, q);
  if (p.is_zero()) return normalize_unit(q.embed(v));
  if (q.is_zero()) return normalize_unit(p.embed(v));
  LaurentPoly a = normalize_unit(p.embed(v));
  LaurentPoly b = normalize_unit(q.embed(v));
  return normalize_unit(poly_gcd(a, b));
}

LaurentPoly gcd_many(const std::vector<LaurentPoly>& polys) {
  std::optional<LaurentPoly> acc;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    acc = acc ? gcd(*acc, p) : normalize_unit(p);
    if (acc->is_constant() && acc->coefficient_sum() == 1) break;
  }
  if (!acc) throw std::domain_error("gcd_many: every entry is zero");
  return *acc;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

LaurentPoly cofactor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                         std::vector<std::size_t> cols) {
  const std::size_t n = rows.size();
  if (n == 0) return LaurentPoly::constant(m.vars(), 1);
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2)
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  LaurentPoly acc(m.vars());
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly& a = m(rows[0], cols[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    LaurentPoly term = a * cofactor_det(m, sub_rows, sub_cols);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

LaurentPoly bareiss_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(rows[i], cols[j]);

  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(m.vars(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate entries small.
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (!piv || a[i][k].term_count() < a[*piv][k].term_count()) piv = i;
    }
    if (!piv) return LaurentPoly(m.vars());
    if (*piv != k) {
      std::swap(a[*piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a[i][j] * a[k][k];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = exact_div(num, prev);
      }
      a[i][k] = LaurentPoly(m.vars());
    }
    prev = a[k][k];
  }
  LaurentPoly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

LaurentPoly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor_det: non-square selection");
  for (auto r : rows)
    if (r >= m.rows()) throw std::out_of_range("minor_det: row index out of range");
  for (auto c : cols)
    if (c >= m.cols()) throw std::out_of_range("minor_det: column index out of range");
  if (rows.size() <= 4) return cofactor_det(m, rows, cols);
  return bareiss_det(m, rows, cols);
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return minor_det(m, idx, idx);
}

namespace {

// Advance a strictly increasing index combination; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

LaurentPoly elementary_ideal_gcd(const PolyMatrix& m, std::size_t k) {
  const std::size_t n = m.cols();
  if (k >= n) return LaurentPoly::constant(m.vars(), 1);
  const std::size_t size = n - k;
  if (size > m.rows()) return LaurentPoly(m.vars());

  std::optional<LaurentPoly> acc;
  auto rows = first_combination(size);
  do {
    auto cols = first_combination(size);
    do {
      LaurentPoly d = minor_det(m, rows, cols);
      if (d.is_zero()) continue;
      acc = acc ? gcd(*acc, d) : normalize_unit(d);
      if (acc->is_constant() && acc->coefficient_sum() == 1) return *acc;
    } while (next_combination(cols, n));
  } while (next_combination(rows, m.rows()));
  return acc ? *acc : LaurentPoly(m.vars());
}

}  // namespace fibtop
