#include "fibtop/torus3.hpp"

#include "fibtop/errors.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace fibtop {

// ---------------------------------------------------------------------------
// Presentations

GroupPresentation GroupPresentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  GroupPresentation p;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_gens) {
      auto colon = line.find(':');
      std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
      head.erase(0, head.find_first_not_of(" \t"));
      head.erase(head.find_last_not_of(" \t") + 1);
      if (head != "gens") throw ParseError("expected 'gens:' header", lineno);
      std::istringstream g(line.substr(colon + 1));
      std::vector<std::string> names;
      std::string tok;
      while (g >> tok) {
        if (tok.find('^') != std::string::npos) throw ParseError("bad generator name '" + tok + "'", lineno);
        names.push_back(tok);
      }
      try {
        p.generators = Alphabet(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
      have_gens = true;
      continue;
    }
    try {
      p.relators.push_back(p.generators.parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' header");
  return p;
}

std::string GroupPresentation::to_text() const {
  std::string out = "gens:";
  for (const auto& n : generators.names()) out += ' ' + n;
  out += '\n';
  for (const Word& r : relators) out += generators.format(r) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Group ring

GroupRingElem GroupRingElem::of(const Word& w, const Integer& c) {
  GroupRingElem e;
  if (c != 0) e.terms_.emplace(w, c);
  return e;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  GroupRingElem neg = o;
  for (auto& [w, c] : neg.terms_) c = -c;
  return *this += neg;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out += GroupRingElem::of(wa * wb, ca * cb);
  return out;
}

std::string GroupRingElem::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    std::string body;
    if (w.empty()) body = mag.get_str();
    else if (mag == 1) body = alphabet.format(w);
    else body = mag.get_str() + ' ' + alphabet.format(w);
    if (first) out += (c < 0 ? "- " : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

GroupRingElem fox_derivative(const Word& w, std::size_t gen) {
  GroupRingElem d;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) d += GroupRingElem::of(prefix);
      else d -= GroupRingElem::of(prefix * Word::generator(gen, -1));
    }
    prefix = prefix * Word::generator(l.gen, l.exp);
  }
  return d;
}

GroupRingElem fox_derivative(const Word& w, std::string_view gen, const Alphabet& alphabet) {
  auto idx = alphabet.index_of(gen);
  if (!idx) throw ParseError("unknown generator '" + std::string(gen) + "'");
  return fox_derivative(w, *idx);
}

// ---------------------------------------------------------------------------
// Abelianization

LaurentPoly AbelianizationMap::monomial(const Word& w) const {
  Exponents e(vars.size(), 0);
  for (const Letter& l : w.letters()) {
    const auto& img = images.at(l.gen);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += l.exp * img[k].get_si();
  }
  return LaurentPoly::monomial(vars, std::move(e));
}

LaurentPoly AbelianizationMap::apply(const GroupRingElem& x) const {
  LaurentPoly out(vars);
  for (const auto& [w, c] : x.terms()) out += monomial(w) * LaurentPoly::constant(vars, c);
  return out;
}

Abelianization abelianization(const GroupPresentation& p, const std::vector<std::string>& var_names) {
  const std::size_t n = p.generators.size();
  IntMatrix rel(p.relators.size(), n, Integer(0));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto v = abelianize(p.relators[i], n);
    for (std::size_t j = 0; j < n; ++j) rel(i, j) = v[j];
  }
  // Z^n / rowspace(R): with U R V = D, generator j maps to row j of V.
  SmithForm s = snf(rel);
  Abelianization out;
  out.group.free_rank = n - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) out.group.torsion.push_back(s.D(i, i));

  const std::size_t r = out.group.free_rank;
  IntMatrix free_part(n, r, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) free_part(j, k) = s.V(j, s.rank + k);
  ColumnEchelon ce = column_echelon(free_part);

  std::vector<std::string> names;
  if (!var_names.empty()) {
    if (var_names.size() != r)
      throw std::invalid_argument("abelianization: expected " + std::to_string(r) + " variable names");
    names = var_names;
  } else {
    std::set<std::string> used;
    for (std::size_t k = 0; k < r; ++k) {
      std::string name;
      if (k == 0) {
        name = "t";
      } else if (k < ce.pivot_rows.size()) {
        const std::size_t row = ce.pivot_rows[k];
        bool basis_vector = true;
        for (std::size_t c = 0; c < r; ++c) basis_vector = basis_vector && ce.E(row, c) == (c == k ? 1 : 0);
        if (basis_vector) name = p.generators.name(row);
      }
      if (name.empty() || used.count(name)) name = "u" + std::to_string(k);
      used.insert(name);
      names.push_back(name);
    }
  }
  out.map.vars = VarSet(names);
  out.map.images.assign(n, std::vector<Integer>(r, Integer(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) out.map.images[j][k] = ce.E(j, k);
  return out;
}

PolyMatrix alexander_matrix(const GroupPresentation& p, const AbelianizationMap& amap) {
  PolyMatrix m(amap.vars, p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      m(i, j) = amap.apply(fox_derivative(p.relators[i], j));
  return m;
}

// ---------------------------------------------------------------------------
// Mapping torus

namespace {

// Surface letter x_i becomes generator i + 1 (t is generator 0).
Word lift_surface_word(const Word& w) {
  std::vector<Letter> l;
  l.reserve(w.length());
  for (const Letter& x : w.letters()) l.push_back(Letter{x.gen + 1, x.exp});
  return Word(std::move(l));
}

}  // namespace

GroupPresentation mapping_torus_presentation(const MappingClass& mc) {
  SurfaceData s(mc.genus);
  std::vector<std::string> names{"t"};
  for (const auto& n : s.generators.names()) names.push_back(n);
  GroupPresentation p;
  p.generators = Alphabet(std::move(names));
  p.relators.push_back(lift_surface_word(s.relator));

  const FreeEndo inv = mapping_class_endo_inverse(mc);
  const Word t = Word::generator(0);
  for (std::size_t x = 0; x < s.generators.size(); ++x) {
    Word gx = Word::generator(x + 1);
    p.relators.push_back(t * gx * t.inverse() * lift_surface_word(inv.image(x)).inverse());
  }
  return p;
}

std::size_t betti_wang(const MappingClass& mc) {
  IntMatrix a = cohomology_action(mc);
  return 1 + nullity(a - identity_matrix(a.rows()));
}

MappingTorusY::MappingTorusY(MappingClass mc)
    : mc_(std::move(mc)),
      presentation_(mapping_torus_presentation(mc_)),
      abelianization_(fibtop::abelianization(presentation_)),
      betti1_(betti_wang(mc_)) {
  if (betti1_ != abelianization_.group.free_rank)
    throw std::logic_error("MappingTorusY: Wang-sequence b1 disagrees with the abelianization");
}

// ---------------------------------------------------------------------------
// Alexander invariants

AlexanderPolynomial alexander_polynomial(const GroupPresentation& p, const Abelianization& ab) {
  PolyMatrix m = alexander_matrix(p, ab.map);
  AlexanderPolynomial out;
  out.full = elementary_ideal_gcd(m, 1);
  const VarSet& vars = ab.map.vars;
  VarSet tvars = vars.size() > 0 ? VarSet{vars.name(0)} : VarSet{"t"};
  std::map<std::string, LaurentPoly> ones;
  for (std::size_t k = 1; k < vars.size(); ++k) ones.emplace(vars.name(k), LaurentPoly::constant(tvars, 1));
  LaurentPoly in_t = substitute(out.full, ones, tvars);
  out.in_t = in_t.is_zero() ? in_t : normalize_unit(in_t);
  return out;
}

AlexanderPolynomial alexander_polynomial(const MappingTorusY& y) {
  return alexander_polynomial(y.presentation(), y.abelianization());
}

Symmetrized milnor_torsion(const AlexanderPolynomial& delta) {
  if (delta.full.is_zero()) throw std::domain_error("milnor_torsion: Alexander polynomial is zero");
  if (delta.full.vars().size() == 0) return Symmetrized{normalize_unit(delta.full), false};
  return symmetrize(delta.full, delta.full.vars().name(0));
}

Symmetrized milnor_torsion(const MappingTorusY& y) { return milnor_torsion(alexander_polynomial(y)); }

LaurentPoly sw3(const LaurentPoly& torsion) {
  std::map<std::string, LaurentPoly> squares;
  for (const auto& name : torsion.vars().names())
    squares.emplace(name, LaurentPoly::variable(torsion.vars(), name, 2));
  return substitute(torsion, squares);
}

LaurentPoly sw3(const MappingTorusY& y) { return sw3(milnor_torsion(y).poly); }

LaurentPoly charpoly_oracle(const MappingClass& mc) { return char_poly(h1_action(mc), "t"); }

// ---------------------------------------------------------------------------
// Cup products

namespace {

// Symplectic pairing <u cup v, [Sigma]> of cocycles in (alpha1, beta1, ...) coordinates.
Integer symplectic(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

std::vector<Integer> column(const IntMatrix& m, std::size_t j) {
  std::vector<Integer> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<Integer> CupPairings::cup(const std::vector<Integer>& u, const std::vector<Integer>& v) const {
  const std::size_t r = rank();
  std::vector<Integer> x(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (u.at(i) == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (v.at(j) == 0) continue;
      for (std::size_t k = 0; k < r; ++k) x[k] += u[i] * v[j] * value(i, j, k);
    }
  }
  return x;
}

Integer CupPairings::pair_with_h2(const std::vector<Integer>& u, const std::vector<Integer>& x) const {
  const std::size_t r = rank();
  Integer s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) s += u.at(i) * poincare_dual(i, k) * x.at(k);
  return s;
}

CupPairings cup_pairings(const MappingTorusY& y) {
  const MappingClass& mc = y.monodromy();
  IntMatrix co = cohomology_action(mc);
  IntMatrix ho = h1_action(mc);
  CupPairings cp;
  cp.invariant_cocycles = kernel_basis(co - identity_matrix(co.rows()));
  cp.invariant_cycles = kernel_basis(ho - identity_matrix(ho.rows()));
  if (cp.invariant_cocycles.cols() != cp.invariant_cycles.cols())
    throw std::logic_error("cup_pairings: invariant cocycle and cycle ranks differ");
  const std::size_t m = cp.invariant_cocycles.cols();
  const std::size_t r = m + 1;

  cp.tensor.assign(r * r * r, Integer(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Integer& { return cp.tensor[(i * r + j) * r + k]; };
  for (std::size_t a = 0; a < m; ++a) {
    const auto u = column(cp.invariant_cocycles, a);
    for (std::size_t c = 0; c < m; ++c) {
      const Integer val = dot(u, column(cp.invariant_cycles, c));  // u(c)
      at(0, a + 1, c + 1) = val;
      at(a + 1, 0, c + 1) = -val;
    }
    for (std::size_t b = 0; b < m; ++b) at(a + 1, b + 1, 0) = symplectic(u, column(cp.invariant_cocycles, b));
  }

  // PD(theta) = [Sigma]; PD(u) = c_u x S^1 where c_u is the surface dual of u,
  // v(c_u) = <u cup v, [Sigma]>.
  cp.poincare_dual = IntMatrix(r, r, Integer(0));
  cp.poincare_dual(0, 0) = 1;
  if (m > 0) {
    IntMatrix duals(co.rows(), m, Integer(0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t i = 0; i + 1 < co.rows(); i += 2) {
        duals(i, a) = -cp.invariant_cocycles(i + 1, a);
        duals(i + 1, a) = cp.invariant_cocycles(i, a);
      }
    }
    auto lambda = solve(cp.invariant_cycles, duals);
    if (!lambda) throw std::logic_error("cup_pairings: surface dual of an invariant cocycle is not invariant");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c) cp.poincare_dual(a + 1, c + 1) = (*lambda)(c, a);
  }
  return cp;
}

IntMatrix h1_duality(const MappingTorusY& y, const CupPairings& cup) {
  const Abelianization& ab = y.abelianization();
  const std::size_t n = y.presentation().generators.size();
  const std::size_t r = cup.rank();
  if (ab.map.vars.size() != r) throw std::logic_error("h1_duality: rank mismatch");

  // Intersection numbers of each generator with the H_2 basis.
  IntMatrix pd(n, r, Integer(0));
  pd(0, 0) = 1;
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t s = x - 1;  // surface coordinate
    for (std::size_t c = 1; c < r; ++c) {
      const IntMatrix& cyc = cup.invariant_cycles;
      pd(x, c) = (s % 2 == 0) ? cyc(s + 1, c - 1) : Integer(-cyc(s - 1, c - 1));
    }
  }
  IntMatrix g(n, r, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) g(j, k) = ab.map.images[j][k];
  auto l = solve(g, pd);
  if (!l) throw std::logic_error("h1_duality: intersection numbers do not factor through H_1");
  return *l;
}

}  // namespace fibtop
