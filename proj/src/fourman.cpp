#include "fibtop/fourman.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fibtop {

namespace {

std::vector<Integer> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Integer> v(n, Integer(0));
  v[i] = 1;
  return v;
}

std::vector<Integer> col(const IntMatrix& m, std::size_t j) {
  std::vector<Integer> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

bool all_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::int64_t to_exponent(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("exponent out of range");
  return x.get_si();
}

// u -> <u cup chi, [Y]> on the H^1 basis.
std::vector<Integer> cup_with(const CircleBundleX& x) {
  const std::size_t r = x.cup().rank();
  std::vector<Integer> w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = x.cup().pair_with_h2(unit_vector(r, i), x.euler_class());
  return w;
}

VarSet quotient_vars(std::size_t n) {
  if (n == 1) return VarSet({"s"});
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  return VarSet(std::move(names));
}

}  // namespace

CircleBundleX::CircleBundleX(MappingTorusY base, std::optional<std::vector<Integer>> euler_class)
    : base_(std::move(base)), cup_(cup_pairings(base_)) {
  euler_ = euler_class ? *euler_class : default_euler_class(cup_.rank());
  if (euler_.size() != cup_.rank())
    throw std::invalid_argument("CircleBundleX: Euler class has " + std::to_string(euler_.size()) +
                                " coordinates, H^2(Y) has rank " + std::to_string(cup_.rank()));
}

std::vector<Integer> CircleBundleX::default_euler_class(std::size_t rank) {
  std::vector<Integer> chi(rank, Integer(0));
  if (rank >= 2) chi[1] = 1;
  return chi;
}

bool CircleBundleX::euler_is_zero() const { return all_zero(euler_); }

ClassQuotient quotient_by(const std::vector<Integer>& chi) {
  const std::size_t r = chi.size();
  ClassQuotient q;
  if (all_zero(chi)) {
    q.projection = identity_matrix(r);
    q.complement = identity_matrix(r);
    return q;
  }
  std::optional<std::size_t> pivot;
  for (std::size_t i = 1; i < r && !pivot; ++i)
    if (abs(chi[i]) == 1) pivot = i;
  if (!pivot && abs(chi[0]) == 1) pivot = 0;
  if (pivot) {
    const std::size_t p = *pivot;
    q.projection = IntMatrix(r - 1, r, Integer(0));
    q.complement = IntMatrix(r, r - 1, Integer(0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == p) continue;
      q.projection(k, i) = 1;
      q.projection(k, p) = -chi[i] * chi[p];  // chi[p] = +-1 is its own inverse
      q.complement(i, k) = 1;
      ++k;
    }
    return q;
  }
  IntMatrix c(r, 1, chi);
  SmithForm s = snf(c);
  auto uinv = solve(s.U, identity_matrix(r));
  if (!uinv) throw std::logic_error("quotient_by: Smith transform not unimodular");
  q.projection = IntMatrix(r - 1, r, Integer(0));
  q.complement = IntMatrix(r, r - 1, Integer(0));
  for (std::size_t k = 1; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      q.projection(k - 1, j) = s.U(k, j);
      q.complement(j, k - 1) = (*uinv)(j, k);
    }
  return q;
}

GysinBetti gysin_betti(const CircleBundleX& x) {
  const std::size_t r = x.cup().rank();
  const std::size_t rho0 = x.euler_is_zero() ? 0 : 1;
  const std::size_t rho1 = all_zero(cup_with(x)) ? 0 : 1;
  GysinBetti b;
  b.b1 = r + 1 - rho0;
  b.b2 = (r - rho0) + (r - rho1);
  b.b3 = (1 - rho1) + r;
  b.euler_characteristic = 2 - 2 * static_cast<long>(b.b1) + static_cast<long>(b.b2);
  if (b.euler_characteristic != 0 || b.b3 != b.b1)
    throw std::logic_error("gysin_betti: circle bundle with nonzero Euler characteristic");
  return b;
}

std::optional<Integer> IntersectionForm::determinant() const {
  const std::size_t n = entries.rows();
  const std::size_t l = n - pulled_back;
  if (l != pulled_back) return std::nullopt;
  // [[0, B], [B^T, D]] with square B has determinant (-1)^l det(B)^2.
  IntMatrix b(pulled_back, l, Integer(0));
  for (std::size_t i = 0; i < pulled_back; ++i)
    for (std::size_t j = 0; j < l; ++j) b(i, j) = *entries(i, pulled_back + j);
  Integer d = det(b);
  Integer out = d * d;
  return (l % 2 == 1) ? Integer(-out) : out;
}

std::string IntersectionForm::to_string() const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = i; j < entries.cols(); ++j)
      if (!entries(i, j)) id.emplace(std::pair(i, j), id.size() + 1);
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    s << (i ? ", [" : "[");
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      if (j) s << ", ";
      if (entries(i, j))
        s << entries(i, j)->get_str();
      else if (id.size() == 1)
        s << 'd';
      else
        s << 'd' << id.at({std::min(i, j), std::max(i, j)});
    }
    s << ']';
  }
  s << ']';
  return s.str();
}

IntersectionForm intersection_form(const CircleBundleX& x) {
  const CupPairings& cup = x.cup();
  const std::size_t r = cup.rank();
  const ClassQuotient quo = quotient_by(x.euler_class());
  const std::size_t q = quo.complement.cols();

  IntersectionForm f;
  f.pulled_back = q;
  IntMatrix kernel = kernel_basis(IntMatrix(1, r, cup_with(x)));
  f.lift_basis = kernel.transposed();
  const std::size_t l = kernel.cols();
  const std::size_t n = q + l;

  f.entries = Matrix<std::optional<Integer>>(n, n, std::nullopt);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) f.entries(i, j) = Integer(0);
  IntMatrix b(q, l, Integer(0));
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t m = 0; m < l; ++m) {
      b(k, m) = cup.pair_with_h2(col(kernel, m), col(quo.complement, k));
      f.entries(k, q + m) = b(k, m);
      f.entries(q + m, k) = b(k, m);
    }

  // An isotropic subspace of half the dimension paired nondegenerately with
  // its complement forces a hyperbolic signature, whatever the lift block is.
  if (q == l && det(b) != 0) {
    f.signature = 0;
    f.b_plus = q;
    f.b_minus = q;
  } else if (l == 0) {
    f.signature = 0;
    f.b_plus = 0;
    f.b_minus = 0;
  }
  return f;
}

LaurentPoly express_in_h2(const LaurentPoly& p, const IntMatrix& duality) {
  const std::size_t r = duality.rows();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < duality.cols(); ++i) names.push_back("h" + std::to_string(i));
  VarSet hv(std::move(names));
  if (!p.vars().names().empty() && p.vars().size() != r)
    throw std::invalid_argument("express_in_h2: polynomial has " + std::to_string(p.vars().size()) +
                                " variables, duality has " + std::to_string(r) + " rows");
  LaurentPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    Exponents h(duality.cols(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      for (std::size_t j = 0; j < duality.cols(); ++j)
        h[j] += to_exponent(Integer(static_cast<long>(e[k])) * duality(k, j));
    }
    terms[h] += c;
  }
  return LaurentPoly::from_terms(hv, terms);
}

SWPolynomial4 sw4_from_sw3(const LaurentPoly& sw_h2, const std::vector<Integer>& chi) {
  const std::size_t r = chi.size();
  if (!sw_h2.vars().names().empty() && sw_h2.vars().size() != r)
    throw std::invalid_argument("sw4_from_sw3: class has " + std::to_string(r) + " coordinates, polynomial has " +
                                std::to_string(sw_h2.vars().size()) + " variables");
  const ClassQuotient quo = quotient_by(chi);
  const std::size_t q = quo.projection.rows();
  SWPolynomial4 out;
  VarSet sv = quotient_vars(q);
  LaurentPoly::TermMap terms;
  for (const auto& [e, c] : sw_h2.terms()) {
    Exponents y(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      Integer acc = 0;
      for (std::size_t k = 0; k < e.size(); ++k) acc += quo.projection(a, k) * Integer(static_cast<long>(e[k]));
      y[a] = to_exponent(acc);
    }
    terms[y] += c;
  }
  for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
  out.poly = LaurentPoly::from_terms(sv, terms);
  if (r > 0 && chi[0] == 0) {
    std::vector<Integer> omega(q);
    for (std::size_t k = 0; k < q; ++k) omega[k] = quo.complement(0, k);
    out.omega_pairing = omega;
  }
  return out;
}

std::optional<Integer> CanonicalClass::fiber_multiple() const {
  if (coords.size() != 1) return std::nullopt;
  return coords[0];
}

CanonicalClass canonical_class(const SWPolynomial4& sw) {
  if (sw.poly.is_zero()) throw std::domain_error("canonical_class: SW polynomial is zero");
  const std::size_t q = sw.poly.vars().size();
  std::vector<Integer> omega;
  if (sw.omega_pairing) {
    omega = *sw.omega_pairing;
  } else if (q == 1) {
    omega = {Integer(1)};
  } else {
    throw std::domain_error("canonical_class: no symplectic pairing on the quotient classes");
  }
  std::optional<Integer> best;
  std::vector<const Exponents*> top;
  for (const auto& [e, c] : sw.poly.terms()) {
    Integer v = 0;
    for (std::size_t k = 0; k < e.size(); ++k) v += omega[k] * Integer(static_cast<long>(e[k]));
    if (!best || v > *best) {
      best = v;
      top = {&e};
    } else if (v == *best) {
      top.push_back(&e);
    }
  }
  if (top.size() != 1) throw std::domain_error("canonical_class: top basic class is not unique");
  CanonicalClass k;
  for (std::int64_t e : *top.front()) k.coords.push_back(Integer(static_cast<long>(e)));
  if (k.coords.empty()) k.coords.push_back(0);
  k.dot_omega = *best;
  k.square = 0;  // pulled-back classes are isotropic
  return k;
}

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity: return "-inf";
    case Kodaira::Zero: return "0";
    case Kodaira::One: return "1";
    case Kodaira::Two: return "2";
  }
  return "?";
}

Kodaira kodaira_dimension(const Integer& k_squared, const Integer& k_dot_omega) {
  if (k_squared < 0 || k_dot_omega < 0) return Kodaira::MinusInfinity;
  if (k_squared == 0) return k_dot_omega == 0 ? Kodaira::Zero : Kodaira::One;
  if (k_dot_omega == 0)
    throw std::invalid_argument("kodaira_dimension: K^2 > 0 with K.[omega] = 0 does not occur");
  return Kodaira::Two;
}

IntMatrix cup_annihilator(std::size_t rank, const std::vector<Integer>& tensor, const IntMatrix& projection) {
  if (tensor.size() != rank * rank * rank || projection.cols() != rank)
    throw std::invalid_argument("cup_annihilator: dimension mismatch");
  const std::size_t q = projection.rows();
  if (q == 0) return identity_matrix(rank);
  IntMatrix m(rank, rank * q, Integer(0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t a = 0; a < q; ++a) {
        Integer acc = 0;
        for (std::size_t k = 0; k < rank; ++k) acc += projection(a, k) * tensor[(i * rank + j) * rank + k];
        m(i, j * q + a) = acc;
      }
  return left_kernel_basis(m);
}

std::string LefschetzResult::verdict() const {
  return lefschetz_compatible ? "Lefschetz-compatible" : "not Lefschetz type";
}

LefschetzResult lefschetz_test(const CircleBundleX& x) {
  LefschetzResult res;
  const ClassQuotient quo = quotient_by(x.euler_class());
  res.annihilator = cup_annihilator(x.cup().rank(), x.cup().tensor, quo.projection);
  res.lefschetz_compatible = res.annihilator.rows() == 0;
  return res;
}

Integer wall_crossing_term(const CircleBundleX& x, const std::vector<Integer>& xi, const std::vector<Integer>& y1,
                           const std::vector<Integer>& y2) {
  const CupPairings& cup = x.cup();
  const std::size_t r = cup.rank();
  const IntersectionForm f = intersection_form(x);
  const std::size_t n = f.entries.rows();
  if (xi.size() != n) throw std::invalid_argument("wall_crossing_term: xi needs " + std::to_string(n) + " coordinates");
  if (y1.size() != r || y2.size() != r)
    throw std::invalid_argument("wall_crossing_term: H^1 classes need " + std::to_string(r) + " coordinates");
  for (const Integer& c : xi)
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw std::domain_error("wall_crossing_term: xi/2 is not integral");
  std::vector<Integer> w(r, Integer(0));
  for (std::size_t m = 0; m < f.lift_basis.rows(); ++m) {
    Integer half = xi[f.pulled_back + m] / 2;
    for (std::size_t i = 0; i < r; ++i) w[i] += half * f.lift_basis(m, i);
  }
  // Pulled-back parts of xi pair to zero with pulled-back products.
  return cup.pair_with_h2(w, cup.cup(y1, y2));
}

Integer sw_dimension(const CircleBundleX& x, const Integer& xi_squared) {
  const GysinBetti b = gysin_betti(x);
  const IntersectionForm f = intersection_form(x);
  if (!f.signature) throw std::domain_error("sw_dimension: signature is not determined");
  Integer num = xi_squared - Integer(2 * b.euler_characteristic) - Integer(3 * *f.signature);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 4))
    throw std::domain_error("sw_dimension: " + num.get_str() + " is not divisible by 4");
  return num / 4;
}

FourManifoldInvariants analyze(const CircleBundleX& x, const LaurentPoly& sw_y) {
  FourManifoldInvariants inv;
  inv.betti = gysin_betti(x);
  inv.form = intersection_form(x);
  const IntMatrix duality = h1_duality(x.base(), x.cup());
  inv.sw = sw4_from_sw3(express_in_h2(sw_y, duality), x.euler_class());
  inv.lefschetz = lefschetz_test(x);
  inv.symplectic = !x.euler_is_zero() && x.euler_class()[0] == 0;
  if (!inv.sw.poly.is_zero()) {
    try {
      inv.canonical = canonical_class(inv.sw);
    } catch (const std::domain_error&) {
    }
  }
  if (inv.canonical) {
    // K^2 through the form: K lives in the pulled-back block.
    Integer ksq = 0;
    const auto& c = inv.canonical->coords;
    for (std::size_t i = 0; i < c.size() && i < inv.form.pulled_back; ++i)
      for (std::size_t j = 0; j < c.size() && j < inv.form.pulled_back; ++j) ksq += c[i] * c[j] * *inv.form.entries(i, j);
    inv.canonical->square = ksq;
    try {
      inv.kodaira = kodaira_dimension(ksq, inv.canonical->dot_omega);
    } catch (const std::invalid_argument&) {
    }
    try {
      inv.dim_canonical = sw_dimension(x, ksq);
    } catch (const std::domain_error&) {
    }
  }
  return inv;
}

ObstructionReport obstruction_report(const FourManifoldInvariants& inv) {
  ObstructionReport rep;
  rep.taubes_axiom = inv.symplectic;
  rep.sw_nonzero = inv.symplectic || !inv.sw.poly.is_zero();
  rep.wall_crossing_trivial = !inv.lefschetz.lefschetz_compatible;
  rep.psc_excluded = rep.sw_nonzero && rep.wall_crossing_trivial;
  rep.psc_verdict = rep.psc_excluded ? "excluded" : "inconclusive (chamber-dependent)";
  rep.complex_excluded = inv.betti.b1 % 2 == 0 && !inv.lefschetz.lefschetz_compatible;
  rep.complex_verdict = rep.complex_excluded ? "excluded" : "not excluded";
  rep.sw_simple_type = inv.dim_canonical && *inv.dim_canonical == 0;
  return rep;
}

ObstructionReport obstruction_report(const CircleBundleX& x) {
  return obstruction_report(analyze(x, sw3(x.base())));
}

}  // namespace fibtop
