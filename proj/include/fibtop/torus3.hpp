#pragma once

#include "fibtop/exactalg.hpp"
#include "fibtop/laurent.hpp"
#include "fibtop/surface.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fibtop {

/// Finitely presented group. Text form:
///   gens: t a1 b1
///   t a1 t^-1 a1^-1
///   ...
struct GroupPresentation {
  Alphabet generators;
  std::vector<Word> relators;

  /// Throws ParseError carrying the offending line number.
  static GroupPresentation parse(std::string_view text);
  std::string to_text() const;
};

/// Finite integer combination of reduced words: an element of Z[F].
class GroupRingElem {
public:
  GroupRingElem() = default;
  static GroupRingElem of(const Word& w, const Integer& c = 1);
  static GroupRingElem one() { return of(Word{}); }

  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  /// Shortlex term order, e.g. `1 - a b a^-1`; zero prints as `0`.
  std::string to_string(const Alphabet& alphabet) const;

private:
  std::map<Word, Integer> terms_;
};

/// Fox derivative d w / d x_gen.
GroupRingElem fox_derivative(const Word& w, std::size_t gen);
/// Named-generator form; throws ParseError on an unknown generator.
GroupRingElem fox_derivative(const Word& w, std::string_view gen, const Alphabet& alphabet);

/// Map from generators to the free part of H_1, coordinates in `vars`.
struct AbelianizationMap {
  VarSet vars;
  std::vector<std::vector<Integer>> images;  // images[gen] has vars.size() entries

  LaurentPoly monomial(const Word& w) const;
  LaurentPoly apply(const GroupRingElem& e) const;
};

struct Abelianization {
  AbelianGroupSpec group;
  AbelianizationMap map;
};

/// H_1 from the Smith form of the exponent-sum matrix. The free-part basis is
/// put in column Hermite form, so the first generator with nonzero image
/// becomes the first coordinate; variable 0 is named `t`, later variables
/// after their pivot generator when that generator maps to a basis vector.
/// `var_names`, when nonempty, overrides the names.
Abelianization abelianization(const GroupPresentation& p,
                              const std::vector<std::string>& var_names = {});

/// Relators x generators matrix of abelianized Fox derivatives.
PolyMatrix alexander_matrix(const GroupPresentation& p, const AbelianizationMap& amap);

/// Generators t, a1, b1, ..., ag, bg; relators: the surface relator, then
/// t x t^-1 (phi_*^-1(x))^-1 for each surface generator x.
GroupPresentation mapping_torus_presentation(const MappingClass& mc);

/// b_1(Y) = 1 + dim ker(phi^* - 1).
std::size_t betti_wang(const MappingClass& mc);

class MappingTorusY {
public:
  explicit MappingTorusY(MappingClass mc);

  int genus() const { return mc_.genus; }
  const MappingClass& monodromy() const { return mc_; }
  const GroupPresentation& presentation() const { return presentation_; }
  const Abelianization& abelianization() const { return abelianization_; }
  std::size_t betti1() const { return betti1_; }

private:
  MappingClass mc_;
  GroupPresentation presentation_;
  Abelianization abelianization_;
  std::size_t betti1_ = 0;
};

struct AlexanderPolynomial {
  /// Unit-normalized E_1 generator in every free-part variable (0 if E_1 = 0).
  LaurentPoly full;
  /// `full` with every variable except the first set to 1, normalized.
  LaurentPoly in_t;
};

AlexanderPolynomial alexander_polynomial(const GroupPresentation& p, const Abelianization& ab);
AlexanderPolynomial alexander_polynomial(const MappingTorusY& y);

/// Symmetrization of the Alexander polynomial in its first variable. Throws
/// std::domain_error when the polynomial is zero.
Symmetrized milnor_torsion(const AlexanderPolynomial& delta);
Symmetrized milnor_torsion(const MappingTorusY& y);

/// Three-dimensional Seiberg-Witten polynomial: the Milnor torsion with every
/// variable squared.
LaurentPoly sw3(const LaurentPoly& torsion);
LaurentPoly sw3(const MappingTorusY& y);

/// char_poly of the homology action of the monodromy, in the variable t.
LaurentPoly charpoly_oracle(const MappingClass& mc);

/// Cup products on H^1(Y) evaluated against H_2(Y).
///
/// H^1 basis: theta (the fibration class), then the invariant cocycles u_j
/// (columns of `invariant_cocycles`, coordinates in alpha1, beta1, ...).
/// H_2 basis: the fiber [Sigma], then c_j x S^1 for the invariant cycles c_j
/// (columns of `invariant_cycles`, coordinates in a1, b1, ...).
/// H^2 classes are written in the basis dual to H_2.
struct CupPairings {
  IntMatrix invariant_cocycles;
  IntMatrix invariant_cycles;
  /// tensor[(i * r + j) * r + k] = <e_i u e_j, h_k>, r = rank.
  std::vector<Integer> tensor;
  /// Row i: the Poincare dual of e_i in H_2 coordinates.
  IntMatrix poincare_dual;

  std::size_t rank() const { return invariant_cocycles.cols() + 1; }
  const Integer& value(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor[(i * rank() + j) * rank() + k];
  }
  /// u cup v as an H^2 class.
  std::vector<Integer> cup(const std::vector<Integer>& u, const std::vector<Integer>& v) const;
  /// <u cup x, [Y]> = x(PD(u)) for u in H^1 and x in H^2.
  Integer pair_with_h2(const std::vector<Integer>& u, const std::vector<Integer>& x) const;
};

CupPairings cup_pairings(const MappingTorusY& y);

/// Row k: the Poincare dual in H^2 coordinates of the k-th free basis class of
/// H_1(Y) (the k-th abelianization variable).
IntMatrix h1_duality(const MappingTorusY& y, const CupPairings& cup);

}  // namespace fibtop
