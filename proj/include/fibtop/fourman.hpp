#pragma once

#include "fibtop/exactalg.hpp"
#include "fibtop/laurent.hpp"
#include "fibtop/torus3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibtop {

/// Circle bundle X -> Y with Euler class chi, given in the H^2(Y) basis dual
/// to {[Sigma], c_j x S^1}. For family_phi that basis is
/// {[Omega]-dual, [alpha ^ theta]-dual} and chi = (0, 1).
class CircleBundleX {
public:
  explicit CircleBundleX(MappingTorusY base, std::optional<std::vector<Integer>> euler_class = std::nullopt);

  /// (0, 1, 0, ...) when b1(Y) >= 2, otherwise zero.
  static std::vector<Integer> default_euler_class(std::size_t rank);

  const MappingTorusY& base() const { return base_; }
  const CupPairings& cup() const { return cup_; }
  const std::vector<Integer>& euler_class() const { return euler_; }
  bool euler_is_zero() const;

private:
  MappingTorusY base_;
  CupPairings cup_;
  std::vector<Integer> euler_;
};

/// H^2(Y) / Z chi. `projection` maps H^2(Y) coordinates onto quotient
/// coordinates (torsion dropped); column k of `complement` is a lift of the
/// k-th quotient basis vector. A unit entry of chi away from the fiber
/// coordinate is pivoted on when one exists, so the quotient basis is a subset
/// of the original one.
struct ClassQuotient {
  IntMatrix projection;
  IntMatrix complement;
};
ClassQuotient quotient_by(const std::vector<Integer>& chi);

struct GysinBetti {
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::size_t b3 = 0;
  long euler_characteristic = 0;
};
GysinBetti gysin_betti(const CircleBundleX& x);

/// Intersection form of X on the free part of H^2(X) in the basis
/// {pi^* of the H^2(Y)/chi basis} then {lifts of ker(cup chi) on H^1(Y)}.
/// Products of two lifts are not determined by the cohomology ring of Y and
/// stay unknown.
struct IntersectionForm {
  Matrix<std::optional<Integer>> entries;
  std::optional<long> signature;
  std::optional<std::size_t> b_plus;
  std::optional<std::size_t> b_minus;
  /// Number of pulled-back classes; the rest are lifts.
  std::size_t pulled_back = 0;
  /// Kernel of cup chi on H^1(Y), rows in the H^1(Y) basis.
  IntMatrix lift_basis;

  /// Determinant when it does not depend on the unknown entries.
  std::optional<Integer> determinant() const;
  std::string to_string() const;
};
IntersectionForm intersection_form(const CircleBundleX& x);

/// Four-dimensional Seiberg-Witten polynomial in the pulled-back classes
/// (variable `s`, or s1, s2, ... when H^2(Y)/chi has rank > 1).
struct SWPolynomial4 {
  LaurentPoly poly;
  /// Pairing with [omega] as a functional on exponent vectors; absent when
  /// chi evaluates nontrivially on the fiber.
  std::optional<std::vector<Integer>> omega_pairing;
};

/// Rewrite a polynomial over the free part of H_1(Y) in H^2(Y) coordinates
/// (variables h0, h1, ...) using the duality matrix from h1_duality.
LaurentPoly express_in_h2(const LaurentPoly& p, const IntMatrix& duality);

/// Sum coefficients over cosets of Z chi. `sw_h2` must be in H^2(Y) coordinates.
SWPolynomial4 sw4_from_sw3(const LaurentPoly& sw_h2, const std::vector<Integer>& chi);

struct CanonicalClass {
  std::vector<Integer> coords;  // quotient coordinates (exponent vector of SW_X)
  Integer dot_omega;
  Integer square;

  /// The multiple of the fiber class when the quotient has rank 1.
  std::optional<Integer> fiber_multiple() const;
};
/// The basic class with the largest pairing against [omega] (the top power of
/// SW_X). Throws std::domain_error on zero or when the top is not unique.
CanonicalClass canonical_class(const SWPolynomial4& sw);

enum class Kodaira { MinusInfinity, Zero, One, Two };
std::string to_string(Kodaira k);
/// Minimal symplectic Kodaira dimension from the signs of K^2 and K.[omega].
/// Throws std::invalid_argument for K^2 > 0 with K.[omega] = 0.
Kodaira kodaira_dimension(const Integer& k_squared, const Integer& k_dot_omega);

/// Rows spanning {z : z u w = 0 in H^2(Y)/chi for every w}; `tensor` as in
/// CupPairings, `projection` from quotient_by.
IntMatrix cup_annihilator(std::size_t rank, const std::vector<Integer>& tensor, const IntMatrix& projection);

struct LefschetzResult {
  IntMatrix annihilator;  // rows in the H^1 basis (theta, u_1, ...)
  bool lefschetz_compatible = true;

  std::string verdict() const;
};
LefschetzResult lefschetz_test(const CircleBundleX& x);

/// <y1 u y2 u xi/2, [X]>. `xi` is in the H^2(X) basis of IntersectionForm and
/// must have even coordinates; y1, y2 are in the H^1 basis.
Integer wall_crossing_term(const CircleBundleX& x, const std::vector<Integer>& xi,
                           const std::vector<Integer>& y1, const std::vector<Integer>& y2);

/// d(xi) = (xi^2 - 2 chi(X) - 3 sigma(X)) / 4; throws std::domain_error when
/// the numerator is not divisible by 4 or the signature is unknown.
Integer sw_dimension(const CircleBundleX& x, const Integer& xi_squared);

struct FourManifoldInvariants {
  GysinBetti betti;
  IntersectionForm form;
  SWPolynomial4 sw;
  std::optional<CanonicalClass> canonical;
  std::optional<Kodaira> kodaira;
  LefschetzResult lefschetz;
  std::optional<Integer> dim_canonical;  // d(K)
  /// chi != 0 and chi([Sigma]) = 0, the hypotheses of the symplectic form
  /// pi^* Omega + pi^* theta ^ eta.
  bool symplectic = false;
};

/// Run the four-dimensional pipeline from a three-dimensional SW polynomial
/// (as returned by sw3, over the free part of H_1(Y)).
FourManifoldInvariants analyze(const CircleBundleX& x, const LaurentPoly& sw_y);

struct ObstructionReport {
  bool sw_nonzero = false;
  bool taubes_axiom = false;  // nonvanishing taken from symplecticity
  bool wall_crossing_trivial = false;
  bool psc_excluded = false;
  std::string psc_verdict;
  bool complex_excluded = false;
  std::string complex_verdict;
  bool sw_simple_type = false;
};
ObstructionReport obstruction_report(const FourManifoldInvariants& inv);
ObstructionReport obstruction_report(const CircleBundleX& x);

}  // namespace fibtop
