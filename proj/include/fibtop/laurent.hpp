#pragma once

#include "fibtop/integer.hpp"
#include "fibtop/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibtop {

/// Ordered list of distinct, nonempty variable names. Cheap to copy.
class VarSet {
public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names)
      : VarSet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::int64_t>;

/// Element of Z[x1^±1, ..., xn^±1]. Terms are kept in ascending lexicographic
/// order of exponent vectors and no zero coefficient is ever stored.
class LaurentPoly {
public:
  using TermMap = std::map<Exponents, Integer>;

  /// Zero over the empty variable set; behaves as an integer constant in
  /// mixed arithmetic.
  LaurentPoly() = default;
  explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(VarSet vars, const Integer& c);
  static LaurentPoly monomial(VarSet vars, Exponents exps, const Integer& c = 1);
  static LaurentPoly variable(VarSet vars, std::string_view name, std::int64_t power = 1);
  static LaurentPoly from_terms(VarSet vars, const TermMap& terms);
  /// Accepts sums of products of integers, variables, parenthesized
  /// subexpressions and `^` powers (negative powers only on units).
  static LaurentPoly parse(std::string_view text, const VarSet& vars);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True for ±monomial.
  bool is_unit() const;
  Integer coefficient(const Exponents& exps) const;
  Integer coefficient_sum() const;

  std::int64_t min_degree(std::size_t var) const;
  std::int64_t max_degree(std::size_t var) const;
  bool involves(std::size_t var) const;

  /// Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const;
  /// Same polynomial over another variable set; every variable that occurs
  /// must exist in `target`.
  LaurentPoly embed(const VarSet& target) const;
  LaurentPoly pow(unsigned n) const;
  /// Inverse of a unit. Throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
  friend class LaurentAccess;

  VarSet vars_;
  TermMap terms_;
};

/// q with d * q = p exactly; throws std::domain_error when d does not divide p
/// (or d is zero).
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Greatest common divisor, unit-normalized. Throws when both are zero.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);
/// Fold of gcd over the list, unit-normalized. Throws when every entry is zero.
LaurentPoly gcd_many(const std::vector<LaurentPoly>& polys);

/// Canonical associate: every variable has minimal exponent 0 and the
/// lexicographically first term is positive. Throws on zero.
LaurentPoly normalize_unit(const LaurentPoly& p);
bool are_associates(const LaurentPoly& p, const LaurentPoly& q);

struct Symmetrized {
  LaurentPoly poly;
  /// Exponent span in the distinguished variable is odd; support is {-m, ..., m+1}.
  bool asymmetric_span = false;
};
/// Associate centered at zero in `var` (other variables shifted to minimal
/// exponent 0), sign chosen so the top term in `var` is positive.
Symmetrized symmetrize(const LaurentPoly& p, std::string_view var);

/// Replace variables by polynomials over `target`. Variables without an
/// assignment map to the same-named variable of `target`. A variable that
/// occurs with a negative exponent must be assigned a unit.
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments,
                       const VarSet& target);
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& assignments);

/// Matrix with entries over a fixed variable set.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols)
      : vars_(vars), m_(rows, cols, LaurentPoly(vars)) {}

  const VarSet& vars() const { return vars_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, const LaurentPoly& p) { m_.at(i, j) = p.embed(vars_); }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
  VarSet vars_;
  Matrix<LaurentPoly> m_;
};

/// Determinant of the submatrix on the given rows and columns. Cofactor
/// expansion up to size 4, fraction-free elimination above.
LaurentPoly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols);
LaurentPoly determinant(const PolyMatrix& m);

/// Unit-normalized gcd of all (n-k)x(n-k) minors of an r x n matrix: the
/// generator of the k-th elementary ideal. 1 when n-k <= 0, 0 when n-k > r.
LaurentPoly elementary_ideal_gcd(const PolyMatrix& m, std::size_t k);

}  // namespace fibtop
