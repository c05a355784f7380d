#pragma once

#include "fibtop/integer.hpp"
#include "fibtop/laurent.hpp"
#include "fibtop/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibtop {

using IntMatrix = Matrix<Integer>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::string to_string(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

/// Z^free_rank + Z/c1 + ... with c1 | c2 | ..., each ci > 1.
struct AbelianGroupSpec {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  std::string to_string() const;
  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;
};

SmithForm snf(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t nullity(const IntMatrix& m);

// Fraction-free (Bareiss) elimination. Throws std::invalid_argument on a non-square input.
Integer det(const IntMatrix& m);

// det(tI - M) in the single variable `var`, computed by the Faddeev-LeVerrier
// recurrence (exact integer division at every step).
LaurentPoly char_poly(const IntMatrix& m, const std::string& var = "t");

// Z^rows / image(M).
AbelianGroupSpec cokernel(const IntMatrix& m);

// Basis of {x : M x = 0} as columns; each column has a positive first nonzero entry.
IntMatrix kernel_basis(const IntMatrix& m);
// Basis of {y : y M = 0} as rows.
IntMatrix left_kernel_basis(const IntMatrix& m);

// Integer solution X of A X = B, if one exists.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

// Column-style Hermite form: E = M * W with W unimodular, E lower echelon with
// positive pivots and entries left of each pivot reduced into [0, pivot).
struct ColumnEchelon {
  IntMatrix E;
  IntMatrix W;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[k] = row of the pivot in column k
};
ColumnEchelon column_echelon(const IntMatrix& m);

}  // namespace fibtop
