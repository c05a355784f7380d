#include "fibtop/exactalg.hpp"

#include <sstream>
#include <stdexcept>

namespace fibtop {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix difference: shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::string AbelianGroupSpec::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& c : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + c.get_str();
  }
  return out.empty() ? "0" : out;
}

namespace {

// Row operation row_dst += k * row_src on both the working matrix and U.
void add_row(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += k * a(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += k * u(src, j);
}

void add_col(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += k * a(i, src);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += k * v(i, src);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// Smallest-absolute-value pivoting with full reduction of the pivot row and
// column; an entry not divisible by the pivot is folded into the pivot row so
// the next round produces a smaller pivot.
SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = identity_matrix(rows);
  IntMatrix v = identity_matrix(cols);
  std::size_t t = 0;

  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (!piv || abs(a(i, j)) < abs(a(piv->first, piv->second))))
            piv = {i, j};
      if (!piv) break;
      a.swap_rows(t, piv->first);
      u.swap_rows(t, piv->first);
      a.swap_cols(t, piv->second);
      v.swap_cols(t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(a, u, i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(a, v, j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(a, u, t, *bad_row, Integer(1));
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(a), std::move(u), std::move(v), t};
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank; }

std::size_t nullity(const IntMatrix& m) { return m.cols() - rank(m); }

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  bool negate = false;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(i, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return negate ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

LaurentPoly char_poly(const IntMatrix& m, const std::string& var) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = m.rows();
  VarSet vars{var};
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix mk(n, n, Integer(0));
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix am = m * mk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  LaurentPoly p(vars);
  for (std::size_t k = 0; k <= n; ++k)
    p += LaurentPoly::monomial(vars, {static_cast<std::int64_t>(k)}, c[k]);
  return p;
}

AbelianGroupSpec cokernel(const IntMatrix& m) {
  SmithForm s = snf(m);
  AbelianGroupSpec g;
  g.free_rank = m.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) g.torsion.push_back(s.D(i, i));
  return g;
}

namespace {

void orient_column(IntMatrix& k, std::size_t j) {
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (k(i, j) == 0) continue;
    if (k(i, j) < 0)
      for (std::size_t r = 0; r < k.rows(); ++r) k(r, j) = -k(r, j);
    return;
  }
}

}  // namespace

// M x = 0  <=>  D (V^-1 x) = 0, so the trailing columns of V span the kernel.
IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm s = snf(m);
  const std::size_t dim = m.cols() - s.rank;
  IntMatrix k(m.cols(), dim, Integer(0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = s.V(i, s.rank + j);
    orient_column(k, j);
  }
  return k;
}

IntMatrix left_kernel_basis(const IntMatrix& m) { return kernel_basis(m.transposed()).transposed(); }

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  // U A V = D;  A X = B  <=>  D (V^-1 X) = U B.
  SmithForm s = snf(a);
  IntMatrix ub = s.U * b;
  IntMatrix y(a.cols(), b.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < s.rank) {
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
        y(i, j) = ub(i, j) / s.D(i, i);
      } else if (ub(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.V * y;
}

ColumnEchelon column_echelon(const IntMatrix& m) {
  IntMatrix e = m;
  IntMatrix w = identity_matrix(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t i = 0; i < e.rows() && p < e.cols(); ++i) {
    // Euclid on row i across columns p.. until one nonzero entry remains.
    for (;;) {
      std::optional<std::size_t> small;
      for (std::size_t j = p; j < e.cols(); ++j)
        if (e(i, j) != 0 && (!small || abs(e(i, j)) < abs(e(i, *small)))) small = j;
      if (!small) break;
      e.swap_cols(p, *small);
      w.swap_cols(p, *small);
      bool done = true;
      for (std::size_t j = p + 1; j < e.cols(); ++j) {
        if (e(i, j) == 0) continue;
        add_col(e, w, j, p, -floor_div(e(i, j), e(i, p)));
        if (e(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (e(i, p) == 0) continue;
    if (e(i, p) < 0) {
      for (std::size_t r = 0; r < e.rows(); ++r) e(r, p) = -e(r, p);
      for (std::size_t r = 0; r < w.rows(); ++r) w(r, p) = -w(r, p);
    }
    for (std::size_t j = 0; j < p; ++j) add_col(e, w, j, p, -floor_div(e(i, j), e(i, p)));
    pivots.push_back(i);
    ++p;
  }
  return ColumnEchelon{std::move(e), std::move(w), std::move(pivots)};
}

}  // namespace fibtop
