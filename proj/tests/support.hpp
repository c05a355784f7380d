#pragma once

#include "fibtop/exactalg.hpp"
#include "fibtop/laurent.hpp"

#include <cstdint>
#include <random>

namespace fibtest {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kCases = 200;

/// Seed from `--seed=N` on the test command line, else kDefaultSeed.
std::uint64_t seed();

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline fibtop::IntMatrix random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, long bound) {
  fibtop::IntMatrix m(r, c, fibtop::Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(g, -bound, bound);
  return m;
}

/// Product of random elementary operations.
inline fibtop::IntMatrix random_unimodular(std::mt19937_64& g, std::size_t n, int steps = 8) {
  fibtop::IntMatrix m = fibtop::identity_matrix(n);
  if (n < 2) {
    if (n == 1 && uniform(g, 0, 1)) m(0, 0) = -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long k = uniform(g, -2, 2);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    if (uniform(g, 0, 5) == 0) m.swap_rows(i, j);
  }
  return m;
}

/// Random nonzero Laurent polynomial with up to `terms` terms, exponents in [lo, hi].
inline fibtop::LaurentPoly random_poly(std::mt19937_64& g, const fibtop::VarSet& vars, int terms, long lo, long hi,
                                       long coef = 3) {
  for (;;) {
    fibtop::LaurentPoly::TermMap t;
    int n = static_cast<int>(uniform(g, 1, terms));
    for (int k = 0; k < n; ++k) {
      fibtop::Exponents e(vars.size());
      for (auto& x : e) x = uniform(g, lo, hi);
      long c = uniform(g, -coef, coef);
      if (c == 0) c = 1;
      t[e] += c;
    }
    auto p = fibtop::LaurentPoly::from_terms(vars, t);
    if (!p.is_zero()) return p;
  }
}

}  // namespace fibtest
