#pragma once

#include <random>
#include <string>
#include <vector>

#include "exotica/polynomial.hpp"
#include "exotica/unipoly.hpp"

namespace exotica::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Integer-coefficient univariate polynomial of degree <= max_deg.
inline UniPoly random_unipoly(Rng& rng, long max_deg, long height) {
  std::vector<GaussRational> c(static_cast<std::size_t>(uniform(rng, 0, max_deg) + 1));
  for (auto& x : c) x = GaussRational(uniform(rng, -height, height));
  return UniPoly(std::move(c));
}

/// Gaussian-rational univariate polynomial, denominators up to 3.
inline UniPoly random_gauss_unipoly(Rng& rng, long max_deg, long height) {
  std::vector<GaussRational> c(static_cast<std::size_t>(uniform(rng, 0, max_deg) + 1));
  for (auto& x : c)
    x = GaussRational(Rational(uniform(rng, -height, height), uniform(rng, 1, 3)),
                      Rational(uniform(rng, -height, height), uniform(rng, 1, 3)));
  return UniPoly(std::move(c));
}

/// Sparse polynomial over `vars` with up to `max_terms` terms and each
/// exponent at most `max_exp`.
inline Polynomial random_poly(Rng& rng, const std::vector<std::string>& vars, int max_terms, unsigned max_exp,
                              long height, bool gaussian = false) {
  Polynomial f = Polynomial::zero(vars);
  int terms = static_cast<int>(uniform(rng, 1, max_terms));
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (const auto& v : vars) {
      auto e = static_cast<unsigned>(uniform(rng, 0, max_exp));
      if (e) m[v] = e;
    }
    GaussRational c(Rational(uniform(rng, -height, height), uniform(rng, 1, gaussian ? 4 : 1)),
                    gaussian ? Rational(uniform(rng, -height, height)) : Rational(0));
    f += Polynomial::term(c, m);
  }
  return f;
}

/// Degree of gcd(a, b) from the rank of the Sylvester matrix:
/// deg gcd = deg a + deg b - rank. Both inputs must be nonconstant.
inline std::size_t sylvester_gcd_degree(const UniPoly& a, const UniPoly& b) {
  const std::size_t p = *a.degree(), q = *b.degree();
  const std::size_t n = p + q;
  std::vector<std::vector<GaussRational>> rows;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<GaussRational> r(n);
    for (std::size_t j = 0; j <= p; ++j) r[i + j] = a.coeff(p - j);
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<GaussRational> r(n);
    for (std::size_t j = 0; j <= q; ++j) r[i + j] = b.coeff(q - j);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      GaussRational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return n - rank;
}

}  // namespace exotica::testing
