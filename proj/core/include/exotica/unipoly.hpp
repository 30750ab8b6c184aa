#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotica/gauss_rational.hpp"
#include "exotica/polynomial.hpp"

namespace exotica {

/// Dense univariate polynomial over Q(i) in a single named variable.
/// coeffs()[j] is the coefficient of t^j; the top coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussRational> coeffs, std::string var = "t");
  UniPoly(const GaussRational& c, std::string var = "t");  // NOLINT

  /// x^k in `var`.
  static UniPoly monomial(unsigned k, const GaussRational& c = 1, std::string var = "t");
  /// Throws Error(kNotUnivariate) if `p` uses a variable other than `var`.
  static UniPoly from_polynomial(const Polynomial& p, const std::string& var = "t");
  Polynomial to_polynomial() const;

  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// nullopt is the -infinity degree of the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Leading coefficient; zero for the zero polynomial.
  GaussRational leading() const;
  GaussRational coeff(std::size_t j) const;
  GaussRational evaluate(const GaussRational& at) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(unsigned e) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  void normalize();

  std::vector<GaussRational> coeffs_;
  std::string var_ = "t";
};

/// Quotient and remainder; throws Error(kDivisionByZero) for b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<UniPoly> exact_divide(const UniPoly& a, const UniPoly& b);

/// Monic gcd. gcd(a, 0) = monic(a); both zero throws Error(kZeroPolynomial).
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree part a / gcd(a, a'), monic. Throws on zero input.
UniPoly radical(const UniPoly& a);

/// Number of distinct complex roots of a (degree of its radical).
std::size_t distinct_root_count(const UniPoly& a);

/// If `a` equals c * g^e for a polynomial g, returns a monic such g.
/// Over C the monic e-th root of a monic polynomial is unique and has
/// coefficients in the field generated by those of the input.
std::optional<UniPoly> monic_root(const UniPoly& a, unsigned e);

}  // namespace exotica
