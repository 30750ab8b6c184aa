#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "exotica/gauss_rational.hpp"

namespace exotica {

/// Sparse monomial: variable name -> positive exponent. The empty map is
/// the constant monomial; zero exponents are never stored.
using Monomial = std::map<std::string, unsigned>;

/// Exact sparse multivariate polynomial over Q(i).
///
/// A polynomial carries an ordered variable context; terms are keyed by a
/// dense exponent vector aligned with that context. Operands with different
/// contexts are aligned on the fly (the left operand's order wins, new
/// variables are appended). Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps agree after alignment.
///
/// Terms are ordered graded-lexicographically on the context order; the
/// printer emits them from the largest term down.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, GaussRational, GrlexLess>;

  Polynomial() = default;
  Polynomial(long c) : Polynomial(GaussRational(c)) {}  // NOLINT
  Polynomial(const GaussRational& c);  // NOLINT(google-explicit-constructor)

  /// The zero polynomial over the given context.
  static Polynomial zero(std::vector<std::string> variables);
  static Polynomial variable(const std::string& name);
  static Polynomial term(const GaussRational& c, const Monomial& m);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRational constant_term() const;
  GaussRational coefficient(const Monomial& m) const;
  Monomial monomial(const Exponents& e) const;

  /// Index of a variable in the context, or nullopt.
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool depends_on(const std::string& name) const;
  /// Highest exponent of `name`; nullopt for the zero polynomial.
  std::optional<unsigned> degree_in(const std::string& name) const;
  std::optional<unsigned> total_degree() const;

  /// Re-expresses the polynomial over `order`, which must contain every
  /// variable that actually occurs.
  Polynomial with_variables(const std::vector<std::string>& order) const;
  /// Drops context variables that do not occur in any term.
  Polynomial trimmed() const;

  /// Coefficients of `f` viewed as a polynomial in `name`:
  /// result[j] is the coefficient of name^j.
  std::vector<Polynomial> coefficients_in(const std::string& name) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Integer power; throws Error(kNegativeExponent) when e < 0.
  Polynomial pow(long e) const;

  /// Canonical text form, parseable by parse_polynomial.
  std::string to_string() const;

  /// Grlex-largest term; the polynomial must be nonzero.
  const TermMap::value_type& leading_term() const;

 private:
  void add_term(const Exponents& e, const GaussRational& c);
  Polynomial aligned(const std::vector<std::string>& order) const;
  static std::vector<std::string> merge_context(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Simultaneous substitution; unbound variables pass through.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings);

/// Returns q with f == g*q, or nullopt when g does not divide f.
/// Throws Error(kDivisionByZero) when g is zero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

Polynomial partial_derivative(const Polynomial& f, const std::string& var);

/// f evaluated with the listed variables set to zero.
Polynomial restrict_to_zero(const Polynomial& f, const std::vector<std::string>& vars);

}  // namespace exotica
