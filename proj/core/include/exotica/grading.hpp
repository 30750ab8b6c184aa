#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exotica/gauss_rational.hpp"
#include "exotica/polynomial.hpp"

namespace exotica {

/// The real number a + b*sqrt(2) with a, b rational. Since sqrt(2) is
/// irrational the representation is unique, and the order is decided with
/// rational arithmetic only.
class DegreeValue {
 public:
  DegreeValue() = default;
  DegreeValue(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {  // NOLINT
    a_.canonicalize();
    b_.canonicalize();
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Sign of a + b*sqrt(2) as -1, 0, 1.
  int sign() const;

  DegreeValue& operator+=(const DegreeValue& o);
  DegreeValue& operator-=(const DegreeValue& o);
  friend DegreeValue operator+(DegreeValue x, const DegreeValue& y) { return x += y; }
  friend DegreeValue operator-(DegreeValue x, const DegreeValue& y) { return x -= y; }
  friend DegreeValue operator*(const Rational& s, const DegreeValue& x) { return {s * x.a_, s * x.b_}; }

  friend bool operator==(const DegreeValue& x, const DegreeValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const DegreeValue& x, const DegreeValue& y);

  /// "a", "b*sqrt2" or "a + b*sqrt2".
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

enum class Comparison { kLess, kEqual, kGreater };

Comparison degree_compare(const DegreeValue& p, const DegreeValue& q);

/// Parameters of the grading used for the hypersurface
/// u^m v + q_{k,l}(x, y, z).
struct WeightParams {
  long k = 0;
  long l = 0;
  long m = 0;
  long n = 1;
};

/// Weight degree function: each variable carries a DegreeValue and a
/// monomial gets the weighted sum of its exponents.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::map<std::string, DegreeValue> weights,
                            std::optional<WeightParams> params = std::nullopt)
      : weights_(std::move(weights)), params_(params) {}

  /// d_x = l, d_y = k, d_z = 0, d_u = -n*sqrt2, d_v = m*n*sqrt2 + k*l.
  static WeightAssignment hypersurface(long k, long l, long m, long n = 1);

  const std::map<std::string, DegreeValue>& weights() const { return weights_; }
  const std::optional<WeightParams>& params() const { return params_; }
  /// Throws Error(kUnknownVariable) for an unweighted variable.
  const DegreeValue& weight(const std::string& var) const;

  DegreeValue monomial_degree(const Monomial& m) const;

 private:
  std::map<std::string, DegreeValue> weights_;
  std::optional<WeightParams> params_;
};

/// Maximum weighted degree over the terms of f; nullopt (the -infinity
/// signal) for f == 0. Every variable occurring in f must be weighted.
std::optional<DegreeValue> weighted_degree(const Polynomial& f, const WeightAssignment& w);

/// Sum of the terms of f of maximal weighted degree.
/// Throws Error(kZeroPolynomial) for f == 0.
Polynomial principal_part(const Polynomial& f, const WeightAssignment& w);

/// True iff all terms share one weighted degree (the zero polynomial is
/// homogeneous).
bool is_homogeneous(const Polynomial& f, const WeightAssignment& w);

struct DominanceEntry {
  std::string label;  // "i*d_x+(i-1)*d_z" style description
  long index = 0;     // i or j
  long value = 0;
};

/// kl against every competing degree of q_{k,l}: 0, il (1 <= i < k) and
/// jk (1 <= j < l).
struct DominanceReport {
  long k = 0;
  long l = 0;
  long top = 0;          // kl
  long max_lower = 0;
  bool holds = false;
  std::vector<DominanceEntry> chain;
};

/// Requires k > l >= 3 and gcd(k, l) = 1; throws Error(kInvalidArgument).
DominanceReport verify_weight_dominance(long k, long l);

}  // namespace exotica
