#pragma once

#include <map>
#include <string>
#include <variant>

#include "exotica/polynomial.hpp"

namespace exotica {

/// A derivation of a polynomial ring, given by the images of the variables
/// and extended by linearity and the Leibniz rule.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::map<std::string, Polynomial> images) : images_(std::move(images)) {}

  /// The zero derivation on the listed variables.
  static Derivation zero(const std::vector<std::string>& vars);

  const std::map<std::string, Polynomial>& images() const { return images_; }
  /// Throws Error(kUnknownVariable) when `var` has no image.
  const Polynomial& image(const std::string& var) const;

  /// D(f) = sum over v of (df/dv) * D(v). Throws Error(kUnknownVariable)
  /// if f depends on a variable outside the derivation's domain.
  Polynomial apply(const Polynomial& f) const;

 private:
  std::map<std::string, Polynomial> images_;
};

/// Result of deg_D: -infinity for f == 0, a finite degree, or no
/// termination observed within the bound.
struct LndDegree {
  enum class Kind { kNegInfinity, kFinite, kUnbounded };
  Kind kind = Kind::kNegInfinity;
  int value = 0;  // meaningful for kFinite

  static LndDegree neg_infinity() { return {Kind::kNegInfinity, 0}; }
  static LndDegree finite(int v) { return {Kind::kFinite, v}; }
  static LndDegree unbounded() { return {Kind::kUnbounded, 0}; }

  bool is_finite() const { return kind == Kind::kFinite; }
  friend bool operator==(const LndDegree&, const LndDegree&) = default;
};

/// max { n <= bound : D^n f != 0 } provided D^(bound+1) f == 0.
LndDegree deg_lnd(const Derivation& d, const Polynomial& f, int bound);

enum class Nilpotency { kYes, kNoEvidenceWithinBound };

/// kYes iff every variable is killed by some power D^n with n <= bound + 1.
/// This certifies local nilpotency (D^n of a product is controlled by the
/// Leibniz rule); a negative answer is only inconclusive.
Nilpotency is_locally_nilpotent(const Derivation& d, int bound);

/// A one-parameter family of polynomial maps: var -> image(var, t).
class FlowMap {
 public:
  FlowMap() = default;
  FlowMap(std::map<std::string, Polynomial> images, std::string time_var)
      : images_(std::move(images)), time_(std::move(time_var)) {}

  static FlowMap identity(const std::vector<std::string>& vars, std::string time_var = "t");

  const std::map<std::string, Polynomial>& images() const { return images_; }
  const std::string& time_variable() const { return time_; }

  /// The map at a fixed time value (a polynomial in other variables).
  std::map<std::string, Polynomial> at(const Polynomial& time) const;

 private:
  std::map<std::string, Polynomial> images_;
  std::string time_ = "t";
};

/// v -> sum_j t^j/j! D^j(v). Throws Error(kNotNilpotent) unless
/// is_locally_nilpotent(d, bound) == kYes, and Error(kInvalidArgument) if
/// `time_var` clashes with a variable of the derivation.
FlowMap exp_flow(const Derivation& d, int bound, const std::string& time_var = "t");

/// F_s o F_t == F_{s+t} as a polynomial identity in two fresh time variables.
bool flow_group_law(const FlowMap& f);

/// f(F_t(x)) == f(x) identically.
bool preserves_hypersurface(const FlowMap& flow, const Polynomial& f);
/// D(f) lies in the ideal (f): D(f) == 0 or f divides D(f).
bool preserves_hypersurface(const Derivation& d, const Polynomial& f);

}  // namespace exotica
