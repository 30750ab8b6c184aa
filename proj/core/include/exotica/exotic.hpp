#pragma once

#include <string>
#include <vector>

#include "exotica/derivation.hpp"
#include "exotica/polynomial.hpp"
#include "exotica/singularities.hpp"

namespace exotica {

/// Parameters of the hypersurface u^m v + q_{k,l}(x, y, z) = 0 in C^5.
struct ExoticParams {
  long k = 4;
  long l = 3;
  long m = 2;
  long n = 1;  // weight parameter, d_u = -n*sqrt2

  /// Throws Error(kInvalidArgument) unless m >= 2, k > l >= 3,
  /// gcd(k, l) = 1 and n >= 1.
  ExoticParams(long k, long l, long m, long n = 1);

  /// Skips validation; for negative controls such as m = 1.
  static ExoticParams unchecked(long k, long l, long m, long n = 1);

  std::string to_string() const;

 private:
  struct NoCheck {};
  ExoticParams(NoCheck, long k, long l, long m, long n) : k(k), l(l), m(m), n(n) {}
};

/// Outcome of one identity check. A failing report always carries at least
/// one nonzero residual in `witness`.
struct VerificationReport {
  std::string check;
  bool pass = false;
  std::vector<Polynomial> witness;
};

/// ((xz + 1)^k - (yz + 1)^l + z) / z, computed by exact division and by
/// the binomial sum; the two are compared and a mismatch throws
/// Error(kInternal). Accepts any k, l >= 1.
Polynomial build_q(long k, long l);

/// u^m v + q_{k,l} over the context (x, y, z, u, v).
Polynomial build_p(const ExoticParams& p);

/// u^m v + x^k z^(k-1) - y^l z^(l-1).
Polynomial principal_part_closed_form(const ExoticParams& p);

/// z^(l-1) (y^l - x^k z^(k-l)), the value of u^m v in the graded algebra.
Polynomial relation_rhs(const ExoticParams& p);

/// Both constructions of q agree, q(0) = 1, and q has k + l + 1 terms.
VerificationReport build_q_check(long k, long l);

/// Substitutes v := sign * q * u^(-m) into p, tracking u^(-m) as a formal
/// variable cancelled against u^m, and reports the residual. sign = -1
/// annihilates p; sign = +1 leaves 2q.
VerificationReport trivialization_check(const ExoticParams& p, int sign = -1);

/// p restricted to u = 0 is free of v and equals q_{k,l}.
VerificationReport fiber_F0_check(const ExoticParams& p);
/// Same check against a caller-supplied p (for tampered inputs).
VerificationReport fiber_F0_check(const ExoticParams& p, const Polynomial& poly);

/// The principal part of p for the weights with parameter p.n matches the
/// closed form.
VerificationReport principal_part_check(const ExoticParams& p);

/// Reduces every monomial u^a v^b with a >= m, b >= 1 by u^m v -> relation_rhs.
/// In the result, each monomial with positive v-exponent has u-exponent < m.
Polynomial normal_form_Ahat(const Polynomial& f, const ExoticParams& p);

/// Reduces z^m -> -(x^k + y^l) until deg_z < m.
Polynomial normal_form_B(const Polynomial& f, const BrieskornTriple& t);

/// The normal form of u^m v - relation_rhs vanishes.
VerificationReport relation_check(const ExoticParams& p);

/// The principal part at v = 1 equals u^m + z^(l-1)(x^k z^(k-l) - y^l).
VerificationReport specialization_check(const ExoticParams& p);

/// g = u^m + z^(l-1)(x^k z^(k-l) - y^l) and its partials in x, y, z, u all
/// vanish on z = u = 0. Fails for m = 1.
VerificationReport divisorial_singularity_check(const ExoticParams& p);

struct DivisibilityResult {
  bool g_is_zero = false;
  bool u_divides_eta = false;
};

/// Decides whether u^m zeta - q eta can be a multiple p*g: since the left
/// side is free of v while p is linear in v, this forces it to vanish, and
/// then u | eta. Throws Error(kInvalidArgument) if zeta or eta involve v.
DivisibilityResult proposition1_divisibility(const Polynomial& zeta, const Polynomial& eta,
                                             const ExoticParams& p);

/// uv - w^m.
Polynomial tm_polynomial(long m);
/// x = (u - v)/2, y = -i(u + v)/2, z = w sends x^2 + y^2 + z^m to -uv + w^m,
/// and u = x + iy, v = -(x - iy), w = z inverts it.
VerificationReport tm_isomorphism_check(long m);

/// u d/dw + m w^(m-1) d/dv and v d/dw + m w^(m-1) d/du.
Derivation alpha_derivation(long m);
Derivation beta_derivation(long m);
/// The closed-form actions (u, v + ((w + tu)^m - w^m)/u, w + tu) and
/// (u + ((w + tv)^m - w^m)/v, v, w + tv).
FlowMap alpha_formula(long m);
FlowMap beta_formula(long m);

/// exp of the derivation equals the closed form, preserves uv - w^m and
/// satisfies the group law. `which` is "alpha" or "beta".
VerificationReport tm_flow_check(long m, const std::string& which);

/// Every check above for one parameter set, in a fixed order. Checks run
/// concurrently; the order of the reports does not depend on scheduling.
std::vector<VerificationReport> verify_exotic(const ExoticParams& p);

}  // namespace exotica
