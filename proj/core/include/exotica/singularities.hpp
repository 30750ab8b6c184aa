#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exotica/gauss_rational.hpp"
#include "exotica/polynomial.hpp"
#include "exotica/unipoly.hpp"

namespace exotica {

/// Exponents of the Pham-Brieskorn surface x^k + y^l + z^m = 0.
struct BrieskornTriple {
  long k = 2;
  long l = 2;
  long m = 2;

  /// Throws Error(kInvalidArgument) unless every exponent is >= 2.
  BrieskornTriple(long k, long l, long m);

  std::array<long, 3> sorted() const;
  /// x^k + y^l + z^m over the context (x, y, z).
  Polynomial surface() const;
  std::string to_string() const;
};

/// Weights and degree of a quasihomogeneous surface
/// f(s^q0 x, s^q1 y, s^q2 z) = s^d f(x, y, z).
struct WeightedSurfaceData {
  long q0 = 1;
  long q1 = 1;
  long q2 = 1;
  long d = 1;

  /// Throws Error(kInvalidArgument) unless all entries are positive,
  /// gcd(q0, q1, q2) = 1 and each qi divides d.
  WeightedSurfaceData(long q0, long q1, long q2, long d);
};

enum class Richness { kA1Poor, kA1Rich };
const char* to_string(Richness r);

struct RichnessVerdict {
  Richness verdict = Richness::kA1Poor;
  Rational criterion;  // 1/k + 1/l + 1/m; rich iff > 1
};

/// Poor iff 1/k + 1/l + 1/m <= 1.
RichnessVerdict halphen_classify(const BrieskornTriple& t);

enum class PlatonicKind { kDihedral, kTetrahedral, kOctahedral, kIcosahedral, kNotPlatonic };

struct PlatonicType {
  PlatonicKind kind = PlatonicKind::kNotPlatonic;
  long order = 0;  // the m of a dihedral {2, 2, m}
  std::string to_string() const;
};

PlatonicType platonic_type(const BrieskornTriple& t);

/// A nontrivial C+-action exists exactly on the dihedral surfaces {2, 2, m}.
bool lnd_exists(const BrieskornTriple& t);

/// Genus of the orbit curve S* / C*:
/// (d^2/(q0 q1 q2) - d(1/[q0,q1] + 1/[q0,q2] + 1/[q1,q2]) + 2) / 2.
Rational genus_quotient(const WeightedSurfaceData& w);

enum class QuasirationalCondition { kNone, kI, kII };

struct WeightClassification {
  bool quasirational = false;
  QuasirationalCondition condition = QuasirationalCondition::kNone;
  long rho = 0;                 // d / lcm(q0, q1, q2)
  std::array<long, 3> primes{};  // q0', q1', q2'
  std::array<long, 3> pairwise{};  // q01, q02, q12
  // (p, q, r, s) with (q0, q1, q2) a reordering of (pq, pr, qrs); s = 1 for (ii).
  std::array<long, 4> pqrs{};
};

/// Decides conditions (i) d = lcm with (q0', q1', q2') ~ (1, 1, s) and
/// (ii) d = 2 lcm with (q0', q1', q2') = (1, 1, 1), using the pairwise-gcd
/// decomposition q0 = q01 q02 q0' etc.
WeightClassification quasirational_by_weights(const WeightedSurfaceData& w);

/// Weights making x^k + y^l + z^m quasihomogeneous with gcd 1; the degree
/// is lcm(k, l, m). Throws Error(kInternal) if k q0 = l q1 = m q2 fails.
WeightedSurfaceData brieskorn_weights(const BrieskornTriple& t);

enum class BrieskornCondition { kNone, kIPrime, kIIPrime };

struct BrieskornClassification {
  bool quasirational = false;
  BrieskornCondition condition = BrieskornCondition::kNone;
};

/// (i') gcd(a, b*c) = 1 for some choice of a among k, l, m, or
/// (ii') all pairwise gcds equal 2.
BrieskornClassification quasirational_brieskorn(const BrieskornTriple& t);

struct SchmidtPredicates {
  bool original_hypothesis = false;  // m>=4,d>=3 | m=3,d>=5 | m=2,d>=17
  bool quasirational = false;        // d == 2 or gcd(m, d) == 1
  bool sharpened = false;            // d >= 3 and (d, m) != (3, 2)
};

/// For z^m = f_d(x, y) with f_d squarefree homogeneous; needs m, d >= 2.
SchmidtPredicates schmidt_predicates(long m, long d);

/// Pairs (m, d) not covered by the original hypothesis whose singularity is
/// quasirational, so the poorness conclusion may fail there.
struct SchmidtGap {
  long m = 0;
  long d = 0;
  bool d2_family = false;  // m >= 4, d = 2: absent from the classical list
};
std::vector<SchmidtGap> schmidt_gaps(long max_m, long max_d);

/// Polynomial curve t -> (x(t), y(t), z(t)).
struct ParametrizedCurve {
  UniPoly x;
  UniPoly y;
  UniPoly z;
};

struct CurveReport {
  bool on_surface = false;
  std::array<UniPoly, 3> pairwise_gcds;  // gcd(x,y), gcd(x,z), gcd(y,z)
  bool hits_origin = false;
  bool diagonal = false;  // components are qi-th powers (sufficient test only)
};

/// Throws Error(kAllConstant) if the three components are constant.
CurveReport curve_verify(const ParametrizedCurve& c, const BrieskornTriple& t);

/// x = (t^m - 1)/2, y = -i(t^m + 1)/2, z = t on x^2 + y^2 + z^m = 0.
ParametrizedCurve dihedral_curve(long m);

struct CurveSearchOptions {
  long max_deg = 1;
  long height = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct FoundCurve {
  ParametrizedCurve curve;
  bool hits_origin = false;
};

/// Every triple of polynomials with Gaussian-integer coefficients of
/// real/imaginary part in [-height, height] and degree <= max_deg that lies
/// on the surface, excluding triples of constants. Sorted by the degree
/// triple (zero polynomial first), then lexicographically by coefficients.
std::vector<FoundCurve> curve_search(const BrieskornTriple& t, const CurveSearchOptions& opts);

/// Checks that the support of a d'-homogeneous f (weights 1/k, 1/l, 1/m,
/// deg_z f < m) fits c x^a y^b z^g prod(x^k' - c_i y^l'): a single z
/// exponent, and x/y exponent steps that are matching multiples of
/// k' = k/gcd(k,l), l' = l/gcd(k,l). Throws Error(kInvalidArgument) when
/// gcd(m, kl) != 1, f == 0, f is not homogeneous or deg_z f >= m.
bool claim_support_check(const Polynomial& f, const BrieskornTriple& t);

}  // namespace exotica
