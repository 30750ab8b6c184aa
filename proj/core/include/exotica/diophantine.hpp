#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exotica/unipoly.hpp"

namespace exotica {

/// Outcome of the abc inequality max(deg a, deg b, deg c) <= d0(abc) - 1.
struct AbcReport {
  long max_deg = 0;
  long d0_abc = 0;
  bool holds = false;  // max_deg <= d0_abc - 1
  bool tight = false;  // max_deg == d0_abc - 1
};

/// Checks the polynomial abc inequality for a + b + c = 0, gcd(a, b) = 1,
/// not all constant. Hypothesis violations throw Error with kSumNonzero,
/// kAllConstant or kCommonFactor.
AbcReport mason_verify(const UniPoly& a, const UniPoly& b, const UniPoly& c);

/// Davenport's gap bound for z = x^k - y^l with deg x = l*m, deg y = k*m:
/// n = deg z must exceed m(kl - k - l).
struct DavenportReport {
  long n = 0;
  long m = 0;
  long k = 0;
  long l = 0;
  long bound = 0;  // m(kl - k - l)
  bool holds = false;
};

/// Throws Error on hypothesis violations: kInvalidArgument (gcd(k, l) != 1),
/// kZeroDifference (z == 0), kCommonFactor (gcd(x, y) != 1), kDegreeGap
/// (no cancellation of the top degree), kShapeMismatch (no integer m).
DavenportReport davenport_verify(const UniPoly& x, const UniPoly& y, long k, long l);

struct DavenportWitness {
  long n = 0;  // deg(x^k - y^l), the minimum over the scanned box
  UniPoly x;
  UniPoly y;
  DavenportReport report;
  std::uint64_t candidates = 0;  // size of the scanned coefficient box
};

/// Exhaustive scan over monic integer x of degree l*m and monic y of degree
/// k*m with non-leading coefficients in [-height, height]. Returns the
/// minimal deg(x^k - y^l) among pairs with gcd(x, y) = 1 and z != 0, with
/// the lexicographically smallest coefficient vector (x from the top
/// coefficient down, then y) as witness; nullopt if no pair qualifies.
///
/// The scan is split over `threads` workers (0 = hardware concurrency);
/// the result does not depend on the split.
std::optional<DavenportWitness> davenport_search(long k, long l, long m, long height,
                                                 unsigned threads = 0);

}  // namespace exotica
