#include "exotica/singularities.hpp"

#include <algorithm>
#include <numeric>

#include "exotica/error.hpp"

namespace exotica {

namespace {

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(a, b), c); }
long lcm3(long a, long b, long c) { return std::lcm(std::lcm(a, b), c); }

// gcd that tolerates zero inputs: gcd(0, 0) is the zero polynomial.
UniPoly gcd_or_zero(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly(std::vector<GaussRational>{}, a.var());
  return uni_gcd(a, b);
}

}  // namespace

BrieskornTriple::BrieskornTriple(long k_, long l_, long m_) : k(k_), l(l_), m(m_) {
  if (k < 2 || l < 2 || m < 2)
    throw Error(ErrorCode::kInvalidArgument, "Brieskorn exponents must be >= 2, got " + to_string());
}

std::array<long, 3> BrieskornTriple::sorted() const {
  std::array<long, 3> s{k, l, m};
  std::sort(s.begin(), s.end());
  return s;
}

Polynomial BrieskornTriple::surface() const {
  Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y"), z = Polynomial::variable("z");
  return (x.pow(k) + y.pow(l) + z.pow(m)).with_variables({"x", "y", "z"});
}

std::string BrieskornTriple::to_string() const {
  return "(" + std::to_string(k) + ", " + std::to_string(l) + ", " + std::to_string(m) + ")";
}

WeightedSurfaceData::WeightedSurfaceData(long q0_, long q1_, long q2_, long d_)
    : q0(q0_), q1(q1_), q2(q2_), d(d_) {
  if (q0 <= 0 || q1 <= 0 || q2 <= 0 || d <= 0)
    throw Error(ErrorCode::kInvalidArgument, "weights and degree must be positive");
  if (gcd3(q0, q1, q2) != 1) throw Error(ErrorCode::kInvalidArgument, "gcd(q0, q1, q2) != 1");
  if (d % q0 != 0 || d % q1 != 0 || d % q2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "d must be divisible by each weight");
}

const char* to_string(Richness r) { return r == Richness::kA1Poor ? "A1Poor" : "A1Rich"; }

RichnessVerdict halphen_classify(const BrieskornTriple& t) {
  RichnessVerdict v;
  v.criterion = Rational(1, t.k) + Rational(1, t.l) + Rational(1, t.m);
  v.verdict = v.criterion > 1 ? Richness::kA1Rich : Richness::kA1Poor;
  return v;
}

std::string PlatonicType::to_string() const {
  switch (kind) {
    case PlatonicKind::kDihedral: return "Dihedral(" + std::to_string(order) + ")";
    case PlatonicKind::kTetrahedral: return "Tetrahedral";
    case PlatonicKind::kOctahedral: return "Octahedral";
    case PlatonicKind::kIcosahedral: return "Icosahedral";
    case PlatonicKind::kNotPlatonic: return "NotPlatonic";
  }
  return "NotPlatonic";
}

PlatonicType platonic_type(const BrieskornTriple& t) {
  auto s = t.sorted();
  if (s[0] == 2 && s[1] == 2) return {PlatonicKind::kDihedral, s[2]};
  if (s[0] == 2 && s[1] == 3) {
    if (s[2] == 3) return {PlatonicKind::kTetrahedral, 0};
    if (s[2] == 4) return {PlatonicKind::kOctahedral, 0};
    if (s[2] == 5) return {PlatonicKind::kIcosahedral, 0};
  }
  return {PlatonicKind::kNotPlatonic, 0};
}

bool lnd_exists(const BrieskornTriple& t) {
  auto s = t.sorted();
  return s[0] == 2 && s[1] == 2;
}

Rational genus_quotient(const WeightedSurfaceData& w) {
  Rational d(w.d);
  Rational lcm_sum = Rational(1, std::lcm(w.q0, w.q1)) + Rational(1, std::lcm(w.q0, w.q2)) +
                     Rational(1, std::lcm(w.q1, w.q2));
  Rational g = (d * d / Rational(w.q0 * w.q1 * w.q2) - d * lcm_sum + 2) / 2;
  g.canonicalize();
  return g;
}

WeightClassification quasirational_by_weights(const WeightedSurfaceData& w) {
  WeightClassification c;
  const long q01 = std::gcd(w.q0, w.q1);
  const long q02 = std::gcd(w.q0, w.q2);
  const long q12 = std::gcd(w.q1, w.q2);
  c.pairwise = {q01, q02, q12};
  c.primes = {w.q0 / (q01 * q02), w.q1 / (q01 * q12), w.q2 / (q02 * q12)};
  const long lcm = q01 * q02 * q12 * c.primes[0] * c.primes[1] * c.primes[2];
  if (lcm != lcm3(w.q0, w.q1, w.q2))
    throw Error(ErrorCode::kInternal, "pairwise-gcd decomposition does not reproduce the lcm");
  c.rho = w.d / lcm;

  const long ones = std::count(c.primes.begin(), c.primes.end(), 1L);
  if (c.rho == 1 && ones >= 2) {
    c.quasirational = true;
    c.condition = QuasirationalCondition::kI;
  } else if (c.rho == 2 && ones == 3) {
    c.quasirational = true;
    c.condition = QuasirationalCondition::kII;
  }
  if (c.quasirational) {
    // The weight carrying s plays the role of qrs; p is the gcd of the
    // other two weights.
    std::size_t s_at = 2;
    for (std::size_t i = 0; i < 3; ++i)
      if (c.primes[i] != 1) s_at = i;
    switch (s_at) {
      case 0: c.pqrs = {q12, q01, q02, c.primes[0]}; break;
      case 1: c.pqrs = {q02, q01, q12, c.primes[1]}; break;
      default: c.pqrs = {q01, q02, q12, c.primes[2]}; break;
    }
  }
  return c;
}

WeightedSurfaceData brieskorn_weights(const BrieskornTriple& t) {
  const long rho = gcd3(t.k, t.l, t.m);
  const long k = t.k / rho, l = t.l / rho, m = t.m / rho;
  const long d0 = std::gcd(k, l) * std::gcd(k, m) * std::gcd(l, m);
  const long q0 = l * m / d0, q1 = k * m / d0, q2 = k * l / d0;
  const long d = t.k * q0;
  if (d != t.l * q1 || d != t.m * q2 || d != lcm3(t.k, t.l, t.m))
    throw Error(ErrorCode::kInternal, "Brieskorn weights inconsistent for " + t.to_string());
  return WeightedSurfaceData(q0, q1, q2, d);
}

BrieskornClassification quasirational_brieskorn(const BrieskornTriple& t) {
  const long k = t.k, l = t.l, m = t.m;
  if (std::gcd(k, l * m) == 1 || std::gcd(l, k * m) == 1 || std::gcd(m, k * l) == 1)
    return {true, BrieskornCondition::kIPrime};
  if (std::gcd(k, l) == 2 && std::gcd(k, m) == 2 && std::gcd(l, m) == 2)
    return {true, BrieskornCondition::kIIPrime};
  return {false, BrieskornCondition::kNone};
}

SchmidtPredicates schmidt_predicates(long m, long d) {
  if (m < 2 || d < 2) throw Error(ErrorCode::kInvalidArgument, "schmidt_predicates needs m, d >= 2");
  SchmidtPredicates p;
  p.original_hypothesis = (m >= 4 && d >= 3) || (m == 3 && d >= 5) || (m == 2 && d >= 17);
  p.quasirational = d == 2 || std::gcd(m, d) == 1;
  p.sharpened = d >= 3 && !(d == 3 && m == 2);
  return p;
}

std::vector<SchmidtGap> schmidt_gaps(long max_m, long max_d) {
  std::vector<SchmidtGap> out;
  for (long m = 2; m <= max_m; ++m) {
    for (long d = 2; d <= max_d; ++d) {
      auto p = schmidt_predicates(m, d);
      if (!p.original_hypothesis && p.quasirational) out.push_back({m, d, m >= 4 && d == 2});
    }
  }
  return out;
}

CurveReport curve_verify(const ParametrizedCurve& c, const BrieskornTriple& t) {
  if (c.x.is_constant() && c.y.is_constant() && c.z.is_constant())
    throw Error(ErrorCode::kAllConstant, "curve components are all constant");
  CurveReport r;
  UniPoly lhs = c.x.pow(static_cast<unsigned>(t.k)) + c.y.pow(static_cast<unsigned>(t.l)) +
                c.z.pow(static_cast<unsigned>(t.m));
  r.on_surface = lhs.is_zero();
  r.pairwise_gcds = {gcd_or_zero(c.x, c.y), gcd_or_zero(c.x, c.z), gcd_or_zero(c.y, c.z)};
  UniPoly common = gcd_or_zero(r.pairwise_gcds[0], c.z);
  r.hits_origin = common.is_zero() || !common.is_constant();

  WeightedSurfaceData w = brieskorn_weights(t);
  r.diagonal = monic_root(c.x, static_cast<unsigned>(w.q0)).has_value() &&
               monic_root(c.y, static_cast<unsigned>(w.q1)).has_value() &&
               monic_root(c.z, static_cast<unsigned>(w.q2)).has_value();
  return r;
}

ParametrizedCurve dihedral_curve(long m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "dihedral_curve needs m >= 2");
  const auto um = static_cast<unsigned>(m);
  GaussRational half(Rational(1, 2));
  GaussRational minus_half_i(Rational(0), Rational(-1, 2));
  UniPoly tm = UniPoly::monomial(um);
  UniPoly one(GaussRational(1));
  ParametrizedCurve c;
  c.x = (tm - one) * UniPoly(half);
  c.y = (tm + one) * UniPoly(minus_half_i);
  c.z = UniPoly::monomial(1);
  return c;
}

bool claim_support_check(const Polynomial& f, const BrieskornTriple& t) {
  if (std::gcd(t.m, t.k * t.l) != 1)
    throw Error(ErrorCode::kInvalidArgument, "claim_support_check needs gcd(m, kl) = 1");
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "claim_support_check needs f != 0");
  for (const auto& v : f.variables())
    if (v != "x" && v != "y" && v != "z" && f.depends_on(v))
      throw Error(ErrorCode::kInvalidArgument, "unexpected variable '" + v + "'");

  struct Exps {
    long i, j, s;
  };
  std::vector<Exps> support;
  for (const auto& [e, c] : f.terms()) {
    Monomial mono = f.monomial(e);
    auto get = [&](const char* v) {
      auto it = mono.find(v);
      return it == mono.end() ? 0L : static_cast<long>(it->second);
    };
    support.push_back({get("x"), get("y"), get("z")});
  }
  // Homogeneity for weights (1/k, 1/l, 1/m), scaled by klm to stay integral.
  auto scaled = [&](const Exps& e) { return e.i * t.l * t.m + e.j * t.k * t.m + e.s * t.k * t.l; };
  for (const auto& e : support) {
    if (scaled(e) != scaled(support.front()))
      throw Error(ErrorCode::kInvalidArgument, "f is not homogeneous for weights (1/k, 1/l, 1/m)");
    if (e.s >= t.m) throw Error(ErrorCode::kInvalidArgument, "claim_support_check needs deg_z f < m");
  }

  const long g = std::gcd(t.k, t.l);
  const long kp = t.k / g, lp = t.l / g;
  const Exps& ref = support.front();
  for (const auto& e : support) {
    if (e.s != ref.s) return false;
    long di = e.i - ref.i, dj = ref.j - e.j;
    if (di % kp != 0 || dj % lp != 0 || di / kp != dj / lp) return false;
  }
  return true;
}

}  // namespace exotica
