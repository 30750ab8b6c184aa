#include "exotica/grading.hpp"

#include <algorithm>
#include <numeric>

#include "exotica/error.hpp"

namespace exotica {

int DegreeValue::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: |a| versus |b|*sqrt2, i.e. a^2 versus 2b^2.
  int c = cmp(a_ * a_, 2 * b_ * b_);
  if (c == 0) throw Error(ErrorCode::kInternal, "a^2 == 2b^2 with a, b != 0 is impossible");
  return c > 0 ? sa : sb;
}

DegreeValue& DegreeValue::operator+=(const DegreeValue& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

DegreeValue& DegreeValue::operator-=(const DegreeValue& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

std::strong_ordering operator<=>(const DegreeValue& x, const DegreeValue& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DegreeValue::to_string() const {
  if (sgn(b_) == 0) return rational_to_string(a_);
  std::string root = b_ == 1 ? "sqrt2" : b_ == -1 ? "-sqrt2" : rational_to_string(b_) + "*sqrt2";
  if (sgn(a_) == 0) return root;
  if (sgn(b_) < 0) {
    Rational nb = -b_;
    return rational_to_string(a_) + " - " + (nb == 1 ? "sqrt2" : rational_to_string(nb) + "*sqrt2");
  }
  return rational_to_string(a_) + " + " + root;
}

Comparison degree_compare(const DegreeValue& p, const DegreeValue& q) {
  int s = (p - q).sign();
  return s < 0 ? Comparison::kLess : s > 0 ? Comparison::kGreater : Comparison::kEqual;
}

WeightAssignment WeightAssignment::hypersurface(long k, long l, long m, long n) {
  std::map<std::string, DegreeValue> w;
  w["x"] = DegreeValue(l);
  w["y"] = DegreeValue(k);
  w["z"] = DegreeValue(0);
  w["u"] = DegreeValue(0, -n);
  w["v"] = DegreeValue(Rational(k * l), Rational(m * n));
  return WeightAssignment(std::move(w), WeightParams{k, l, m, n});
}

const DegreeValue& WeightAssignment::weight(const std::string& var) const {
  auto it = weights_.find(var);
  if (it == weights_.end()) throw Error(ErrorCode::kUnknownVariable, "no weight for variable '" + var + "'");
  return it->second;
}

DegreeValue WeightAssignment::monomial_degree(const Monomial& m) const {
  DegreeValue d;
  for (const auto& [var, e] : m) d += Rational(e) * weight(var);
  return d;
}

namespace {

// Weighted degree of every term, in the polynomial's term order.
std::vector<DegreeValue> term_degrees(const Polynomial& f, const WeightAssignment& w) {
  std::vector<DegreeValue> weights;
  for (const auto& v : f.variables())
    weights.push_back(f.depends_on(v) ? w.weight(v) : DegreeValue());
  std::vector<DegreeValue> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    DegreeValue d;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) d += Rational(e[i]) * weights[i];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::optional<DegreeValue> weighted_degree(const Polynomial& f, const WeightAssignment& w) {
  if (f.is_zero()) return std::nullopt;
  auto degs = term_degrees(f, w);
  return *std::max_element(degs.begin(), degs.end());
}

Polynomial principal_part(const Polynomial& f, const WeightAssignment& w) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "principal part of the zero polynomial");
  auto degs = term_degrees(f, w);
  const DegreeValue& top = *std::max_element(degs.begin(), degs.end());
  Polynomial out = Polynomial::zero(f.variables());
  std::size_t i = 0;
  for (const auto& [e, c] : f.terms()) {
    if (degs[i++] == top) out += Polynomial::term(c, f.monomial(e)).with_variables(f.variables());
  }
  return out;
}

bool is_homogeneous(const Polynomial& f, const WeightAssignment& w) {
  auto degs = term_degrees(f, w);
  return std::all_of(degs.begin(), degs.end(), [&](const DegreeValue& d) { return d == degs.front(); });
}

DominanceReport verify_weight_dominance(long k, long l) {
  if (!(k > l && l >= 3))
    throw Error(ErrorCode::kInvalidArgument, "weight dominance needs k > l >= 3");
  if (std::gcd(k, l) != 1) throw Error(ErrorCode::kInvalidArgument, "weight dominance needs gcd(k, l) = 1");
  DominanceReport r;
  r.k = k;
  r.l = l;
  r.top = k * l;
  r.chain.push_back({"constant", 0, 0});
  for (long i = 1; i < k; ++i) r.chain.push_back({"i*d_x+(i-1)*d_z", i, i * l});
  for (long j = 1; j < l; ++j) r.chain.push_back({"j*d_y+(j-1)*d_z", j, j * k});
  for (const auto& e : r.chain) r.max_lower = std::max(r.max_lower, e.value);
  r.holds = r.top > r.max_lower;
  return r;
}

}  // namespace exotica
