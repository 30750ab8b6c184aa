#include "exotica/unipoly.hpp"

#include "exotica/error.hpp"

namespace exotica {

UniPoly::UniPoly(std::vector<GaussRational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  normalize();
}

UniPoly::UniPoly(const GaussRational& c, std::string var) : var_(std::move(var)) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(unsigned k, const GaussRational& c, std::string var) {
  std::vector<GaussRational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, const std::string& var) {
  for (const auto& v : p.variables())
    if (v != var && p.depends_on(v))
      throw Error(ErrorCode::kNotUnivariate,
                  "expected a polynomial in '" + var + "' only, found '" + v + "'");
  std::vector<GaussRational> c;
  for (const auto& [e, coef] : p.terms()) {
    Monomial m = p.monomial(e);
    unsigned k = m.empty() ? 0 : m.begin()->second;
    if (c.size() <= k) c.resize(k + 1);
    c[k] = coef;
  }
  return UniPoly(std::move(c), var);
}

Polynomial UniPoly::to_polynomial() const {
  Polynomial out = Polynomial::zero({var_});
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    Monomial m;
    if (j) m[var_] = static_cast<unsigned>(j);
    out += Polynomial::term(coeffs_[j], m);
  }
  return out;
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

GaussRational UniPoly::leading() const { return coeffs_.empty() ? GaussRational() : coeffs_.back(); }

GaussRational UniPoly::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : GaussRational();
}

GaussRational UniPoly::evaluate(const GaussRational& at) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty() || coeffs_.back().is_one()) return *this;
  GaussRational inv = coeffs_.back().inverse();
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(std::vector<GaussRational>{}, var_);
  std::vector<GaussRational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    d[j - 1] = coeffs_[j] * GaussRational(static_cast<long>(j));
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(GaussRational(1), var_);
  UniPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(std::vector<GaussRational>{}, a.var_);
  std::vector<GaussRational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r), a.var_);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<GaussRational> rem = a.coeffs();
  const auto& d = b.coeffs();
  std::size_t db = d.size() - 1;
  if (rem.size() < d.size()) return {UniPoly(std::vector<GaussRational>{}, a.var()), a};
  std::vector<GaussRational> quot(rem.size() - db);
  GaussRational inv = d.back().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GaussRational c = rem[k] * inv;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * d[j];
  }
  return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

std::optional<UniPoly> exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "gcd(0, 0) is undefined");
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly radical(const UniPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "radical of the zero polynomial");
  if (a.is_constant()) return UniPoly(GaussRational(1), a.var());
  UniPoly g = uni_gcd(a, a.derivative());
  return exact_divide(a, g)->monic();
}

std::size_t distinct_root_count(const UniPoly& a) { return *radical(a).degree(); }

std::optional<UniPoly> monic_root(const UniPoly& a, unsigned e) {
  if (e == 0) throw Error(ErrorCode::kInvalidArgument, "root of order zero");
  if (a.is_zero()) return a;
  std::size_t n = *a.degree();
  if (n % e != 0) return std::nullopt;
  std::size_t d = n / e;
  UniPoly target = a.monic();
  // Fix the coefficients of the root from the top down: the coefficient of
  // t^(n-j) in g^e is e*g_{d-j} plus terms in higher coefficients of g.
  std::vector<GaussRational> g(d + 1);
  g[d] = 1;
  GaussRational inv_e = GaussRational(1) / GaussRational(static_cast<long>(e));
  for (std::size_t j = 1; j <= d; ++j) {
    UniPoly partial(g, a.var());
    GaussRational residual = target.coeff(n - j) - partial.pow(e).coeff(n - j);
    g[d - j] = residual * inv_e;
  }
  UniPoly root(std::move(g), a.var());
  if (root.pow(e) != target) return std::nullopt;
  return root;
}

}  // namespace exotica
