#include "exotica/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "exotica/error.hpp"

namespace exotica {

namespace {

std::uint64_t degree_sum(const Polynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Formats one term for the canonical printer. `mono` is empty for the
// constant term.
std::string format_term(const GaussRational& c, const std::string& mono, bool lone) {
  if (mono.empty()) {
    std::string s = c.to_string();
    if (!lone && sgn(c.re()) != 0 && sgn(c.im()) != 0) return "(" + s + ")";
    return s;
  }
  if (c.is_one()) return mono;
  if (c.is_real()) {
    if (c.re() == -1) return "-" + mono;
    return rational_to_string(c.re()) + "*" + mono;
  }
  if (sgn(c.re()) == 0) return c.to_string() + "*" + mono;
  return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

bool Polynomial::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = degree_sum(a);
  std::uint64_t db = degree_sum(b);
  if (da != db) return da < db;
  // Same degree: the first variable is the most significant.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(const GaussRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::zero(std::vector<std::string> variables) {
  Polynomial p;
  p.vars_ = std::move(variables);
  return p;
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, GaussRational(1));
  return p;
}

Polynomial Polynomial::term(const GaussRational& c, const Monomial& m) {
  Polynomial p;
  if (c.is_zero()) return p;
  Exponents e;
  for (const auto& [name, exp] : m) {
    if (exp == 0) continue;
    p.vars_.push_back(name);
    e.push_back(exp);
  }
  p.terms_.emplace(std::move(e), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_sum(terms_.begin()->first) == 0;
}

GaussRational Polynomial::constant_term() const {
  if (terms_.empty()) return {};
  const auto& [e, c] = *terms_.begin();
  return degree_sum(e) == 0 ? c : GaussRational();
}

GaussRational Polynomial::coefficient(const Monomial& m) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, exp] : m) {
    if (exp == 0) continue;
    auto idx = index_of(name);
    if (!idx) return {};
    e[*idx] = exp;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational() : it->second;
}

Monomial Polynomial::monomial(const Exponents& e) const {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) m[vars_[i]] = e[i];
  return m;
}

std::optional<std::size_t> Polynomial::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool Polynomial::depends_on(const std::string& name) const {
  auto d = degree_in(name);
  return d && *d > 0;
}

std::optional<unsigned> Polynomial::degree_in(const std::string& name) const {
  if (terms_.empty()) return std::nullopt;
  auto idx = index_of(name);
  if (!idx) return 0u;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max<unsigned>(best, e[*idx]);
  return best;
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<unsigned>(degree_sum(terms_.rbegin()->first));
}

std::vector<std::string> Polynomial::merge_context(const std::vector<std::string>& a,
                                                   const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

Polynomial Polynomial::aligned(const std::vector<std::string>& order) const {
  if (order == vars_) return *this;
  std::vector<std::size_t> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), vars_[i]);
    target[i] = it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
  }
  Polynomial out = zero(order);
  for (const auto& [e, c] : terms_) {
    Exponents ne(order.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] == order.size())
        throw Error(ErrorCode::kUnknownVariable,
                    "variable '" + vars_[i] + "' missing from target context");
      ne[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& order) const {
  return aligned(order);
}

Polynomial Polynomial::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool occurs = std::any_of(terms_.begin(), terms_.end(),
                              [i](const auto& t) { return t.first[i] != 0; });
    if (occurs) used.push_back(vars_[i]);
  }
  return aligned(used);
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& name) const {
  std::vector<Polynomial> out;
  auto idx = index_of(name);
  if (!idx) {
    if (!is_zero()) out.push_back(*this);
    return out;
  }
  for (const auto& [e, c] : terms_) {
    unsigned j = e[*idx];
    if (out.size() <= j) out.resize(j + 1, zero(vars_));
    Exponents rest = e;
    rest[*idx] = 0;
    out[j].add_term(rest, c);
  }
  for (auto& p : out) p.vars_ = vars_;
  return out;
}

void Polynomial::add_term(const Exponents& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (vars_ != o.vars_) {
    auto ctx = merge_context(vars_, o.vars_);
    *this = aligned(ctx);
    Polynomial rhs = o.aligned(ctx);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) {
    auto ctx = Polynomial::merge_context(a.vars_, b.vars_);
    return a.aligned(ctx) * b.aligned(ctx);
  }
  Polynomial out = Polynomial::zero(a.vars_);
  Polynomial::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ctx = Polynomial::merge_context(a.vars_, b.vars_);
  return a.aligned(ctx).terms_ == b.aligned(ctx).terms_;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw Error(ErrorCode::kNegativeExponent, "negative exponent " + std::to_string(e));
  Polynomial result = GaussRational(1);
  result = result.aligned(vars_);
  Polynomial base = *this;
  auto n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1ul) result *= base;
    n >>= 1ul;
    if (n) base = base * base;
  }
  return result;
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading term of zero");
  return *terms_.rbegin();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      std::uint32_t k = it->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    std::string t = format_term(it->second, mono, terms_.size() == 1);
    if (first) {
      out = t;
      first = false;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& bindings) {
  const auto& vars = f.variables();
  std::vector<std::string> ctx = vars;
  for (const auto& [name, image] : bindings)
    for (const auto& v : image.variables())
      if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) ctx.push_back(v);

  // images[i] is the replacement for vars[i]; powers are cached per variable.
  std::vector<Polynomial> images;
  images.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = bindings.find(v);
    images.push_back((it != bindings.end() ? it->second : Polynomial::variable(v)).with_variables(ctx));
  }
  std::vector<std::vector<Polynomial>> powers(vars.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial(GaussRational(1)).with_variables(ctx));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial out = Polynomial::zero(ctx);
  for (const auto& [e, c] : f.terms()) {
    Polynomial t = Polynomial(c).with_variables(ctx);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "exact_divide by the zero polynomial");
  std::vector<std::string> ctx = f.variables();
  for (const auto& v : g.variables())
    if (std::find(ctx.begin(), ctx.end(), v) == ctx.end()) ctx.push_back(v);
  Polynomial r = f.with_variables(ctx);
  Polynomial d = g.with_variables(ctx);
  Polynomial q = Polynomial::zero(ctx);
  const auto& [lead_e, lead_c] = d.leading_term();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    Polynomial::Exponents shift(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      shift[i] = re[i] - lead_e[i];
    }
    Polynomial step = Polynomial::term(rc / lead_c, q.monomial(shift)).with_variables(ctx);
    q += step;
    r -= step * d;
  }
  return q;
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
  Polynomial out = Polynomial::zero(f.variables());
  auto idx = f.index_of(var);
  if (!idx) return out;
  for (const auto& [e, c] : f.terms()) {
    if (e[*idx] == 0) continue;
    Monomial m = f.monomial(e);
    if (--m[var] == 0) m.erase(var);
    out += Polynomial::term(c * GaussRational(static_cast<long>(e[*idx])), m).with_variables(f.variables());
  }
  return out;
}

Polynomial restrict_to_zero(const Polynomial& f, const std::vector<std::string>& vars) {
  std::map<std::string, Polynomial> bindings;
  for (const auto& v : vars) bindings.emplace(v, Polynomial());
  return substitute(f, bindings);
}

}  // namespace exotica
