#include "exotica/derivation.hpp"

#include "exotica/error.hpp"

namespace exotica {

Derivation Derivation::zero(const std::vector<std::string>& vars) {
  std::map<std::string, Polynomial> images;
  for (const auto& v : vars) images.emplace(v, Polynomial());
  return Derivation(std::move(images));
}

const Polynomial& Derivation::image(const std::string& var) const {
  auto it = images_.find(var);
  if (it == images_.end())
    throw Error(ErrorCode::kUnknownVariable, "derivation has no image for '" + var + "'");
  return it->second;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  Polynomial out = Polynomial::zero(f.variables());
  for (const auto& v : f.variables()) {
    if (!f.depends_on(v)) continue;
    const Polynomial& img = image(v);
    if (img.is_zero()) continue;
    out += partial_derivative(f, v) * img;
  }
  return out;
}

LndDegree deg_lnd(const Derivation& d, const Polynomial& f, int bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "deg_lnd needs bound >= 1");
  if (f.is_zero()) return LndDegree::neg_infinity();
  Polynomial g = f;
  for (int n = 0; n <= bound; ++n) {
    Polynomial next = d.apply(g);
    if (next.is_zero()) return LndDegree::finite(n);
    g = std::move(next);
  }
  return LndDegree::unbounded();
}

Nilpotency is_locally_nilpotent(const Derivation& d, int bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "is_locally_nilpotent needs bound >= 1");
  for (const auto& [v, img] : d.images()) {
    if (!deg_lnd(d, Polynomial::variable(v), bound).is_finite()) return Nilpotency::kNoEvidenceWithinBound;
  }
  return Nilpotency::kYes;
}

FlowMap FlowMap::identity(const std::vector<std::string>& vars, std::string time_var) {
  std::map<std::string, Polynomial> images;
  for (const auto& v : vars) images.emplace(v, Polynomial::variable(v));
  return FlowMap(std::move(images), std::move(time_var));
}

std::map<std::string, Polynomial> FlowMap::at(const Polynomial& time) const {
  std::map<std::string, Polynomial> out;
  for (const auto& [v, img] : images_) out.emplace(v, substitute(img, {{time_, time}}));
  return out;
}

FlowMap exp_flow(const Derivation& d, int bound, const std::string& time_var) {
  if (d.images().count(time_var))
    throw Error(ErrorCode::kInvalidArgument, "time variable '" + time_var + "' is a ring variable");
  for (const auto& [v, img] : d.images())
    if (img.depends_on(time_var))
      throw Error(ErrorCode::kInvalidArgument, "time variable '" + time_var + "' occurs in an image");
  if (is_locally_nilpotent(d, bound) != Nilpotency::kYes)
    throw Error(ErrorCode::kNotNilpotent,
                "derivation not certified locally nilpotent within bound " + std::to_string(bound));

  Polynomial t = Polynomial::variable(time_var);
  std::map<std::string, Polynomial> images;
  for (const auto& [v, img] : d.images()) {
    Polynomial term = Polynomial::variable(v);
    Polynomial sum = term;
    Polynomial t_pow = GaussRational(1);
    Rational factorial = 1;
    for (long j = 1;; ++j) {
      term = d.apply(term);
      if (term.is_zero()) break;
      t_pow *= t;
      factorial *= j;
      sum += t_pow * term * GaussRational(Rational(1) / factorial);
    }
    images.emplace(v, sum);
  }
  return FlowMap(std::move(images), time_var);
}

namespace {

std::string fresh_name(const std::string& base, const FlowMap& f) {
  std::string name = base;
  auto clash = [&](const std::string& n) {
    if (f.images().count(n) || n == f.time_variable()) return true;
    for (const auto& [v, img] : f.images())
      if (img.index_of(n)) return true;
    return false;
  };
  while (clash(name)) name += "_";
  return name;
}

}  // namespace

bool flow_group_law(const FlowMap& f) {
  Polynomial s = Polynomial::variable(fresh_name("s", f));
  Polynomial r = Polynomial::variable(fresh_name("r", f));
  auto outer = f.at(s);
  auto inner = f.at(r);
  auto sum = f.at(s + r);
  for (const auto& [v, img] : outer) {
    // (F_s o F_r)(x)_v = F_s(x)_v evaluated at x := F_r(x).
    if (substitute(img, inner) != sum.at(v)) return false;
  }
  return true;
}

bool preserves_hypersurface(const FlowMap& flow, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "hypersurface of the zero polynomial");
  return substitute(f, flow.images()) == f;
}

bool preserves_hypersurface(const Derivation& d, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "hypersurface of the zero polynomial");
  Polynomial df = d.apply(f);
  return df.is_zero() || exact_divide(df, f).has_value();
}

}  // namespace exotica
