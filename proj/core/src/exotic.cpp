#include "exotica/exotic.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include <gmpxx.h>

#include "exotica/error.hpp"
#include "exotica/grading.hpp"

namespace exotica {

namespace {

const std::vector<std::string> kContext{"x", "y", "z", "u", "v"};

Polynomial var(const char* name) { return Polynomial::variable(name); }

Polynomial binomial_term(long n, long i, const char* v, long z_exp) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  Monomial mono{{v, static_cast<unsigned>(i)}};
  if (z_exp > 0) mono["z"] = static_cast<unsigned>(z_exp);
  return Polynomial::term(GaussRational(Rational(c)), mono);
}

VerificationReport compare(std::string name, const Polynomial& got, const Polynomial& want) {
  VerificationReport r{std::move(name), got == want, {}};
  if (!r.pass) r.witness.push_back((got - want).trimmed());
  return r;
}

VerificationReport vanishes(std::string name, const std::vector<Polynomial>& residuals) {
  VerificationReport r{std::move(name), true, {}};
  for (const auto& res : residuals) {
    if (res.is_zero()) continue;
    r.pass = false;
    r.witness.push_back(res.trimmed());
  }
  return r;
}

// `base` followed by the remaining variables of f, so results print in a
// stable order.
std::vector<std::string> context_for(const Polynomial& f, std::vector<std::string> base) {
  for (const auto& v : f.variables())
    if (std::find(base.begin(), base.end(), v) == base.end()) base.push_back(v);
  return base;
}

unsigned exp_of(const Monomial& mono, const char* v) {
  auto it = mono.find(v);
  return it == mono.end() ? 0 : it->second;
}

}  // namespace

ExoticParams::ExoticParams(long k_, long l_, long m_, long n_) : k(k_), l(l_), m(m_), n(n_) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "need m >= 2, got " + std::to_string(m));
  if (!(k > l && l >= 3)) throw Error(ErrorCode::kInvalidArgument, "need k > l >= 3, got " + to_string());
  if (std::gcd(k, l) != 1) throw Error(ErrorCode::kInvalidArgument, "need gcd(k, l) = 1, got " + to_string());
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1, got " + std::to_string(n));
}

ExoticParams ExoticParams::unchecked(long k, long l, long m, long n) { return ExoticParams(NoCheck{}, k, l, m, n); }

std::string ExoticParams::to_string() const {
  return "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ", m=" + std::to_string(m) +
         ", n=" + std::to_string(n) + ")";
}

Polynomial build_q(long k, long l) {
  if (k < 1 || l < 1) throw Error(ErrorCode::kInvalidArgument, "build_q needs k, l >= 1");
  const Polynomial x = var("x"), y = var("y"), z = var("z");
  const Polynomial numerator = (x * z + 1).pow(k) - (y * z + 1).pow(l) + z;
  auto divided = exact_divide(numerator, z);
  if (!divided) throw Error(ErrorCode::kInternal, "numerator of q is not divisible by z");

  Polynomial summed = 1;
  for (long i = 1; i <= k; ++i) summed += binomial_term(k, i, "x", i - 1);
  for (long j = 1; j <= l; ++j) summed -= binomial_term(l, j, "y", j - 1);

  if (*divided != summed) throw Error(ErrorCode::kInternal, "the two constructions of q disagree");
  return summed.with_variables({"x", "y", "z"});
}

Polynomial build_p(const ExoticParams& p) {
  const Polynomial u = var("u"), v = var("v"), x = var("x"), y = var("y"), z = var("z");
  const Polynomial q = build_q(p.k, p.l);
  const Polynomial head = u.pow(p.m) * v;
  Polynomial result = (head + q).with_variables(kContext);
  if (z * (result - head) != (x * z + 1).pow(p.k) - (y * z + 1).pow(p.l) + z)
    throw Error(ErrorCode::kInternal, "p does not clear to the expected numerator");
  return result;
}

Polynomial principal_part_closed_form(const ExoticParams& p) {
  const Polynomial u = var("u"), v = var("v"), x = var("x"), y = var("y"), z = var("z");
  return (u.pow(p.m) * v + x.pow(p.k) * z.pow(p.k - 1) - y.pow(p.l) * z.pow(p.l - 1)).with_variables(kContext);
}

Polynomial relation_rhs(const ExoticParams& p) {
  if (p.k < p.l) throw Error(ErrorCode::kInvalidArgument, "relation needs k >= l");
  const Polynomial x = var("x"), y = var("y"), z = var("z");
  return (z.pow(p.l - 1) * (y.pow(p.l) - x.pow(p.k) * z.pow(p.k - p.l))).with_variables({"x", "y", "z"});
}

VerificationReport build_q_check(long k, long l) {
  VerificationReport r{"build_q", true, {}};
  Polynomial q = build_q(k, l);  // throws on disagreement
  GaussRational c = q.constant_term();
  if (!c.is_one()) {
    r.pass = false;
    r.witness.push_back(Polynomial(c - GaussRational(1)));
  }
  auto expected = static_cast<std::size_t>(k + l + 1);
  if (q.size() != expected) {
    r.pass = false;
    r.witness.push_back(Polynomial(static_cast<long>(q.size()) - static_cast<long>(expected)));
  }
  return r;
}

VerificationReport trivialization_check(const ExoticParams& p, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  // u_inv stands for u^(-m); u^a u_inv^b with a >= m cancels one step at a time.
  const std::string inv = "u_inv";
  const Polynomial q = build_q(p.k, p.l);
  Polynomial substituted =
      substitute(build_p(p), {{"v", GaussRational(sign) * q * Polynomial::variable(inv)}});
  Polynomial residual = Polynomial::zero(substituted.variables());
  for (const auto& [e, c] : substituted.terms()) {
    Monomial mono = substituted.monomial(e);
    unsigned a = exp_of(mono, "u"), b = exp_of(mono, inv.c_str());
    unsigned steps = std::min(a / static_cast<unsigned>(p.m), b);
    a -= steps * static_cast<unsigned>(p.m);
    b -= steps;
    mono.erase("u");
    mono.erase(inv);
    if (a) mono["u"] = a;
    if (b) mono[inv] = b;
    residual += Polynomial::term(c, mono);
  }
  std::string name = sign < 0 ? "trivialization" : "trivialization_printed_sign";
  return vanishes(std::move(name), {residual});
}

VerificationReport fiber_F0_check(const ExoticParams& p) { return fiber_F0_check(p, build_p(p)); }

VerificationReport fiber_F0_check(const ExoticParams& p, const Polynomial& poly) {
  Polynomial fiber = restrict_to_zero(poly, {"u"});
  VerificationReport r = compare("fiber_F0", fiber, build_q(p.k, p.l));
  return r;
}

VerificationReport principal_part_check(const ExoticParams& p) {
  WeightAssignment w = WeightAssignment::hypersurface(p.k, p.l, p.m, p.n);
  return compare("principal_part(n=" + std::to_string(p.n) + ")", principal_part(build_p(p), w),
                 principal_part_closed_form(p));
}

Polynomial normal_form_Ahat(const Polynomial& f, const ExoticParams& p) {
  if (p.m < 1) throw Error(ErrorCode::kInvalidArgument, "normal form needs m >= 1");
  const auto m = static_cast<unsigned>(p.m);
  const Polynomial rhs = relation_rhs(p);
  std::vector<Polynomial> rhs_pow{Polynomial(1)};
  Polynomial out = Polynomial::zero(context_for(f, kContext));
  for (const auto& [e, c] : f.terms()) {
    Monomial mono = f.monomial(e);
    unsigned a = exp_of(mono, "u"), b = exp_of(mono, "v");
    // Each rewrite lowers the v-exponent by one, so r = min(a/m, b) steps
    // reach a monomial with u-exponent < m or v-exponent 0.
    unsigned r = std::min(a / m, b);
    if (r == 0) {
      out += Polynomial::term(c, mono);
      continue;
    }
    mono.erase("u");
    mono.erase("v");
    if (a - r * m) mono["u"] = a - r * m;
    if (b - r) mono["v"] = b - r;
    while (rhs_pow.size() <= r) rhs_pow.push_back(rhs_pow.back() * rhs);
    out += Polynomial::term(c, mono) * rhs_pow[r];
  }
  return out;
}

Polynomial normal_form_B(const Polynomial& f, const BrieskornTriple& t) {
  const auto m = static_cast<unsigned>(t.m);
  const Polynomial step = -(var("x").pow(t.k) + var("y").pow(t.l));
  std::vector<Polynomial> step_pow{Polynomial(1)};
  Polynomial out = Polynomial::zero(context_for(f, {"x", "y", "z"}));
  for (const auto& [e, c] : f.terms()) {
    Monomial mono = f.monomial(e);
    unsigned s = exp_of(mono, "z");
    unsigned r = s / m;
    if (r == 0) {
      out += Polynomial::term(c, mono);
      continue;
    }
    mono.erase("z");
    if (s % m) mono["z"] = s % m;
    while (step_pow.size() <= r) step_pow.push_back(step_pow.back() * step);
    out += Polynomial::term(c, mono) * step_pow[r];
  }
  return out;
}

VerificationReport relation_check(const ExoticParams& p) {
  Polynomial relation = var("u").pow(p.m) * var("v") - relation_rhs(p);
  return vanishes("relation_normal_form", {normal_form_Ahat(relation, p)});
}

VerificationReport specialization_check(const ExoticParams& p) {
  const Polynomial x = var("x"), y = var("y"), z = var("z"), u = var("u");
  Polynomial got = substitute(principal_part_closed_form(p), {{"v", Polynomial(1)}});
  Polynomial want = u.pow(p.m) + z.pow(p.l - 1) * (x.pow(p.k) * z.pow(p.k - p.l) - y.pow(p.l));
  return compare("specialization_v=1", got, want);
}

VerificationReport divisorial_singularity_check(const ExoticParams& p) {
  const Polynomial x = var("x"), y = var("y"), z = var("z"), u = var("u");
  Polynomial g = u.pow(p.m) + z.pow(p.l - 1) * (x.pow(p.k) * z.pow(p.k - p.l) - y.pow(p.l));
  std::vector<Polynomial> residuals{restrict_to_zero(g, {"z", "u"})};
  for (const char* v : {"x", "y", "z", "u"})
    residuals.push_back(restrict_to_zero(partial_derivative(g, v), {"z", "u"}));
  return vanishes("divisorial_singularity", residuals);
}

DivisibilityResult proposition1_divisibility(const Polynomial& zeta, const Polynomial& eta,
                                             const ExoticParams& p) {
  if (zeta.depends_on("v") || eta.depends_on("v"))
    throw Error(ErrorCode::kInvalidArgument, "zeta and eta must not involve v");
  const Polynomial u = var("u");
  Polynomial lhs = u.pow(p.m) * zeta - build_q(p.k, p.l) * eta;
  DivisibilityResult r;
  r.g_is_zero = lhs.is_zero();
  if (r.g_is_zero) r.u_divides_eta = exact_divide(eta, u).has_value();
  return r;
}

Polynomial tm_polynomial(long m) {
  return (var("u") * var("v") - var("w").pow(m)).with_variables({"u", "v", "w"});
}

VerificationReport tm_isomorphism_check(long m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "T_m needs m >= 2");
  const Polynomial x = var("x"), y = var("y"), z = var("z"), u = var("u"), v = var("v"), w = var("w");
  const GaussRational half(Rational(1, 2));
  const GaussRational i = GaussRational::i();
  std::map<std::string, Polynomial> forward{
      {"x", half * (u - v)}, {"y", -i * half * (u + v)}, {"z", w}};
  std::map<std::string, Polynomial> inverse{{"u", x + i * y}, {"v", -(x - i * y)}, {"w", z}};

  Polynomial surface = x.pow(2) + y.pow(2) + z.pow(m);
  std::vector<Polynomial> residuals{substitute(surface, forward) + tm_polynomial(m)};
  // The inverse pulls -uv + w^m back to the surface.
  residuals.push_back(substitute(-tm_polynomial(m), inverse) - surface);
  for (const char* c : {"x", "y", "z"})
    residuals.push_back(substitute(forward.at(c), inverse) - Polynomial::variable(c));
  return vanishes("tm_isomorphism", residuals);
}

Derivation alpha_derivation(long m) {
  const Polynomial w = var("w");
  return Derivation({{"u", Polynomial(0)}, {"v", GaussRational(m) * w.pow(m - 1)}, {"w", var("u")}});
}

Derivation beta_derivation(long m) {
  const Polynomial w = var("w");
  return Derivation({{"u", GaussRational(m) * w.pow(m - 1)}, {"v", Polynomial(0)}, {"w", var("v")}});
}

namespace {

FlowMap shear_formula(long m, const char* fixed, const char* moved) {
  const Polynomial a = Polynomial::variable(fixed), w = var("w"), t = var("t");
  auto shifted = exact_divide((w + t * a).pow(m) - w.pow(m), a);
  if (!shifted) throw Error(ErrorCode::kInternal, "closed-form action is not polynomial");
  return FlowMap({{fixed, a}, {moved, Polynomial::variable(moved) + *shifted}, {"w", w + t * a}}, "t");
}

}  // namespace

FlowMap alpha_formula(long m) { return shear_formula(m, "u", "v"); }
FlowMap beta_formula(long m) { return shear_formula(m, "v", "u"); }

VerificationReport tm_flow_check(long m, const std::string& which) {
  if (which != "alpha" && which != "beta")
    throw Error(ErrorCode::kInvalidArgument, "unknown action '" + which + "'");
  const bool alpha = which == "alpha";
  FlowMap flow = exp_flow(alpha ? alpha_derivation(m) : beta_derivation(m), static_cast<int>(m) + 1);
  FlowMap formula = alpha ? alpha_formula(m) : beta_formula(m);
  VerificationReport r{which + "_flow(m=" + std::to_string(m) + ")", true, {}};
  for (const auto& [v, img] : formula.images()) {
    Polynomial diff = flow.images().at(v) - img;
    if (!diff.is_zero()) {
      r.pass = false;
      r.witness.push_back(diff.trimmed());
    }
  }
  const Polynomial f = tm_polynomial(m);
  Polynomial moved = substitute(f, flow.images()) - f;
  if (!moved.is_zero()) {
    r.pass = false;
    r.witness.push_back(moved.trimmed());
  }
  if (!flow_group_law(flow)) {
    r.pass = false;
    // Report F_1(F_1(x)) - F_2(x) on the first variable that differs.
    for (const auto& [v, img] : flow.images()) {
      Polynomial twice = substitute(substitute(img, flow.at(Polynomial(1))), {{"t", Polynomial(1)}});
      Polynomial diff = twice - substitute(img, {{"t", Polynomial(2)}});
      if (!diff.is_zero()) {
        r.witness.push_back(diff.trimmed());
        break;
      }
    }
    if (r.witness.empty()) r.witness.push_back(Polynomial(1));
  }
  return r;
}

std::vector<VerificationReport> verify_exotic(const ExoticParams& p) {
  using Task = std::function<VerificationReport()>;
  std::vector<Task> tasks{
      [p] { return build_q_check(p.k, p.l); },
      [p] { return trivialization_check(p, -1); },
      [p] {
        // The printed sign must leave exactly 2q behind.
        VerificationReport raw = trivialization_check(p, +1);
        Polynomial residual = raw.witness.empty() ? Polynomial(0) : raw.witness.front();
        return compare("trivialization_printed_sign_leaves_2q", residual,
                       GaussRational(2) * build_q(p.k, p.l));
      },
      [p] { return fiber_F0_check(p); },
      [p] { return principal_part_check(p); },
      [p] {
        ExoticParams ten = ExoticParams::unchecked(p.k, p.l, p.m, 10);
        return principal_part_check(ten);
      },
      [p] { return relation_check(p); },
      [p] { return specialization_check(p); },
      [p] { return divisorial_singularity_check(p); },
      [p] {
        DominanceReport d = verify_weight_dominance(p.k, p.l);
        VerificationReport r{"weight_dominance", d.holds, {}};
        if (!r.pass) r.witness.push_back(Polynomial(d.max_lower - d.top + 1));
        return r;
      },
      [p] {
        DivisibilityResult d = proposition1_divisibility(build_q(p.k, p.l), var("u").pow(p.m), p);
        VerificationReport r{"proposition1_divisibility", d.g_is_zero && d.u_divides_eta, {}};
        if (!r.pass) r.witness.push_back(var("u").pow(p.m) * build_q(p.k, p.l));
        return r;
      },
      [p] { return tm_isomorphism_check(p.m); },
      [p] { return tm_flow_check(p.m, "alpha"); },
      [p] { return tm_flow_check(p.m, "beta"); },
  };
  std::vector<std::future<VerificationReport>> running;
  running.reserve(tasks.size());
  for (auto& task : tasks) running.push_back(std::async(std::launch::async, task));
  std::vector<VerificationReport> out;
  out.reserve(tasks.size());
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace exotica
