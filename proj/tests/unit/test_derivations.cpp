#include <doctest.h>

#include "exotica/derivation.hpp"
#include "exotica/exotic.hpp"
#include "exotica/parser.hpp"
#include "support/errors.hpp"
#include "support/random_poly.hpp"

using namespace exotica;
using exotica::testing::code_of;
using exotica::testing::Rng;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

Derivation D(std::initializer_list<std::pair<const std::string, const char*>> images) {
  std::map<std::string, Polynomial> m;
  for (const auto& [v, text] : images) m.emplace(v, P(text));
  return Derivation(std::move(m));
}

// Random triangular derivation on x, y, z: x -> c, y -> f(x), z -> g(x, y).
Derivation random_triangular(Rng& rng) {
  Polynomial c(testing::uniform(rng, -3, 3));
  Polynomial f = testing::random_poly(rng, {"x"}, 3, 2, 3);
  Polynomial g = testing::random_poly(rng, {"x", "y"}, 3, 2, 3);
  return Derivation({{"x", c}, {"y", f}, {"z", g}});
}

}  // namespace

TEST_CASE("apply follows the Leibniz rule") {
  CHECK(D({{"x", "0"}, {"y", "x"}}).apply(P("y^2")) == P("2*x*y"));
  for (long m = 2; m <= 6; ++m) CHECK(alpha_derivation(m).apply(tm_polynomial(m)).is_zero());
  CHECK(D({{"x", "y"}, {"y", "x"}}).apply(Polynomial(7)).is_zero());
  CHECK(code_of([] { D({{"x", "1"}}).apply(P("x*y")); }) == ErrorCode::kUnknownVariable);
}

TEST_CASE("deg_lnd") {
  CHECK(deg_lnd(D({{"x", "1"}}), P("x^3"), 10) == LndDegree::finite(3));
  CHECK(deg_lnd(D({{"x", "0"}, {"y", "x"}}), P("y^2"), 10) == LndDegree::finite(2));
  CHECK(deg_lnd(D({{"x", "y"}, {"y", "x"}}), P("x"), 10) == LndDegree::unbounded());
  CHECK(deg_lnd(D({{"x", "1"}}), Polynomial(), 10) == LndDegree::neg_infinity());
  CHECK(deg_lnd(D({{"x", "1"}}), P("x^3"), 3) == LndDegree::finite(3));
  CHECK(deg_lnd(D({{"x", "1"}}), P("x^3"), 2) == LndDegree::unbounded());
  CHECK(code_of([] { deg_lnd(D({{"x", "1"}}), P("x"), 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("local nilpotency certificate") {
  CHECK(is_locally_nilpotent(D({{"x", "0"}, {"y", "x"}, {"z", "y^2"}}), 4) == Nilpotency::kYes);
  CHECK(is_locally_nilpotent(D({{"x", "x"}}), 50) == Nilpotency::kNoEvidenceWithinBound);
  CHECK(is_locally_nilpotent(Derivation::zero({"x", "y"}), 1) == Nilpotency::kYes);
}

TEST_CASE("exp_flow") {
  FlowMap f = exp_flow(D({{"x", "1"}}), 4);
  CHECK(f.images().at("x") == P("x + t"));
  FlowMap a = exp_flow(alpha_derivation(2), 4);
  CHECK(a.images().at("u") == P("u"));
  CHECK(a.images().at("v") == P("v + 2*t*w + t^2*u"));
  CHECK(a.images().at("w") == P("w + t*u"));
  FlowMap b = exp_flow(beta_derivation(2), 4);
  CHECK(b.images().at("u") == P("u + 2*t*w + t^2*v"));
  CHECK(b.images().at("w") == P("w + t*v"));
  CHECK(code_of([] { exp_flow(D({{"x", "x"}}), 8); }) == ErrorCode::kNotNilpotent);
  CHECK(code_of([] { exp_flow(D({{"t", "1"}}), 8); }) == ErrorCode::kInvalidArgument);
  CHECK(exp_flow(D({{"t", "1"}}), 8, "s").images().at("t") == P("t + s"));
}

TEST_CASE("flow group law") {
  CHECK(flow_group_law(exp_flow(D({{"x", "0"}, {"y", "x"}, {"z", "y^2"}}), 6)));
  CHECK_FALSE(flow_group_law(FlowMap({{"x", P("x + t^2")}}, "t")));
  CHECK(flow_group_law(FlowMap::identity({"x", "y"})));
  // Clash with the fresh names used internally.
  CHECK(flow_group_law(exp_flow(D({{"s", "0"}, {"r", "s"}}), 4)));
}

TEST_CASE("preserves_hypersurface") {
  for (long m = 2; m <= 6; ++m) {
    CHECK(preserves_hypersurface(alpha_formula(m), tm_polynomial(m)));
    CHECK(preserves_hypersurface(beta_derivation(m), tm_polynomial(m)));
  }
  CHECK_FALSE(preserves_hypersurface(D({{"x", "1"}}), P("x")));
  CHECK(preserves_hypersurface(Derivation::zero({"x", "y"}), P("x^2 + y")));
  CHECK(preserves_hypersurface(D({{"x", "x"}}), P("x^2")));
  CHECK(code_of([] { preserves_hypersurface(D({{"x", "1"}}), Polynomial()); }) == ErrorCode::kZeroPolynomial);
}

TEST_CASE("flows of random triangular derivations") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Derivation d = random_triangular(rng);
    REQUIRE(is_locally_nilpotent(d, 12) == Nilpotency::kYes);
    FlowMap f = exp_flow(d, 12);
    // Identity at t = 0 and derivative D at t = 0.
    for (const auto& [v, img] : f.images()) {
      CHECK(substitute(img, {{"t", Polynomial(0)}}) == Polynomial::variable(v));
      CHECK(substitute(partial_derivative(img, "t"), {{"t", Polynomial(0)}}) == d.image(v));
    }
    CHECK(flow_group_law(f));

    Polynomial g = testing::random_poly(rng, {"x", "y", "z"}, 3, 2, 5);
    Polynomial h = testing::random_poly(rng, {"x", "y", "z"}, 3, 2, 5);
    if (g.is_zero() || h.is_zero()) continue;
    LndDegree dg = deg_lnd(d, g, 40), dh = deg_lnd(d, h, 40), dgh = deg_lnd(d, g * h, 80);
    REQUIRE(dg.is_finite());
    REQUIRE(dh.is_finite());
    CHECK(dgh == LndDegree::finite(dg.value + dh.value));
  }
}
