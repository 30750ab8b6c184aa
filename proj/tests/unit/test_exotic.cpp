#include <doctest.h>

#include <numeric>

#include "exotica/exotic.hpp"
#include "exotica/grading.hpp"
#include "exotica/parser.hpp"
#include "support/errors.hpp"
#include "support/random_poly.hpp"

using namespace exotica;
using exotica::testing::code_of;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

}  // namespace

TEST_CASE("parameters validate") {
  CHECK(code_of([] { ExoticParams(4, 3, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ExoticParams(3, 4, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ExoticParams(6, 4, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ExoticParams(4, 2, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ExoticParams(4, 3, 2, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(ExoticParams::unchecked(4, 3, 1).m == 1);
}

TEST_CASE("build_q") {
  CHECK(build_q(4, 3) == P("x^4*z^3 + 4*x^3*z^2 + 6*x^2*z + 4*x - y^3*z^2 - 3*y^2*z - 3*y + 1"));
  for (long k = 4; k <= 9; ++k)
    for (long l = 3; l < k; ++l) {
      if (std::gcd(k, l) != 1) continue;
      CAPTURE(k);
      CAPTURE(l);
      Polynomial q = build_q(k, l);
      CHECK(q.size() == static_cast<std::size_t>(k + l + 1));
      CHECK(q.constant_term().is_one());
      CHECK(build_p(ExoticParams(k, l, 2)).size() == static_cast<std::size_t>(k + l + 2));
      // Swapping the roles of (x, k) and (y, l) gives 2 - q.
      Polynomial dual = substitute(build_q(l, k), {{"x", P("y")}, {"y", P("x")}});
      CHECK(dual == Polynomial(2) - q);
      CHECK(build_q_check(k, l).pass);
    }
  CHECK(code_of([] { build_q(0, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("trivialization signs") {
  for (long m : {2L, 3L, 5L}) {
    ExoticParams p(5, 3, m);
    auto minus = trivialization_check(p, -1);
    CHECK(minus.pass);
    auto plus = trivialization_check(p, +1);
    CHECK_FALSE(plus.pass);
    REQUIRE(plus.witness.size() == 1);
    CHECK(plus.witness[0] == Polynomial(2) * build_q(5, 3));
  }
  CHECK(code_of([] { trivialization_check(ExoticParams(4, 3, 2), 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("fiber over u = 0") {
  ExoticParams p(4, 3, 2);
  CHECK(fiber_F0_check(p).pass);
  auto tampered = fiber_F0_check(p, build_p(p) + P("v"));
  CHECK_FALSE(tampered.pass);
  REQUIRE_FALSE(tampered.witness.empty());
  CHECK(tampered.witness[0] == P("v"));
}

TEST_CASE("principal parts of p") {
  for (long n : {1L, 2L, 10L}) CHECK(principal_part_check(ExoticParams(4, 3, 2, n)).pass);
  CHECK(principal_part_closed_form(ExoticParams(5, 3, 2)) == P("u^2*v + x^5*z^4 - y^3*z^2"));
  CHECK(principal_part_closed_form(ExoticParams(5, 4, 3)) == P("u^3*v + x^5*z^4 - y^4*z^3"));
  CHECK(principal_part_check(ExoticParams(5, 4, 3)).pass);
  auto w = WeightAssignment::hypersurface(5, 3, 2, 1);
  CHECK(principal_part(build_p(ExoticParams(5, 3, 2)), w) == principal_part_closed_form(ExoticParams(5, 3, 2)));
}

TEST_CASE("normal forms") {
  ExoticParams p(4, 3, 2);
  CHECK(normal_form_Ahat(P("u^2*v"), p) == relation_rhs(p));
  CHECK(normal_form_Ahat(P("u^3*v"), p) == P("u*y^3*z^2 - u*x^4*z^3"));
  CHECK(normal_form_Ahat(P("u^4*v^2"), p) == relation_rhs(p).pow(2));
  CHECK(normal_form_Ahat(P("u*v + x"), p) == P("u*v + x"));
  CHECK(normal_form_Ahat(P("u^5"), p) == P("u^5"));
  CHECK(relation_rhs(p) == P("y^3*z^2 - x^4*z^3"));
  CHECK(code_of([] { relation_rhs(ExoticParams::unchecked(3, 4, 2)); }) == ErrorCode::kInvalidArgument);

  BrieskornTriple t(2, 3, 3);
  CHECK(normal_form_B(P("z^4"), t) == P("-y^3*z - x^2*z"));
  CHECK(normal_form_B(P("z^6"), t) == P("x^4 + 2*x^2*y^3 + y^6"));
  CHECK(normal_form_B(P("x*z^2"), t) == P("x*z^2"));
  CHECK(relation_check(p).pass);
  CHECK(specialization_check(p).pass);
}

TEST_CASE("divisorial singularity") {
  for (long m = 2; m <= 5; ++m) CHECK(divisorial_singularity_check(ExoticParams(4, 3, m)).pass);
  auto bad = divisorial_singularity_check(ExoticParams::unchecked(4, 3, 1));
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("divisibility by p") {
  ExoticParams p(4, 3, 2);
  auto r = proposition1_divisibility(build_q(4, 3), P("u^2"), p);
  CHECK(r.g_is_zero);
  CHECK(r.u_divides_eta);
  r = proposition1_divisibility(P("1"), P("1"), p);
  CHECK_FALSE(r.g_is_zero);
  CHECK_FALSE(r.u_divides_eta);
  r = proposition1_divisibility(Polynomial(), Polynomial(), p);
  CHECK(r.g_is_zero);
  CHECK(r.u_divides_eta);
  CHECK(code_of([&] { proposition1_divisibility(P("v"), P("1"), p); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("T_m and its actions") {
  for (long m : {2L, 3L, 5L}) {
    CHECK(tm_isomorphism_check(m).pass);
    CHECK(tm_flow_check(m, "alpha").pass);
    CHECK(tm_flow_check(m, "beta").pass);
  }
  CHECK(tm_polynomial(3) == P("u*v - w^3"));
  CHECK(code_of([] { tm_isomorphism_check(1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("verify_exotic") {
  auto reports = verify_exotic(ExoticParams(4, 3, 2));
  REQUIRE(reports.size() == 14);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CHECK(r.pass);
    CHECK(r.witness.empty());
  }
  CHECK(reports.front().check == "build_q");
  CHECK(reports[1].check == "trivialization");
  CHECK(reports[2].check == "trivialization_printed_sign_leaves_2q");
  CHECK(reports.back().check.find("beta") != std::string::npos);

  auto again = verify_exotic(ExoticParams(4, 3, 2));
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(again[i].check == reports[i].check);
}
