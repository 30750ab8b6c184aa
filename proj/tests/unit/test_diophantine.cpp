#include <doctest.h>

#include "exotica/diophantine.hpp"
#include "exotica/parser.hpp"
#include "support/errors.hpp"
#include "support/random_poly.hpp"

using namespace exotica;
using exotica::testing::code_of;
using exotica::testing::Rng;

namespace {

UniPoly U(const char* text) { return UniPoly::from_polynomial(parse_polynomial(text)); }

}  // namespace

TEST_CASE("mason examples") {
  AbcReport r = mason_verify(U("t^3"), U("1 - t^3"), U("-1"));
  CHECK(r.max_deg == 3);
  CHECK(r.d0_abc == 4);
  CHECK(r.holds);
  CHECK(r.tight);

  r = mason_verify(U("t^2 + 2*t"), U("-t^2 + 1"), U("-2*t - 1"));
  CHECK(r.max_deg == 2);
  CHECK(r.d0_abc == 5);
  CHECK(r.holds);
  CHECK_FALSE(r.tight);

  CHECK(code_of([] { mason_verify(U("t"), U("t"), U("-2*t")); }) == ErrorCode::kCommonFactor);
  CHECK(code_of([] { mason_verify(U("t"), U("1"), U("1")); }) == ErrorCode::kSumNonzero);
  CHECK(code_of([] { mason_verify(U("2"), U("1"), U("-3")); }) == ErrorCode::kAllConstant);
}

TEST_CASE("mason fuzz, symmetric verdicts") {
  Rng rng(1000);
  int checked = 0;
  while (checked < 200) {
    UniPoly a = testing::random_unipoly(rng, 12, 9), b = testing::random_unipoly(rng, 12, 9);
    if (a.is_zero() || b.is_zero()) continue;
    UniPoly g = uni_gcd(a, b);
    a = *exact_divide(a, g);
    b = *exact_divide(b, g);
    UniPoly c = -(a + b);
    if (a.is_constant() && b.is_constant() && c.is_constant()) continue;
    AbcReport r = mason_verify(a, b, c);
    CHECK(r.holds);
    if (!c.is_zero() && uni_gcd(a, c).is_constant() && uni_gcd(b, c).is_constant()) {
      CHECK(mason_verify(c, a, b).holds == r.holds);
      CHECK(mason_verify(b, c, a).max_deg == r.max_deg);
    }
    ++checked;
  }
}

TEST_CASE("davenport_verify") {
  DavenportReport r = davenport_verify(U("t^2 + 2"), U("t^3 + 3*t"), 3, 2);
  CHECK(r.n == 2);
  CHECK(r.m == 1);
  CHECK(r.bound == 1);
  CHECK(r.holds);
  CHECK(code_of([] { davenport_verify(U("t^2"), U("t^3"), 3, 2); }) == ErrorCode::kZeroDifference);
  CHECK(code_of([] { davenport_verify(U("t + 1"), U("t + 1"), 3, 2); }) == ErrorCode::kCommonFactor);
  CHECK(code_of([] { davenport_verify(U("t^2"), U("t^3 + 1"), 4, 2); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { davenport_verify(U("t^2 + 1"), U("t^2"), 3, 2); }) == ErrorCode::kDegreeGap);
  r = davenport_verify(U("t^4 + 1"), U("t^6 + t"), 3, 2);
  CHECK(r.m == 2);
  CHECK(r.n == 8);
  CHECK(r.holds);
  CHECK(code_of([] { davenport_verify(U("t^3 + 1"), U("t^4 + 2"), 3, 2); }) == ErrorCode::kDegreeGap);
  CHECK(code_of([] { davenport_verify(UniPoly(), U("t"), 3, 2); }) == ErrorCode::kShapeMismatch);
}

TEST_CASE("davenport_search frozen values") {
  struct Case {
    long k, l, m, h, n;
    const char* x;
    const char* y;
  };
  const Case cases[] = {
      {3, 2, 1, 5, 2, "t^2 - 2*t - 3", "t^3 - 3*t^2 - 3*t + 5"},
      {2, 3, 1, 1, 3, "t^3 - 1", "t^2"},
      {3, 2, 1, 2, 3, "t^2", "t^3 - 2"},
      {3, 2, 1, 3, 2, "t^2 - 2*t - 1", "t^3 - 3*t^2 + 2"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.h);
    auto w = davenport_search(c.k, c.l, c.m, c.h, 3);
    REQUIRE(w);
    CHECK(w->n == c.n);
    CHECK(w->x == U(c.x));
    CHECK(w->y == U(c.y));
    DavenportReport again = davenport_verify(w->x, w->y, c.k, c.l);
    CHECK(again.holds);
    // Mason's intermediate step klm <= km + lm + n - 1.
    CHECK(c.k * c.l * c.m <= c.k * c.m + c.l * c.m + again.n - 1);
  }
}

TEST_CASE("davenport_search is independent of the thread count") {
  auto one = davenport_search(3, 2, 1, 3, 1);
  auto many = davenport_search(3, 2, 1, 3, 5);
  REQUIRE(one);
  REQUIRE(many);
  CHECK(one->n == many->n);
  CHECK(one->x == many->x);
  CHECK(one->y == many->y);
  CHECK(one->candidates == 7 * 7 * 7 * 7 * 7);
}

TEST_CASE("davenport_search edge cases") {
  CHECK_FALSE(davenport_search(3, 2, 1, 0));  // x = t^2, y = t^3 only
  CHECK(code_of([] { davenport_search(2, 4, 1, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { davenport_search(3, 2, 0, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { davenport_search(3, 2, 5, 9); }) == ErrorCode::kSearchSpaceTooLarge);
}
