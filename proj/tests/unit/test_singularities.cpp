#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "exotica/parser.hpp"
#include "exotica/singularities.hpp"
#include "support/errors.hpp"

using namespace exotica;
using exotica::testing::code_of;

namespace {

UniPoly U(const char* text) { return UniPoly::from_polynomial(parse_polynomial(text)); }

}  // namespace

TEST_CASE("triples and weighted data validate") {
  CHECK(code_of([] { BrieskornTriple(1, 2, 3); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { WeightedSurfaceData(2, 4, 6, 12); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { WeightedSurfaceData(2, 3, 5, 10); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { WeightedSurfaceData(0, 1, 1, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(BrieskornTriple(3, 2, 7).surface() == parse_polynomial("x^3 + y^2 + z^7"));
}

TEST_CASE("halphen") {
  auto r = halphen_classify({2, 3, 5});
  CHECK(r.verdict == Richness::kA1Rich);
  CHECK(r.criterion == Rational(31, 30));
  CHECK(halphen_classify({3, 3, 3}).verdict == Richness::kA1Poor);
  r = halphen_classify({2, 3, 7});
  CHECK(r.verdict == Richness::kA1Poor);
  CHECK(r.criterion == Rational(41, 42));
}

TEST_CASE("platonic types and C+-actions") {
  CHECK(platonic_type({2, 5, 2}).to_string() == "Dihedral(5)");
  CHECK(platonic_type({3, 2, 4}).kind == PlatonicKind::kOctahedral);
  CHECK(platonic_type({3, 3, 2}).kind == PlatonicKind::kTetrahedral);
  CHECK(platonic_type({5, 3, 2}).kind == PlatonicKind::kIcosahedral);
  CHECK(platonic_type({3, 3, 3}).kind == PlatonicKind::kNotPlatonic);
  CHECK(lnd_exists({2, 2, 9}));
  CHECK_FALSE(lnd_exists({2, 3, 5}));
  CHECK_FALSE(lnd_exists({3, 4, 5}));
  for (long k = 2; k <= 12; ++k)
    for (long l = 2; l <= 12; ++l)
      for (long m = 2; m <= 12; ++m) {
        BrieskornTriple t(k, l, m);
        if (lnd_exists(t)) CHECK(halphen_classify(t).verdict == Richness::kA1Rich);
        bool platonic = platonic_type(t).kind != PlatonicKind::kNotPlatonic;
        CHECK(platonic == (halphen_classify(t).verdict == Richness::kA1Rich));
      }
}

TEST_CASE("genus examples") {
  CHECK(genus_quotient({1, 1, 1, 3}) == 1);
  CHECK(genus_quotient({15, 10, 6, 30}) == 0);
  CHECK(genus_quotient({3, 3, 2, 6}) == 0);
}

TEST_CASE("classification by weights") {
  auto c = quasirational_by_weights({15, 10, 6, 30});
  CHECK(c.quasirational);
  CHECK(c.condition == QuasirationalCondition::kI);
  CHECK(c.pqrs == std::array<long, 4>{5, 3, 2, 1});
  c = quasirational_by_weights({1, 1, 1, 2});
  CHECK(c.quasirational);
  CHECK(c.condition == QuasirationalCondition::kII);
  CHECK(c.pqrs == std::array<long, 4>{1, 1, 1, 1});
  CHECK_FALSE(quasirational_by_weights({1, 1, 1, 3}).quasirational);

  // (pq, pr, qrs) with s carried by each position in turn.
  const long p = 7, q = 2, r = 3, s = 5;
  for (auto [a, b, d] : {std::tuple{p * q, p * r, q * r * s}, {q * r * s, p * q, p * r}, {p * r, q * r * s, p * q}}) {
    WeightedSurfaceData w(a, b, d, std::lcm(std::lcm(a, b), d));
    auto cls = quasirational_by_weights(w);
    REQUIRE(cls.quasirational);
    auto [pp, qq, rr, ss] = cls.pqrs;
    std::array<long, 3> got{pp * qq, pp * rr, qq * rr * ss}, want{a, b, d};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(genus_quotient(w) == 0);
  }
}

TEST_CASE("brieskorn weights and classification") {
  auto w = brieskorn_weights({2, 3, 5});
  CHECK((w.q0 == 15 && w.q1 == 10 && w.q2 == 6 && w.d == 30));
  w = brieskorn_weights({2, 2, 2});
  CHECK((w.q0 == 1 && w.q1 == 1 && w.q2 == 1 && w.d == 2));
  w = brieskorn_weights({2, 2, 3});
  CHECK((w.q0 == 3 && w.q1 == 3 && w.q2 == 2 && w.d == 6));

  CHECK(quasirational_brieskorn({2, 3, 5}).condition == BrieskornCondition::kIPrime);
  CHECK_FALSE(quasirational_brieskorn({3, 3, 3}).quasirational);
  CHECK(quasirational_brieskorn({2, 2, 3}).quasirational);
  CHECK(quasirational_brieskorn({2, 6, 10}).condition == BrieskornCondition::kIIPrime);
}

TEST_CASE("classifier agrees with genus on a small cube") {
  for (long k = 2; k <= 12; ++k)
    for (long l = 2; l <= 12; ++l)
      for (long m = 2; m <= 12; ++m) {
        BrieskornTriple t(k, l, m);
        Rational g = genus_quotient(brieskorn_weights(t));
        CHECK(g >= 0);
        CHECK(quasirational_brieskorn(t).quasirational == (g == 0));
      }
}

TEST_CASE("schmidt predicates") {
  auto p = schmidt_predicates(4, 3);
  CHECK((p.original_hypothesis && p.quasirational && p.sharpened));
  p = schmidt_predicates(2, 16);
  CHECK((!p.original_hypothesis && !p.quasirational && p.sharpened));
  p = schmidt_predicates(2, 3);
  CHECK((!p.original_hypothesis && p.quasirational && !p.sharpened));
  CHECK(code_of([] { schmidt_predicates(1, 3); }) == ErrorCode::kInvalidArgument);

  // The classical exceptional list, plus the d = 2 family for m >= 4.
  std::vector<std::pair<long, long>> classical, flagged;
  for (const auto& g : schmidt_gaps(40, 40)) {
    (g.d2_family ? flagged : classical).emplace_back(g.m, g.d);
  }
  std::vector<std::pair<long, long>> expected{{2, 2}, {2, 3}, {2, 5}, {2, 7}, {2, 9},
                                              {2, 11}, {2, 13}, {2, 15}, {3, 2}, {3, 4}};
  CHECK(classical == expected);
  CHECK(flagged.size() == 37);
  CHECK(flagged.front() == std::pair<long, long>{4, 2});
}

TEST_CASE("curve_verify") {
  ParametrizedCurve c{U("1/2*t^3 - 1/2"), U("-1/2*i*t^3 - 1/2*i"), U("t")};
  CurveReport r = curve_verify(c, {2, 2, 3});
  CHECK(r.on_surface);
  CHECK_FALSE(r.hits_origin);
  CHECK(r.pairwise_gcds[0] == U("1"));

  // Lines on the Fermat cubic through the origin.
  r = curve_verify({U("t"), U("t"), U("t")}, {3, 3, 3});
  CHECK_FALSE(r.on_surface);
  CHECK(r.hits_origin);
  r = curve_verify({U("t"), U("-t"), UniPoly()}, {3, 3, 3});
  CHECK(r.on_surface);
  CHECK(r.hits_origin);

  CHECK(code_of([] { curve_verify({U("1"), U("i"), UniPoly()}, {2, 2, 2}); }) == ErrorCode::kAllConstant);

  // Weights of S_{2,3,5} are (15, 10, 6).
  r = curve_verify({U("t^15"), U("t^10"), U("t^6")}, {2, 3, 5});
  CHECK_FALSE(r.on_surface);
  CHECK(r.diagonal);
}

TEST_CASE("dihedral curves avoid the origin") {
  for (long m = 2; m <= 12; ++m) {
    CurveReport r = curve_verify(dihedral_curve(m), {2, 2, m});
    CHECK(r.on_surface);
    CHECK_FALSE(r.hits_origin);
  }
  ParametrizedCurve c = dihedral_curve(2);
  CHECK(c.x == U("1/2*t^2 - 1/2"));
  CHECK(c.y == U("-1/2*i*t^2 - 1/2*i"));
  CHECK(c.z == U("t"));
}

TEST_CASE("curve_search") {
  auto found = curve_search({2, 2, 2}, {2, 1, 2});
  CHECK(found.size() == 4704);
  long avoiding = std::count_if(found.begin(), found.end(), [](const FoundCurve& f) { return !f.hits_origin; });
  CHECK(avoiding == 384);
  for (const auto& f : found) CHECK(curve_verify(f.curve, {2, 2, 2}).on_surface);
  auto line = std::find_if(found.begin(), found.end(), [](const FoundCurve& f) {
    return f.curve.x == U("t^2 - 1") && f.curve.y == U("i*t^2 - i") && f.curve.z.is_zero();
  });
  CHECK(line != found.end());

  CHECK(curve_search({2, 2, 2}, {0, 3, 1}).empty());
  auto poor = curve_search({2, 3, 7}, {4, 2, 2});
  for (const auto& f : poor) CHECK(f.hits_origin);

  // Deterministic order, independent of threads.
  auto a = curve_search({2, 2, 3}, {2, 1, 1});
  auto b = curve_search({2, 2, 3}, {2, 1, 4});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].curve.x == b[i].curve.x);
    CHECK(a[i].curve.y == b[i].curve.y);
    CHECK(a[i].curve.z == b[i].curve.z);
  }
}

TEST_CASE("claim support") {
  CHECK(claim_support_check(parse_polynomial("x^3 - 5*y^4"), {3, 4, 5}));
  CHECK(code_of([] { claim_support_check(parse_polynomial("x^3 + z"), {3, 4, 5}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(claim_support_check(parse_polynomial("x^3*y^4"), {3, 4, 5}));
  CHECK(claim_support_check(parse_polynomial("x^6 + 2*x^3*y^4 - y^8"), {3, 4, 5}));
  CHECK(claim_support_check(parse_polynomial("x^3*y^4*z^5 + x^6*z^5"), {3, 4, 7}));
  CHECK(code_of([] { claim_support_check(parse_polynomial("x^6*z^2 + y^8"), {3, 4, 5}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { claim_support_check(parse_polynomial("x"), {2, 3, 6}); }) == ErrorCode::kInvalidArgument);
}
