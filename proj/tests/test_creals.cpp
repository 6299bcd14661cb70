#include <doctest.h>

#include <future>

#include "continuum/creals.hpp"
#include "continuum/subject.hpp"
#include "support.hpp"

using namespace continuum;
using testsupport::audit_cert;
using testsupport::regularity_holds;

namespace {

// x(v) = 2^-5 for v >= 5, else 0; a regular sequence by direct check.
RealGen step_at_five() {
  return RealGen("test:step5",
                 [](unsigned v) { return v >= 5 ? Rational::pow2(-5) : Rational(0); }, Facts{});
}

}  // namespace

TEST_CASE("const_rational") {
  CHECK(const_rational(Rational(0)).approx(3) == Rational(0));
  CHECK(const_rational(Rational(1)).approx(7) == Rational(1));
  CHECK(const_rational(Rational(3, 2)).approx(10) == Rational(3, 2));
  const RealGen g = const_rational(Rational(3, 2));
  CHECK(*g.facts().lower == Rational(3, 2));
  CHECK(*g.facts().upper == Rational(3, 2));
}

TEST_CASE("add") {
  const RealGen s = add(const_rational(Rational(1)), const_rational(Rational(2)));
  for (unsigned v = 0; v < 8; ++v) CHECK(s.approx(v) == Rational(3));

  const RealGen x = step_at_five();
  CHECK(add(x, const_rational(Rational(0))).approx(4) == x.approx(5));
  CHECK(add(x, x).approx(6) == Rational::pow2(-4));
}

TEST_CASE("neg, scale_nat, mul on constants") {
  CHECK(neg(const_rational(Rational(5, 3))).approx(2) == Rational(-5, 3));
  CHECK(scale_nat(17, const_rational(Rational(1, 16))).approx(4) == Rational(17, 16));
  CHECK(scale_nat(0, const_rational(Rational(7))).approx(0) == Rational(0));
  CHECK(mul(const_rational(Rational(3)), const_rational(Rational(4))).approx(9) == Rational(12));
  CHECK(sub(const_rational(Rational(1)), const_rational(Rational(3))).approx(0) == Rational(-2));
  CHECK(abs_val(const_rational(Rational(-2, 3))).approx(5) == Rational(2, 3));
}

TEST_CASE("mul works without declared bounds") {
  const RealGen x = step_at_five();  // no facts
  const RealGen p = mul(x, const_rational(Rational(4)));
  // eventually 4 * 2^-5 = 1/8
  CHECK(p.approx(12) == Rational(1, 8));
  CHECK(regularity_holds(p, 12));
}

TEST_CASE("measurably_smaller") {
  const RealGen zero_g = const_rational(Rational(0));
  const RealGen one_g = const_rational(Rational(1));

  SUBCASE("0 < 1 certified at m=3 n=2") {
    const OrderVerdict v = measurably_smaller(zero_g, one_g, 8);
    REQUIRE(v.outcome == Outcome::Proved);
    CHECK(v.cert->m == 3);
    CHECK(v.cert->n == 2);
    CHECK(audit_cert(zero_g, one_g, *v.cert));
    CHECK(to_string(v) == "PROVED m=3 n=2");
  }
  SUBCASE("equal constants are structurally disproved at any fuel") {
    CHECK(measurably_smaller(one_g, one_g, 0).outcome == Outcome::Disproved);
    CHECK(measurably_smaller(one_g, one_g, 100).outcome == Outcome::Disproved);
  }
  SUBCASE("undecided alpha vs 0 is structurally disproved by its sign fact") {
    const RealGen alpha = brouwer_alpha(undecided_oracle());
    CHECK(measurably_smaller(alpha, zero_g, 100).outcome == Outcome::Disproved);
  }
  SUBCASE("without facts the undecided comparison stays unknown") {
    const RealGen bare = RealGen("test:zero", [](unsigned) { return Rational(0); }, Facts{});
    const OrderVerdict v = measurably_smaller(bare, zero_g, 100);
    CHECK(v.outcome == Outcome::Unknown);
    CHECK(to_string(v) == "UNKNOWN fuel=100");
  }
}

TEST_CASE("measurably_greater") {
  const RealGen zero_g = const_rational(Rational(0));
  const RealGen one_g = const_rational(Rational(1));

  const OrderVerdict v = measurably_greater(one_g, zero_g, 8);
  REQUIRE(v.outcome == Outcome::Proved);
  CHECK(v.cert->m == 3);
  CHECK(v.cert->n == 2);

  CHECK(measurably_greater(zero_g, zero_g, 16).outcome == Outcome::Disproved);

  const RealGen alpha =
      brouwer_alpha(synthetic_oracle(5, {VerdictKind::ProvedP, 0}));
  const OrderVerdict w = measurably_greater(alpha, zero_g, 10);
  REQUIRE(w.outcome == Outcome::Proved);
  CHECK(w.cert->m == 8);
  CHECK(w.cert->n == 7);
  CHECK(audit_cert(zero_g, alpha, *w.cert));
}

TEST_CASE("apart") {
  const RealGen zero_g = const_rational(Rational(0));
  const RealGen one_g = const_rational(Rational(1));

  const ApartVerdict v = apart(zero_g, one_g, 8);
  REQUIRE(v.outcome == Outcome::Proved);
  CHECK(v.cert->k == 2);
  CHECK(v.cert->side == Side::left_smaller);

  const RealGen x = step_at_five();
  CHECK(apart(x, x, 32).outcome == Outcome::Disproved);

  CHECK(apart(brouwer_alpha(undecided_oracle()), zero_g, 100).outcome == Outcome::Unknown);
}

TEST_CASE("apart Proved implies exactly one directed relation at the same fuel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const RealGen a = testsupport::random_generator(rng, 2);
    const RealGen b = testsupport::random_generator(rng, 2);
    const ApartVerdict v = apart(a, b, 12);
    const bool left = measurably_smaller(a, b, 12).outcome == Outcome::Proved;
    const bool right = measurably_greater(a, b, 12).outcome == Outcome::Proved;
    CHECK_FALSE((left && right));  // anti-symmetry
    if (v.outcome == Outcome::Proved) CHECK(left != right);
  }
}

TEST_CASE("not_measurably_smaller") {
  const RealGen zero_g = const_rational(Rational(0));
  const RealGen alpha = brouwer_alpha(goldbach_oracle());
  CHECK(not_measurably_smaller(alpha, zero_g).has_value());
  CHECK(not_measurably_smaller(const_rational(Rational(1)), zero_g).has_value());
  const RealGen bare = step_at_five();
  CHECK_FALSE(not_measurably_smaller(bare, bare).has_value());
}

TEST_CASE("regularity of composed generators, small exhaustive check") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial)
    CHECK(regularity_holds(testsupport::random_generator(rng), 8));
}

TEST_CASE("generators are deterministic under concurrent evaluation") {
  const RealGen g = mul(add(const_rational(Rational(1, 3)), const_rational(Rational(2, 7))),
                        const_rational(Rational(5, 2)));
  auto f1 = std::async(std::launch::async, [&] { return g.approx(6); });
  auto f2 = std::async(std::launch::async, [&] { return g.approx(6); });
  const Rational direct = g.approx(6);
  CHECK(f1.get() == direct);
  CHECK(f2.get() == direct);
  CHECK(g.approx(6) == direct);
}
