#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conicline/subalgebra.hpp"
#include "conicline/textio.hpp"
#include "conicline/tripoly.hpp"
#include "oracles.hpp"

using namespace conicline;
using conicline::testing::Rng;
using conicline::testing::SpanOracle;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime_field(3);
}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::from_fraction(Q, 2, 6) == Scalar::from_fraction(Q, 1, 3));
  CHECK(Scalar::from_fraction(Q, 1, -3).str() == "-1/3");
  CHECK(Scalar::from_int(F3, 5) == Scalar::from_int(F3, -1));
  CHECK(Scalar::from_fraction(F3, 1, 2) == Scalar::from_int(F3, 2));
  CHECK_THROWS_AS(Scalar::from_fraction(F3, 1, 3), DomainError);
  CHECK_THROWS_AS(Scalar::from_int(Q, 1) + Scalar::from_int(F3, 1),
                  FieldMismatchError);
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DomainError);
  CHECK_THROWS_AS(FieldSpec::prime_field(4), DomainError);
}

TEST_CASE("scalar square roots") {
  Scalar r = Scalar::zero(Q);
  CHECK(Scalar::from_fraction(Q, 9, 4).is_square(&r));
  CHECK(r == Scalar::from_fraction(Q, 3, 2));
  CHECK_FALSE(Scalar::from_int(Q, 2).is_square());
  CHECK_FALSE(Scalar::from_int(Q, -4).is_square());

  const FieldSpec F13 = FieldSpec::prime_field(13);
  int squares = 0;
  for (int a = 1; a < 13; ++a) {
    Scalar root = Scalar::zero(F13);
    if (Scalar::from_int(F13, a).is_square(&root)) {
      ++squares;
      CHECK(root * root == Scalar::from_int(F13, a));
    }
  }
  CHECK(squares == 6);
}

TEST_CASE("polynomial arithmetic examples") {
  const UniPoly t = UniPoly::t(Q);
  const UniPoly one = UniPoly::constant(Scalar::one(Q));

  CHECK(poly_gcd(t * t - one, t - one) == t - one);
  CHECK((t * t).compose(t + one) ==
        t * t + Scalar::from_int(Q, 2) * t + one);

  // (t+1)^3 over F3, frozen from the binomial coefficients 1,3,3,1 mod 3.
  const UniPoly t3 = UniPoly::t(F3);
  const UniPoly expected =
      UniPoly(F3, {Scalar::one(F3), Scalar::zero(F3), Scalar::zero(F3),
                   Scalar::one(F3)});
  CHECK((t3 + UniPoly::constant(Scalar::one(F3))).pow(3) == expected);
}

TEST_CASE("polynomial division errors") {
  const UniPoly t = UniPoly::t(Q);
  CHECK_THROWS_AS(UniPoly::divrem(t, UniPoly(Q)), DomainError);
  CHECK_THROWS_AS(UniPoly::exact_div(t * t + UniPoly::constant(Scalar::one(Q)), t),
                  DomainError);
  CHECK(UniPoly(Q).degree() == UniPoly::kNegInf);
  CHECK(UniPoly::kNegInf < -1000000);
}

TEST_CASE("ring axioms on random polynomials") {
  for (const FieldSpec& f : {Q, FieldSpec::prime_field(7)}) {
    Rng rng(2024);
    for (int i = 0; i < 40; ++i) {
      const UniPoly a = testing::random_poly(rng, f, 6, 8);
      const UniPoly b = testing::random_poly(rng, f, 6, 8);
      const UniPoly c = testing::random_poly(rng, f, 6, 8);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      const UniPoly g = poly_gcd(a, b);
      if (!g.is_zero()) {
        CHECK(UniPoly::exact_div(a, g) * g == a);
        CHECK(UniPoly::exact_div(b, g) * g == b);
      }
    }
  }
}

TEST_CASE("Frobenius over F_p") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    Rng rng(99 + p);
    for (int i = 0; i < 20; ++i) {
      const UniPoly a = testing::random_poly(rng, f, 5, 10);
      const UniPoly b = testing::random_poly(rng, f, 5, 10);
      CHECK((a + b).pow(static_cast<long long>(p)) ==
            a.pow(static_cast<long long>(p)) + b.pow(static_cast<long long>(p)));
    }
  }
}

TEST_CASE("subalgebra membership, positive characteristic instance") {
  const UniPoly t = UniPoly::t(F3);
  const UniPoly x = t.pow(9);
  const UniPoly v = t.pow(12) + t;
  const auto r = subalgebra_membership({x, v}, t);
  REQUIRE(r.status == MembershipResult::Status::Member);
  CHECK(r.witness.eval({x, v}, F3) == t);
}

TEST_CASE("subalgebra membership, certified negatives") {
  const UniPoly t = UniPoly::t(Q);
  SUBCASE("even-degree support") {
    const auto r = subalgebra_membership({t * t}, t);
    REQUIRE(r.status == MembershipResult::Status::NonMember);
    CHECK(r.obstruction_degree == 1);
  }
  SUBCASE("semigroup <2,3> omits 1") {
    const UniPoly g1 = t * t + UniPoly::constant(Scalar::one(Q));
    const UniPoly g2 = t.pow(3);
    const auto r = subalgebra_membership({g1, g2}, t);
    REQUIRE(r.status == MembershipResult::Status::NonMember);
    CHECK(r.obstruction_degree == 1);
    // Brute-force cross-check: every subalgebra element of degree <= 1 is
    // constant.
    SpanOracle span({g1, g2}, 12);
    CHECK_FALSE(span.contains(t));
  }
}

TEST_CASE("subalgebra membership keeps witnesses for generated elements") {
  Rng rng(7);
  const UniPoly t = UniPoly::t(Q);
  const UniPoly g1 = t * t + t;
  const UniPoly g2 = t.pow(3) - UniPoly::constant(Scalar::from_int(Q, 2));
  for (int i = 0; i < 10; ++i) {
    // Random formal polynomial in the generators.
    UniPoly target = UniPoly::constant(testing::random_scalar(rng, Q, 4));
    for (int j = 0; j < 3; ++j) {
      const UniPoly m = testing::random_scalar(rng, Q, 3) *
                        (g1.pow(j % 2) * g2.pow(j / 2 + (i % 2)));
      target = target + m;
    }
    const auto r = subalgebra_membership({g1, g2}, target);
    REQUIRE(r.status == MembershipResult::Status::Member);
    CHECK(r.witness.eval({g1, g2}, Q) == target);
  }
}

TEST_CASE("subalgebra membership corner cases") {
  const UniPoly t = UniPoly::t(Q);
  CHECK_THROWS_AS(subalgebra_membership({}, t), DomainError);
  // Constant targets are members of anything, including the empty algebra.
  const auto r = subalgebra_membership({}, UniPoly::constant(Scalar::from_int(Q, 5)));
  CHECK(r.status == MembershipResult::Status::Member);
  // All-constant generators certify nonmembership at the target degree.
  const auto r2 =
      subalgebra_membership({UniPoly::constant(Scalar::from_int(Q, 3))}, t);
  REQUIRE(r2.status == MembershipResult::Status::NonMember);
  CHECK(r2.obstruction_degree == 1);
}

TEST_CASE("trivariate evaluation") {
  const TriPoly q0 = TriPoly::q0(Q);
  const UniPoly t = UniPoly::t(Q);
  const UniPoly one = UniPoly::constant(Scalar::one(Q));

  CHECK(q0.eval_uni(UniPoly(Q), one, t) == one);
  CHECK(q0.eval_uni(one, t, one - t * t) == one);
  CHECK(q0.eval_uni(one, t, -(t * t)).is_zero());
  CHECK(q0.homogeneous_degree() == 2);
  CHECK_THROWS_AS(q0.eval_uni(UniPoly::t(F3), UniPoly(Q), UniPoly(Q)),
                  FieldMismatchError);
}

TEST_CASE("polynomial text format") {
  const UniPoly p = parse_poly(Q, "t^12 + t");
  CHECK(p.degree() == 12);
  CHECK(format_poly(p) == "t^12 + t");
  CHECK(parse_poly(Q, "-3/2*t^2 + t - 7") ==
        UniPoly(Q, {Scalar::from_int(Q, -7), Scalar::one(Q),
                    Scalar::from_fraction(Q, -3, 2)}));
  CHECK(format_poly(parse_poly(Q, "-3/2*t^2+t-7")) == "-3/2*t^2 + t - 7");
  // Unicode minus.
  CHECK(parse_poly(Q, "t\xE2\x88\x92" "1") == UniPoly::t(Q) - UniPoly::constant(Scalar::one(Q)));
  CHECK(format_poly(UniPoly(Q)) == "0");
  CHECK(parse_poly(F3, "2*t^2 + 4") == parse_poly(F3, "2*t^2 + 1"));
  CHECK_THROWS_AS(parse_poly(Q, "t +"), ParseError);
  CHECK_THROWS_AS(parse_poly(Q, "t t"), ParseError);
  CHECK_THROWS_AS(parse_poly(Q, "1/0"), ParseError);
}
