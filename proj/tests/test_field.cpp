#include <doctest.h>

#include "h2c/field.hpp"
#include "h2c/random.hpp"

using namespace h2c;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec QI = FieldSpec::gaussian_rationals();
}  // namespace

TEST_CASE("field spec construction") {
  CHECK(FieldSpec::prime(3).p == 3);
  CHECK(FieldSpec::prime(13).name() == "gf13");
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);   // char 2 rejected up front
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);   // not prime
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK(FieldSpec::from_name("q") == Q);
  CHECK(FieldSpec::from_name("qi") == QI);
  CHECK(FieldSpec::from_name("gf5") == FieldSpec::prime(5));
  CHECK_THROWS_AS(FieldSpec::from_name("gf"), Error);
  CHECK_THROWS_AS(FieldSpec::from_name("r64"), Error);
  CHECK(QI.has_sqrt_minus_one());
  CHECK(FieldSpec::prime(5).has_sqrt_minus_one());
  CHECK(FieldSpec::prime(13).has_sqrt_minus_one());
  CHECK_FALSE(FieldSpec::prime(7).has_sqrt_minus_one());
  CHECK_FALSE(Q.has_sqrt_minus_one());
}

TEST_CASE("parse_scalar examples") {
  CHECK(Scalar::parse("1/2", Q) == Scalar::fraction(1, 2, Q));
  CHECK(Scalar::parse("-3", Q) == Scalar::of_int(-3, Q));
  Scalar g = Scalar::parse("3+1/2i", QI);
  CHECK(g.re() == mpq_class(3));
  CHECK(g.im() == mpq_class(1, 2));
  CHECK(Scalar::parse("7", FieldSpec::prime(13)) == Scalar::residue(7, FieldSpec::prime(13)));
  CHECK(Scalar::parse("-2-5i", QI) == Scalar::gaussian(mpq_class(-2), mpq_class(-5)));
  CHECK(Scalar::parse("1/2i", QI) == Scalar::gaussian(mpq_class(0), mpq_class(1, 2)));
  CHECK(Scalar::parse("-1/2i", QI) == Scalar::gaussian(mpq_class(0), mpq_class(-1, 2)));
}

TEST_CASE("parse_scalar rejects malformed input") {
  CHECK_THROWS_AS(Scalar::parse("", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("abc", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/-2", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1//2", Q), Error);
  // residues at or above p are rejected, no silent reduction
  CHECK_THROWS_AS(Scalar::parse("7", FieldSpec::prime(5)), Error);
  CHECK_THROWS_AS(Scalar::parse("5", FieldSpec::prime(5)), Error);
  CHECK_THROWS_AS(Scalar::parse("-1", FieldSpec::prime(5)), Error);
  CHECK_THROWS_AS(Scalar::parse("i", QI), Error);  // grammar wants an explicit coefficient
}

TEST_CASE("sqrt_minus_one") {
  FieldSpec gf5 = FieldSpec::prime(5), gf13 = FieldSpec::prime(13), gf7 = FieldSpec::prime(7);
  CHECK(sqrt_minus_one(gf5) == Scalar::residue(2, gf5));  // 2^2 = 4 = -1 mod 5

  // oracle: scan residues 1..12 for x^2 = 12 mod 13; roots are {5, 8}
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 1; x < 13; ++x)
    if ((x * x) % 13 == 12) roots.push_back(x);
  REQUIRE(roots == std::vector<std::uint64_t>{5, 8});
  CHECK(sqrt_minus_one(gf13) == Scalar::residue(5, gf13));  // smaller root

  CHECK(sqrt_minus_one(QI) == Scalar::gaussian(mpq_class(0), mpq_class(1)));
  CHECK_THROWS_AS(sqrt_minus_one(gf7), Error);
  CHECK_THROWS_AS(sqrt_minus_one(Q), Error);

  for (std::uint64_t p : {5ull, 13ull, 17ull, 29ull, 101ull}) {
    FieldSpec f = FieldSpec::prime(p);
    Scalar eps = sqrt_minus_one(f);
    CHECK(eps * eps + Scalar::one(f) == Scalar::zero(f));
  }
  Scalar i = sqrt_minus_one(QI);
  CHECK(i * i + Scalar::one(QI) == Scalar::zero(QI));
}

TEST_CASE("invert") {
  CHECK(Scalar::fraction(1, 2, Q).inverse() == Scalar::of_int(2, Q));
  FieldSpec gf5 = FieldSpec::prime(5);
  CHECK(Scalar::residue(2, gf5).inverse() == Scalar::residue(3, gf5));  // 2*3 = 6 = 1
  Scalar i = sqrt_minus_one(QI);
  CHECK(i.inverse() == -i);
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
  CHECK_THROWS_AS(Scalar::zero(gf5).inverse(), Error);
  CHECK_THROWS_AS(Scalar::zero(QI).inverse(), Error);
}

TEST_CASE("field axioms on random samples") {
  for (const FieldSpec& f : {Q, QI, FieldSpec::prime(5), FieldSpec::prime(13)}) {
    CAPTURE(f.name());
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
      Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(a / a == Scalar::one(f));
      }
    }
  }
}

TEST_CASE("text round-trip") {
  for (const FieldSpec& f : {Q, QI, FieldSpec::prime(5), FieldSpec::prime(13)}) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = rng.scalar(f);
      CHECK(Scalar::parse(a.str(), f) == a);
    }
    CHECK(Scalar::parse(Scalar::zero(f).str(), f) == Scalar::zero(f));
    CHECK(Scalar::parse((-Scalar::one(f)).str(), f) == -Scalar::one(f));
  }
  CHECK(Scalar::fraction(-1, 2, Q).str() == "-1/2");
  CHECK(Scalar::gaussian(mpq_class(3), mpq_class(1, 2)).str() == "3+1/2i");
  CHECK(Scalar::gaussian(mpq_class(0), mpq_class(-2)).str() == "-2i");
  CHECK(Scalar::gaussian(mpq_class(5), mpq_class(0)).str() == "5");
  CHECK(Scalar::of_int(-7, FieldSpec::prime(5)).str() == "3");
}

TEST_CASE("cross-field arithmetic is rejected") {
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(QI), Error);
  CHECK_THROWS_AS(Scalar::one(FieldSpec::prime(5)) * Scalar::one(FieldSpec::prime(7)), Error);
}
