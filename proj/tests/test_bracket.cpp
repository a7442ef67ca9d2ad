#include <doctest.h>

#include "h2c/constructions.hpp"

using namespace h2c;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// S0 = F.1, S1 = F.n with n*n = -1 and zero brackets (the M2(F)+ coordinates)
GradedBracketAlgebra m2plus_coordinates(const FieldSpec& f) {
  GradedBracketAlgebra s;
  s.field = f;
  s.s0_dim = 1;
  s.s1_dim = 1;
  s.p00 = make_table(1, 1, 1, f);
  s.p01 = make_table(1, 1, 1, f);
  s.p11 = make_table(1, 1, 1, f);
  s.b00 = make_table(1, 1, 1, f);
  s.b01 = make_table(1, 1, 1, f);
  s.p00[0][0][0] = Scalar::one(f);
  s.p01[0][0][0] = Scalar::one(f);
  s.p11[0][0][0] = Scalar::of_int(-1, f);
  s.unit = Vec{Scalar::one(f)};
  return s;
}

}  // namespace

TEST_CASE("graded algebra shape and checks") {
  GradedBracketAlgebra s = m2plus_coordinates(Q);
  CHECK(s.has_zero_brackets());
  CHECK(check_graded_algebra(s).pass);

  Algebra u = underlying_algebra(s);
  CHECK(u.dim() == 2);
  CHECK(is_jordan(u).pass);
  CHECK(u.mul(u.basis_element(1), u.basis_element(1)) ==
        -Scalar::one(Q) * u.basis_element(0));

  GradedBracketAlgebra bad = s;
  bad.unit = Vec{Scalar::of_int(2, Q)};
  CHECK_FALSE(check_graded_algebra(bad).pass);

  GradedBracketAlgebra malformed = s;
  malformed.p01.clear();
  CHECK_THROWS_AS(validate_shape(malformed), Error);
}

TEST_CASE("identity suite on the trivial bracket") {
  GradedBracketAlgebra s = m2plus_coordinates(Q);
  IdentityReport rep = verify_bracket_identities(s);
  CHECK(rep.all_pass());
  // every family reports
  for (const char* name : {"antisymmetry", "assoc-bracket", "leibniz-a", "leibniz-b", "odd-cycle",
                           "square-even", "square-mixed", "square-odd", "assoc-even", "assoc-mixed",
                           "assoc-odd", "deriv-sum", "deriv-prod", "deriv-odd"})
    CHECK(rep.find(name) != nullptr);
}

TEST_CASE("identity suite on a genuine bracket") {
  InvolutiveAlgebra inv = make_involutive(m2(Q), m2_transpose(Q));
  GradedBracketAlgebra s = split_involution(inv);
  CHECK(s.convention == BracketConvention::epsilon_rescaled);
  CHECK_FALSE(s.has_zero_brackets());
  CHECK(check_graded_algebra(s).pass);
  CHECK(verify_bracket_identities(s).all_pass());

  SUBCASE("negating a bracket pair breaks the associator family") {
    GradedBracketAlgebra bad = s;
    // keep antisymmetry intact, flip one off-diagonal pair
    REQUIRE_FALSE(is_zero_vec(bad.b00[0][1]));
    bad.b00[0][1] = -Scalar::one(Q) * bad.b00[0][1];
    bad.b00[1][0] = -Scalar::one(Q) * bad.b00[1][0];
    IdentityReport rep = verify_bracket_identities(bad);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.find("antisymmetry")->pass);
    const FamilyResult* fam = rep.find("assoc-bracket");
    CHECK_FALSE(fam->pass);
    CHECK_FALSE(fam->witness.empty());
  }

  SUBCASE("breaking antisymmetry is caught") {
    GradedBracketAlgebra bad = s;
    bad.b00[0][1] = -Scalar::one(Q) * bad.b00[0][1];
    CHECK_FALSE(verify_bracket_identities(bad).find("antisymmetry")->pass);
  }

  SUBCASE("zeroing the mixed bracket is caught") {
    GradedBracketAlgebra bad = s;
    bad.b01 = make_table(s.s0_dim, s.s1_dim, s.s0_dim, Q);
    CHECK_FALSE(verify_bracket_identities(bad).all_pass());
  }
}

TEST_CASE("rescale_bracket") {
  FieldSpec gf13 = FieldSpec::prime(13);
  GradedBracketAlgebra s = m2plus_coordinates(gf13);
  CHECK_THROWS_AS(rescale_bracket(s, Scalar::one(gf13)), Error);  // 1^2 != -1

  Scalar eps = sqrt_minus_one(gf13);
  GradedBracketAlgebra r = rescale_bracket(s, eps);
  CHECK(r.convention == BracketConvention::epsilon_rescaled);
  CHECK(r.has_zero_brackets());                      // zero brackets stay zero
  CHECK_THROWS_AS(rescale_bracket(r, eps), Error);  // already rescaled
}
