#include <doctest.h>

#include "h2c/constructions.hpp"
#include "h2c/random.hpp"

using namespace h2c;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec QI = FieldSpec::gaussian_rationals();

std::pair<Algebra, H2Frame> dual_bilinear(const FieldSpec& f) {
  return build_bilinear_form_algebra(
      free_bilinear_module(dual_numbers(f), 2, {"u", "tu", "v", "tv"}));
}

void roundtrip_case(const Algebra& j, const H2Frame& frame) {
  DecompositionResult d = decompose(j, frame.e, frame.h);
  REQUIRE(verify_bracket_identities(d.s).all_pass());
  Scalar eps = sqrt_minus_one(j.field());
  GradedBracketAlgebra rs = rescale_bracket(d.s, eps);
  auto [j2, frame2] = reconstruct(rs);
  CHECK(is_jordan(j2).pass);
  CHECK(j2.dim() == 3 * d.s.s0_dim + d.s.s1_dim);
  Mat l = reconstruction_map(d, eps);
  CHECK(verify_isomorphism(j, j2, l));
}

}  // namespace

TEST_CASE("verify_h2_frame") {
  auto [j, frame] = h2f(Q);
  H2Frame ok = verify_h2_frame(j, frame.e, frame.h);
  CHECK(ok.one == *j.unit());

  auto [j4, frame4] = h4f(Q);
  CHECK_NOTHROW(verify_h2_frame(j4, frame4.e, frame4.h));  // block frame

  CHECK_THROWS_WITH_AS(verify_h2_frame(j, frame.h, frame.h), "e*e=e", Error);
  CHECK_THROWS_WITH_AS(verify_h2_frame(j, frame.e, frame.e), "h*h=1", Error);
  Element bad_h = Scalar::of_int(2, Q) * frame.e - *j.unit();  // (2e-1)^2 = 1 but e(2e-1) = e
  CHECK_THROWS_WITH_AS(verify_h2_frame(j, frame.e, bad_h), "e*h=h/2", Error);
}

TEST_CASE("frame verification solves for an undeclared unit") {
  auto [declared, frame] = h2f(Q);
  Algebra bare(Q, declared.basis_names());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) bare.set_product(i, j, declared.product_terms(i, j));
  REQUIRE_FALSE(bare.unit().has_value());
  H2Frame fr = verify_h2_frame(bare, frame.e, frame.h);
  CHECK(fr.one == bare.basis_element(0) + bare.basis_element(1));
}

TEST_CASE("compute_z dimensions across the corpus") {
  auto check_dims = [](const std::pair<Algebra, H2Frame>& jf, std::size_t dz, std::size_t dn) {
    const auto& [j, frame] = jf;
    Subspace z = compute_z(j, frame);
    Subspace n = compute_n(j, frame);
    CHECK(z.dim() == dz);
    CHECK(n.dim() == dn);
    CHECK(check_module_decomposition(j, frame, z, n).pass);
    CHECK(z.contains(frame.one));
  };
  check_dims(h2f(Q), 1, 0);
  check_dims(m2_plus(Q), 1, 1);
  check_dims(h4f(Q), 3, 1);
  check_dims(spin_factor(Q, 3), 1, 1);
  check_dims(dual_bilinear(Q), 2, 0);
}

TEST_CASE("compute_z agrees with the full definition on random pairs") {
  for (const auto& [j, frame] : {m2_plus(Q), h4f(Q), spin_factor(Q, 4)}) {
    Subspace z = compute_z(j, frame);
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      // random a, b in span{1, e, h}
      Element a = rng.scalar(Q) * frame.one + rng.scalar(Q) * frame.e + rng.scalar(Q) * frame.h;
      Element b = rng.scalar(Q) * frame.one + rng.scalar(Q) * frame.e + rng.scalar(Q) * frame.h;
      for (std::size_t i = 0; i < z.dim(); ++i)
        CHECK(is_zero_vec(associator(j, z.basis_vector(i), a, b)));
    }
  }
}

TEST_CASE("spin factor components match the orthogonal complement") {
  auto [j, frame] = spin_factor(Q, 3);  // basis {1, u1, u2, u3}, e = (1-u1)/2, h = u2
  Subspace z = compute_z(j, frame);
  Subspace n = compute_n(j, frame);
  CHECK(z.dim() == 1);
  CHECK(z.contains(*j.unit()));
  REQUIRE(n.dim() == 1);
  CHECK(n.contains(j.basis_element(3)));  // Fw for the leftover direction
}

TEST_CASE("module decomposition counts") {
  auto [j4, frame4] = h4f(Q);
  Subspace z = compute_z(j4, frame4);
  Subspace n = compute_n(j4, frame4);
  CHECK(j4.dim() == 3 * z.dim() + n.dim());  // 10 = 3*3 + 1

  auto [mp, mframe] = m2_plus(Q);
  Subspace zm = compute_z(mp, mframe);
  Subspace nm = compute_n(mp, mframe);
  CHECK(mp.dim() == 3 * zm.dim() + nm.dim());  // 4 = 3*1 + 1
}

TEST_CASE("extract_brackets on M2(F)+") {
  auto [j, frame] = m2_plus(Q);
  DecompositionResult d = decompose(j, frame.e, frame.h);
  REQUIRE(d.s.s0_dim == 1);
  REQUIRE(d.s.s1_dim == 1);
  // S is F + Fk with k.k = -1 and both brackets zero
  CHECK(d.s.p00[0][0] == Vec{Scalar::one(Q)});
  CHECK(d.s.p01[0][0] == Vec{Scalar::one(Q)});
  CHECK(d.s.p11[0][0] == Vec{Scalar::of_int(-1, Q)});
  CHECK(d.s.has_zero_brackets());
  CHECK(d.s.convention == BracketConvention::raw);
}

TEST_CASE("extract_brackets on the spin factor is trivial") {
  auto [j, frame] = spin_factor(Q, 3);
  DecompositionResult d = decompose(j, frame.e, frame.h);
  CHECK(d.s.has_zero_brackets());
}

TEST_CASE("extracted bracket value on H4(F)") {
  auto [j, frame] = h4f(Q);
  // z = E11+E33 and v = F12+F34 are diagonally embedded symmetric 2x2
  // matrices; {z,v} = (e v, z, h) must come out as (F14 - F23)/4
  Element z = j.basis_element(0) + j.basis_element(2);
  Element v = j.basis_element(4) + j.basis_element(9);
  Element expected = Scalar::fraction(1, 4, Q) * (j.basis_element(6) - j.basis_element(7));
  CHECK(associator(j, j.mul(frame.e, v), z, frame.h) == expected);

  DecompositionResult d = decompose(j, frame.e, frame.h);
  // antisymmetry with zero diagonal holds on the nose
  for (std::size_t a = 0; a < d.s.s0_dim; ++a) {
    CHECK(is_zero_vec(d.s.b00[a][a]));
    for (std::size_t b = 0; b < d.s.s0_dim; ++b)
      CHECK(d.s.b00[a][b] == -Scalar::one(Q) * d.s.b00[b][a]);
  }
  bool some_nonzero = false;
  for (std::size_t a = 0; a < d.s.s0_dim; ++a)
    for (std::size_t b = 0; b < d.s.s0_dim; ++b)
      if (!is_zero_vec(d.s.b00[a][b])) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("coordinate core associates with everything against the frame") {
  // (Z, J, A) = 0: once (z,a,b) = 0 holds against the frame pairs, the
  // middle slot is free
  for (const auto& [j, frame] : {m2_plus(Q), h4f(Q), spin_factor(Q, 3)}) {
    Subspace z = compute_z(j, frame);
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      Element x = rng.element(j);
      for (std::size_t i = 0; i < z.dim(); ++i)
        for (const Element* a : {&frame.one, &frame.e, &frame.h})
          CHECK(is_zero_vec(associator(j, z.basis_vector(i), x, *a)));
    }
  }
}

TEST_CASE("extraction reproduces the mixed products of J") {
  // the five product formulas tying J's multiplication to S and the
  // brackets: (ez)(ev) = e(zv), (hz)(hv) = zv, (ez)(hv) = h(zv)/2 + {z,v},
  // (ez)n = zn/2 + [z,n]h, (hz)n = 2[z,n](1-2e)
  for (const auto& [j, frame] : {m2_plus(Q), h4f(Q), spin_factor(Q, 3)}) {
    DecompositionResult d = decompose(j, frame.e, frame.h);
    Scalar half = Scalar::fraction(1, 2, Q), two = Scalar::of_int(2, Q);
    Element one_minus_2e = frame.one - two * frame.e;
    auto b00_elem = [&](std::size_t i, std::size_t jj) {
      Element out = j.zero();
      for (std::size_t k = 0; k < d.s.s1_dim; ++k)
        out = out + d.s.b00[i][jj][k] * d.n.basis_vector(k);
      return out;
    };
    auto zn_comm_elem = [&](std::size_t i, std::size_t jj) {  // [z,n] = -{z,n}
      Element out = j.zero();
      for (std::size_t k = 0; k < d.s.s0_dim; ++k)
        out = out - d.s.b01[i][jj][k] * d.z.basis_vector(k);
      return out;
    };
    for (std::size_t i = 0; i < d.z.dim(); ++i) {
      Element zi = d.z.basis_vector(i);
      Element ez = j.mul(frame.e, zi), hz = j.mul(frame.h, zi);
      for (std::size_t jj = 0; jj < d.z.dim(); ++jj) {
        Element vj = d.z.basis_vector(jj);
        Element zv = j.mul(zi, vj);
        CHECK(j.mul(ez, j.mul(frame.e, vj)) == j.mul(frame.e, zv));
        CHECK(j.mul(hz, j.mul(frame.h, vj)) == zv);
        CHECK(j.mul(ez, j.mul(frame.h, vj)) ==
              half * j.mul(frame.h, zv) + b00_elem(i, jj));
      }
      for (std::size_t jj = 0; jj < d.n.dim(); ++jj) {
        Element nj = d.n.basis_vector(jj);
        Element comm = zn_comm_elem(i, jj);
        CHECK(j.mul(ez, nj) == half * j.mul(zi, nj) + j.mul(comm, frame.h));
        CHECK(j.mul(hz, nj) == two * j.mul(comm, one_minus_2e));
      }
    }
  }
}

TEST_CASE("raw identity suite passes for extracted S") {
  for (const auto& [j, frame] : {m2_plus(Q), h4f(Q), spin_factor(Q, 3), dual_bilinear(Q)}) {
    DecompositionResult d = decompose(j, frame.e, frame.h);
    CHECK(check_graded_algebra(d.s).pass);
    CHECK(verify_bracket_identities(d.s).all_pass());
  }
}

TEST_CASE("reconstruct rejects raw nonzero brackets") {
  auto [j, frame] = h4f(Q);
  DecompositionResult d = decompose(j, frame.e, frame.h);
  CHECK_THROWS_AS(reconstruct(d.s), Error);  // wrong convention
  CHECK_THROWS_AS(rescale_bracket(d.s, Scalar::one(Q)), Error);
  // over GF(7) there is no epsilon at all
  auto [j7, frame7] = h4f(FieldSpec::prime(7));
  DecompositionResult d7 = decompose(j7, frame7.e, frame7.h);
  CHECK_FALSE(d7.s.has_zero_brackets());
  CHECK_THROWS_AS(sqrt_minus_one(j7.field()), Error);
}

TEST_CASE("zero-bracket reconstruction works without epsilon") {
  auto [j, frame] = spin_factor(Q, 3);
  DecompositionResult d = decompose(j, frame.e, frame.h);
  auto [j2, frame2] = reconstruct(d.s);  // twist vacuous over Q
  CHECK(is_jordan(j2).pass);
  CHECK(j2.dim() == 4);
  CHECK_NOTHROW(verify_h2_frame(j2, frame2.e, frame2.h));
}

TEST_CASE("trivial coordinates reconstruct H2(F)") {
  GradedBracketAlgebra s;
  s.field = Q;
  s.s0_dim = 1;
  s.s1_dim = 0;
  s.p00 = make_table(1, 1, 1, Q);
  s.p00[0][0][0] = Scalar::one(Q);
  s.p01 = make_table(1, 0, 0, Q);
  s.p11 = make_table(0, 0, 1, Q);
  s.b00 = make_table(1, 1, 0, Q);
  s.b01 = make_table(1, 0, 1, Q);
  s.unit = Vec{Scalar::one(Q)};
  auto [j2, frame2] = reconstruct(s);
  CHECK(same_structure_constants(j2, h2f(Q).first));
}

TEST_CASE("tensor square of an odd unit vector is minus one") {
  // S0 = F, S1 = F with n.n = +1 and zero brackets: (k x n)^2 = -1
  GradedBracketAlgebra s;
  s.field = Q;
  s.s0_dim = 1;
  s.s1_dim = 1;
  s.p00 = make_table(1, 1, 1, Q);
  s.p01 = make_table(1, 1, 1, Q);
  s.p11 = make_table(1, 1, 1, Q);
  s.b00 = make_table(1, 1, 1, Q);
  s.b01 = make_table(1, 1, 1, Q);
  s.p00[0][0][0] = Scalar::one(Q);
  s.p01[0][0][0] = Scalar::one(Q);
  s.p11[0][0][0] = Scalar::one(Q);
  s.unit = Vec{Scalar::one(Q)};
  auto [j2, frame2] = reconstruct(s);
  CHECK(is_jordan(j2).pass);
  REQUIRE(j2.dim() == 4);
  Element ksq = j2.basis_product(3, 3);
  CHECK(ksq == -Scalar::one(Q) * frame2.one);
}

TEST_CASE("verify_isomorphism basics") {
  auto [j, frame] = h2f(Q);
  CHECK(verify_isomorphism(j, j, Mat::identity(3, Q)));
  Mat swap = Mat::identity(3, Q);
  swap.set_col(0, j.basis_element(2));  // e -> h is not multiplicative
  swap.set_col(2, j.basis_element(0));
  CHECK_FALSE(verify_isomorphism(j, j, swap));
}

TEST_CASE("explicit twist map for M2(F)+ over GF(5)") {
  FieldSpec gf5 = FieldSpec::prime(5);
  auto [j, frame] = m2_plus(gf5);
  DecompositionResult d = decompose(j, frame.e, frame.h);
  Scalar eps = sqrt_minus_one(gf5);
  CHECK(eps == Scalar::residue(2, gf5));
  auto [j2, frame2] = reconstruct(rescale_bracket(d.s, eps));
  Mat l = reconstruction_map(d, eps);
  CHECK(verify_isomorphism(j, j2, l));
}

TEST_CASE("roundtrip across fields") {
  for (const FieldSpec& f : {QI, FieldSpec::prime(5), FieldSpec::prime(13)}) {
    CAPTURE(f.name());
    roundtrip_case(h2f(f).first, h2f(f).second);
    roundtrip_case(m2_plus(f).first, m2_plus(f).second);
    roundtrip_case(h4f(f).first, h4f(f).second);
    roundtrip_case(spin_factor(f, 3).first, spin_factor(f, 3).second);
    roundtrip_case(dual_bilinear(f).first, dual_bilinear(f).second);
  }
}

TEST_CASE("corrupted input is caught before reconstruction") {
  auto [j, frame] = h4f(Q);
  Algebra bad = j;
  bad.add_term(9, 9, 0, Scalar::one(Q));  // F34*F34 gains +E11
  CHECK_FALSE(is_jordan(bad).pass);
  bool pipeline_clean = true;
  try {
    DecompositionResult d = decompose(bad, frame.e, frame.h);
    if (!verify_bracket_identities(d.s).all_pass()) pipeline_clean = false;
  } catch (const Error&) {
    pipeline_clean = false;
  }
  CHECK_FALSE(pipeline_clean);
}
