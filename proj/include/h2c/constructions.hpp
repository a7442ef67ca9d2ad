#pragma once

#include "h2c/decompose.hpp"

namespace h2c {

// Compares dimension, field and all structure constants (names ignored).
bool same_structure_constants(const Algebra& a, const Algebra& b);

// --- canonical algebras -----------------------------------------------------

// Symmetric 2x2 matrices under the Jordan product, basis {e, f, h}.
std::pair<Algebra, H2Frame> h2f(const FieldSpec& f);
// Full 2x2 matrix algebra (associative), basis {e11, e12, e21, e22}.
Algebra m2(const FieldSpec& f);
Mat m2_transpose(const FieldSpec& f);
// x -> adj(x); fixes F.1, negates the trace-zero part.
Mat m2_symplectic(const FieldSpec& f);
// M2(F)+ on basis {e, f, h, k}, frame (e, h).
std::pair<Algebra, H2Frame> m2_plus(const FieldSpec& f);
// Symmetric 4x4 matrices under the Jordan product, block frame
// e = diag(1,1,0,0), h = antidiagonal block identity.
std::pair<Algebra, H2Frame> h4f(const FieldSpec& f);
// F as a 1-dim algebra; F + F with the exchange involution; F[t]/(t^2).
Algebra field_algebra(const FieldSpec& f);
Algebra f_plus_f(const FieldSpec& f);
Mat f_plus_f_exchange(const FieldSpec& f);
Algebra dual_numbers(const FieldSpec& f);

// --- hermitian 2x2 matrices over an involutive algebra ----------------------

struct InvolutiveAlgebra {
  Algebra a;  // associative, unital (unit declared)
  Mat star;   // columns are images of the basis
};

// Certifies associativity, a two-sided unit and the involution laws
// (star^2 = id, star(1) = 1, star(xy) = star(y) star(x)).
InvolutiveAlgebra make_involutive(Algebra a, Mat star);

// Hermitian 2x2 matrices over (A,*) under X -> transpose + entrywise star,
// Jordan product, basis {e x h_i, f x h_i, h x h_i, k x k_j}, frame
// (e x 1, h x 1).
std::pair<Algebra, H2Frame> build_h2_matrix(const InvolutiveAlgebra& inv);

// S0 = star-symmetric part, S1 = star-skew part, bracket (xy - yx)/4 on the
// defined slots; convention epsilon_rescaled. include_total keeps the
// S1 x S1 slot as b11 (Cohn envelope input).
GradedBracketAlgebra split_involution(const InvolutiveAlgebra& inv, bool include_total = false);

// Associative algebra on S with x*y = xy + 2{x,y} for a total bracket,
// star = identity on S0, negation on S1. Throws missing_bracket_slot /
// not_associative.
InvolutiveAlgebra cohn_envelope(const GradedBracketAlgebra& s);

// --- tensor construction ----------------------------------------------------

// H2 x S0 + Fk x S1 with (a x x)(b x y) = a.b x xy + [a,b] x {x,y};
// no identity assumptions on S (doubles as the negative-test harness).
Algebra build_tensor_algebra(const GradedBracketAlgebra& s);

// --- bilinear-form algebras -------------------------------------------------

struct BilinearFormData {
  explicit BilinearFormData(Algebra a_) : a(std::move(a_)) {}

  Algebra a;                                // commutative associative unital
  std::size_t v_dim = 0;
  std::vector<std::string> v_names;
  std::vector<std::vector<Element>> gram;   // gram[i][j] in A, symmetric
  std::vector<std::vector<Vec>> action;     // action[a_i][v_j] in V
  Vec u, v;                                 // distinguished vectors in V
};

// J = A + V with (a+x)(b+y) = (ab + f(x,y)) + (ay + bx), frame
// e = (1-u)/2, h = v; data invariants checked, result certified Jordan.
std::pair<Algebra, H2Frame> build_bilinear_form_algebra(const BilinearFormData& data);

// Free module V = A^m with the identity gram matrix.
BilinearFormData free_bilinear_module(const Algebra& a, std::size_t m,
                                      std::vector<std::string> v_names = {});

// Spin factor F.1 + V with orthonormal V of dimension v_dim >= 2.
std::pair<Algebra, H2Frame> spin_factor(const FieldSpec& f, std::size_t v_dim);
BilinearFormData spin_factor_data(const FieldSpec& f, std::size_t v_dim);

// Prop-5-style realization of a zero-bracket S: a bilinear-form algebra of
// dimension 3 dim S0 + dim S1 together with the isomorphism from
// build_tensor_algebra(s) onto it.
struct BilinearRealization {
  BilinearFormData data;
  Algebra algebra;
  H2Frame frame;
  Mat map;  // build_tensor_algebra(s) -> algebra
};
BilinearRealization bilinear_realization(const GradedBracketAlgebra& s);

// --- commutator/trace identity table of M2(F)+ ------------------------------

// Nine exact identities tying the Jordan product, the commutator with
// k = e12 - e21 and the 2x2 trace, checked on the basis {e, f, h} (linearity
// makes that complete) plus seeded random pairs for the quadratic trace law.
IdentityReport verify_m2_commutator_table(const FieldSpec& f);

}  // namespace h2c
