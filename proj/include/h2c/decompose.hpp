#pragma once

#include "h2c/bracket.hpp"

namespace h2c {

// Distinguished elements of a unital Jordan algebra J realizing the
// symmetric 2x2 matrix relations: e*e = e, h*h = 1, e*h = h/2.
struct H2Frame {
  Element e, h, one;
};

// Checks the frame relations and independence of {1, e, h}; the unit is
// solved for if the algebra does not declare one. Throws relation_failed /
// dependent_frame / no_unit.
H2Frame verify_h2_frame(const Algebra& j, const Element& e, const Element& h);

// The coordinate core {z : (z,a,b) = 0 for all a,b in span{1,e,h}}, computed
// from the four basis-pair associator conditions (bilinearity makes them
// sufficient; associators with 1 vanish identically).
Subspace compute_z(const Algebra& j, const H2Frame& frame);

// N = ker(R_e - 1/2) /\ ker(R_h).
Subspace compute_n(const Algebra& j, const H2Frame& frame);

// dim J = 3 dim Z + dim N, independence of {z_i, e z_i, h z_i} u {n_j},
// N*N inside Z, Z*N inside N.
Report check_module_decomposition(const Algebra& j, const H2Frame& frame, const Subspace& z,
                                  const Subspace& n);

struct DecompositionResult {
  H2Frame frame;
  Subspace z, n;
  GradedBracketAlgebra s;  // convention raw
  // columns: [z_i | e z_i | h z_i | n_j] as coordinates in J
  Mat embedding;
};

// Restricts the Jordan product of J to S = Z + N and reads off the partial
// bracket: {z,v} = (e v, z, h) in N, {z,n} = -h (z, e, n) in Z.
// Throws bracket_escapes_component when a value leaves its component.
GradedBracketAlgebra extract_brackets(const Algebra& j, const H2Frame& frame, const Subspace& z,
                                      const Subspace& n);

// Frame verification + Z/N + module decomposition + bracket extraction.
DecompositionResult decompose(const Algebra& j, const Element& e, const Element& h);

// The tensor-form algebra of S on basis {e x z_i, f x z_i, h x z_i, k x n_j}
// with its canonical frame. Requires convention epsilon_rescaled unless the
// brackets are zero (where the twist is vacuous).
std::pair<Algebra, H2Frame> reconstruct(const GradedBracketAlgebra& s);

// The explicit isomorphism J -> reconstruct(d.s after rescale):
// a x z + n  |->  a x z + eps k x n. Columns are images of the J basis.
Mat reconstruction_map(const DecompositionResult& d, const Scalar& eps);

// L invertible, L(1_A) = 1_B and L(b_i b_j) = L(b_i) L(b_j) on basis pairs.
bool verify_isomorphism(const Algebra& a, const Algebra& b, const Mat& l);

}  // namespace h2c
