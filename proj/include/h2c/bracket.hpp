#pragma once

#include <optional>

#include "h2c/algebra.hpp"

namespace h2c {

enum class BracketConvention { raw, epsilon_rescaled };

std::string convention_name(BracketConvention c);
BracketConvention convention_from_name(std::string_view s);

// table[i][j] = coordinate vector of the value in the target component
using ProductTable = std::vector<std::vector<Vec>>;

// Z2-graded unital Jordan algebra S = S0 + S1 together with a partial
// anticommutative odd bracket {Si,Sj} -> S(i+j+1), undefined on S1 x S1
// unless a total-bracket table b11 is supplied (Cohn envelope input).
struct GradedBracketAlgebra {
  FieldSpec field;
  std::size_t s0_dim = 0, s1_dim = 0;
  ProductTable p00;  // S0 x S0 -> S0, Jordan product
  ProductTable p01;  // S0 x S1 -> S1
  ProductTable p11;  // S1 x S1 -> S0
  ProductTable b00;  // S0 x S0 -> S1, bracket
  ProductTable b01;  // S0 x S1 -> S0, bracket
  std::optional<ProductTable> b11;  // S1 x S1 -> S1, only for total brackets
  BracketConvention convention = BracketConvention::raw;
  Vec unit;  // coordinates in S0

  bool has_zero_brackets() const;
  bool operator==(const GradedBracketAlgebra&) const = default;
};

ProductTable make_table(std::size_t rows, std::size_t cols, std::size_t target_dim,
                        const FieldSpec& f);

// Shape/index validation; throws invalid_input on malformed tables.
void validate_shape(const GradedBracketAlgebra& s);

// Homogeneous graded vector: degree 0 lives in S0, degree 1 in S1.
struct GVec {
  int deg = 0;
  Vec v;
};

GVec graded_basis(const GradedBracketAlgebra& s, int deg, std::size_t i);
GVec graded_zero(const GradedBracketAlgebra& s, int deg);
// Jordan product of S, bilinear over the tables.
GVec gmul(const GradedBracketAlgebra& s, const GVec& a, const GVec& b);
// Partial bracket; nullopt on the undefined S1 x S1 slot. Never consults b11.
std::optional<GVec> gbracket(const GradedBracketAlgebra& s, const GVec& a, const GVec& b);
GVec gassoc(const GradedBracketAlgebra& s, const GVec& a, const GVec& b, const GVec& c);

// The underlying (ungraded) algebra on basis [S0-basis, S1-basis].
Algebra underlying_algebra(const GradedBracketAlgebra& s);
// The even part S0 as a standalone algebra.
Algebra even_part_algebra(const GradedBracketAlgebra& s);

// Unit valid, underlying algebra Jordan, bracket anticommutative.
Report check_graded_algebra(const GradedBracketAlgebra& s);

struct FamilyResult {
  std::string family;
  bool pass = true;
  std::string witness;
};

struct IdentityReport {
  std::vector<FamilyResult> families;
  bool all_pass() const;
  const FamilyResult* find(std::string_view name) const;
};

// Exhaustive check of the bracket identity suite over basis tuples, for
// every grading pattern whose bracket chain stays inside the defined slots.
// The associator/double-bracket normal form depends on the convention flag:
// raw checks (x,y,z) = 4{{x,z},y}, epsilon_rescaled (x,y,z) = 4{y,{x,z}}.
IdentityReport verify_bracket_identities(const GradedBracketAlgebra& s);

// Multiplies every bracket table by eps (eps^2 = -1) and flips the
// convention flag. Throws bad_epsilon / wrong_convention.
GradedBracketAlgebra rescale_bracket(const GradedBracketAlgebra& s, const Scalar& eps);

}  // namespace h2c
