#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2c/linalg.hpp"

namespace h2c {

using Element = Vec;

struct Report {
  bool pass = true;
  std::string witness;  // describes the first failure, empty on pass
};

// Finite-dimensional algebra over an exact field, given by structure
// constants b_i b_j = sum_k c_ijk b_k on a named basis. The tensor is kept
// sparse per (i,j) pair; an empty row means the product is zero.
class Algebra {
 public:
  using Terms = std::vector<std::pair<std::size_t, Scalar>>;

  Algebra(FieldSpec field, std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }

  // Structure-constant setup (construction phase).
  void set_product(std::size_t i, std::size_t j, Terms terms);
  void add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  const Terms& product_terms(std::size_t i, std::size_t j) const;

  // Declares and verifies a two-sided unit; throws invalid_input on failure.
  void declare_unit(Element u);
  const std::optional<Element>& unit() const { return unit_; }

  Element zero() const { return zero_vec(dim_, field_); }
  Element basis_element(std::size_t i) const;
  Element basis_product(std::size_t i, std::size_t j) const;  // dense copy

  Element mul(const Element& x, const Element& y) const;
  Element mul_basis(const Element& x, std::size_t j) const;  // x * b_j
  Mat mult_matrix(const Element& x) const;  // v -> x*v as a matrix (right mult of v by x)

  bool operator==(const Algebra&) const = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Terms> rows_;  // index i*dim + j
  std::optional<Element> unit_;

  void check_index(std::size_t i) const;
};

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);
Element commutator(const Algebra& a, const Element& x, const Element& y);

// k(x,y;z,t) = (xy,z,t) - (x,z,t)y - x(y,z,t)
Element pchelintsev_k(const Algebra& a, const Element& x, const Element& y,
                      const Element& z, const Element& t);

// Pass iff c_ijk = c_jik for all i,j,k; witness names the first offending pair.
Report is_commutative(const Algebra& a);

// Pass iff commutative and the linearized identity
// (zt,x,y)+(yz,x,t)+(yt,x,z) = 0 holds on all basis quadruples.
Report is_jordan(const Algebra& a);

// Pass iff (b_i,b_j,b_k) = 0 for all basis triples.
Report is_associative(const Algebra& a);

// The unique two-sided unit, found by solving u*b_j = b_j = b_j*u.
// Throws no_unit if the system is inconsistent.
Element find_unit(const Algebra& a);

// Smallest subspace containing gens and closed under multiplication.
Subspace span_closure(const Algebra& a, const std::vector<Element>& gens);

}  // namespace h2c
