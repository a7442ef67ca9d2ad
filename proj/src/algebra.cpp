#include "h2c/algebra.hpp"

#include <algorithm>

namespace h2c {

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_names)
    : field_(field), dim_(basis_names.size()), names_(std::move(basis_names)), rows_(dim_ * dim_) {
  if (dim_ == 0) throw Error(Errc::invalid_input, "algebra dimension must be positive");
}

void Algebra::check_index(std::size_t i) const {
  if (i >= dim_) throw Error(Errc::dimension_mismatch, "basis index out of range");
}

void Algebra::set_product(std::size_t i, std::size_t j, Terms terms) {
  check_index(i);
  check_index(j);
  for (auto& [k, c] : terms) {
    check_index(k);
    if (c.is_zero()) throw Error(Errc::invalid_input, "zero coefficient in sparse structure row");
    if (!(c.field() == field_)) throw Error(Errc::field_mismatch, "structure coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < terms.size(); ++t)
    if (terms[t].first == terms[t - 1].first)
      throw Error(Errc::invalid_input, "duplicate k index in structure row");
  rows_[i * dim_ + j] = std::move(terms);
}

void Algebra::add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  check_index(i);
  check_index(j);
  check_index(k);
  auto& row = rows_[i * dim_ + j];
  for (auto& [kk, cc] : row) {
    if (kk == k) {
      cc += c;
      if (cc.is_zero()) {
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [&](const auto& t) { return t.first == k; }),
                  row.end());
      }
      return;
    }
  }
  row.emplace_back(k, c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

const Algebra::Terms& Algebra::product_terms(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  return rows_[i * dim_ + j];
}

Element Algebra::basis_element(std::size_t i) const {
  check_index(i);
  Element e = zero();
  e[i] = Scalar::one(field_);
  return e;
}

Element Algebra::basis_product(std::size_t i, std::size_t j) const {
  Element r = zero();
  for (const auto& [k, c] : product_terms(i, j)) r[k] = c;
  return r;
}

void Algebra::declare_unit(Element u) {
  if (u.size() != dim_) throw Error(Errc::dimension_mismatch, "unit dimension mismatch");
  for (std::size_t j = 0; j < dim_; ++j) {
    Element bj = basis_element(j);
    if (mul(u, bj) != bj || mul(bj, u) != bj)
      throw Error(Errc::invalid_input, "declared unit fails on basis vector " + names_[j]);
  }
  unit_ = std::move(u);
}

Element Algebra::mul(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(Errc::dimension_mismatch, "element dimension mismatch");
  Element r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : rows_[i * dim_ + j]) r[k] += xy * c;
    }
  }
  return r;
}

Element Algebra::mul_basis(const Element& x, std::size_t j) const {
  check_index(j);
  Element r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [k, c] : rows_[i * dim_ + j]) r[k] += x[i] * c;
  }
  return r;
}

Mat Algebra::mult_matrix(const Element& x) const {
  Mat m(dim_, dim_, field_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Element col = mul(x, basis_element(j));
    m.set_col(j, col);
  }
  return m;
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  return a.mul(a.mul(x, y), z) - a.mul(x, a.mul(y, z));
}

Element commutator(const Algebra& a, const Element& x, const Element& y) {
  return a.mul(x, y) - a.mul(y, x);
}

Element pchelintsev_k(const Algebra& a, const Element& x, const Element& y,
                      const Element& z, const Element& t) {
  return associator(a, a.mul(x, y), z, t) - a.mul(associator(a, x, z, t), y) -
         a.mul(x, associator(a, y, z, t));
}

Report is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Element d = a.basis_product(i, j) - a.basis_product(j, i);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!d[k].is_zero())
          return {false, "c(" + a.basis_name(i) + "," + a.basis_name(j) + ")_" + a.basis_name(k) +
                             " != c(" + a.basis_name(j) + "," + a.basis_name(i) + ")_" +
                             a.basis_name(k)};
    }
  return {};
}

namespace {

// (v, b_x, b_y) for a coordinate vector v and basis indices x, y
Element basis_associator(const Algebra& a, const std::vector<Element>& prod,
                         const Element& v, std::size_t x, std::size_t y) {
  return a.mul_basis(a.mul_basis(v, x), y) - a.mul(v, prod[x * a.dim() + y]);
}

}  // namespace

Report is_jordan(const Algebra& a) {
  Report comm = is_commutative(a);
  if (!comm.pass) return {false, "not commutative: " + comm.witness};

  const std::size_t n = a.dim();
  std::vector<Element> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);

  // (zt,x,y)+(yz,x,t)+(yt,x,z) is symmetric in {z,t,y} once products commute,
  // so unordered triples suffice.
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t t = z; t < n; ++t)
      for (std::size_t y = t; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
          Element s = basis_associator(a, prod, prod[z * n + t], x, y) +
                      basis_associator(a, prod, prod[y * n + z], x, t) +
                      basis_associator(a, prod, prod[y * n + t], x, z);
          if (!is_zero_vec(s))
            return {false, "quadruple (z,t,x,y)=(" + a.basis_name(z) + "," + a.basis_name(t) +
                               "," + a.basis_name(x) + "," + a.basis_name(y) +
                               ") residual=" + vec_str(s)};
        }
  return {};
}

Report is_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Element> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element d = a.mul_basis(prod[i * n + j], k) - a.mul(a.basis_element(i), prod[j * n + k]);
        if (!is_zero_vec(d))
          return {false, "triple (" + a.basis_name(i) + "," + a.basis_name(j) + "," +
                             a.basis_name(k) + ") associator=" + vec_str(d)};
      }
  return {};
}

Element find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  // stack u*b_j = b_j and b_j*u = b_j over all j
  Mat sys(2 * n * n, n, a.field());
  Vec rhs = zero_vec(2 * n * n, a.field());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product_terms(i, j)) sys.at(j * n + k, i) = c;           // (b_i b_j)_k
      for (const auto& [k, c] : a.product_terms(j, i)) sys.at(n * n + j * n + k, i) = c;  // (b_j b_i)_k
    }
    rhs[j * n + j] = Scalar::one(a.field());
    rhs[n * n + j * n + j] = Scalar::one(a.field());
  }
  auto u = solve(sys, rhs);
  if (!u) throw Error(Errc::no_unit, "algebra has no two-sided unit");
  return *u;
}

Subspace span_closure(const Algebra& a, const std::vector<Element>& gens) {
  Subspace s = gens.empty() ? Subspace::zero(a.dim(), a.field())
                            : Subspace::span(Mat::from_rows(gens, a.dim(), a.field()));
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_vector(i));
    std::size_t base = rows.size();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < base; ++j) rows.push_back(a.mul(rows[i], rows[j]));
    Subspace next = Subspace::span(Mat::from_rows(rows, a.dim(), a.field()));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

}  // namespace h2c
