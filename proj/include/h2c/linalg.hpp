#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "h2c/field.hpp"

namespace h2c {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& f);
bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v);

// Dense matrix over one exact field, row-major.
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}
  static Mat identity(std::size_t n, const FieldSpec& f);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Vec apply(const Vec& v) const;  // matrix * column vector
  Mat operator*(const Mat& b) const;
  Mat transposed() const;
  bool operator==(const Mat&) const = default;

  // In-place reduced row echelon form, deterministic pivoting (leftmost
  // column, first nonzero row). Returns pivot column indices.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

// Reduced-echelon basis of the right null space {v : M v = 0}.
Mat kernel(const Mat& m);

// One solution of M x = b with free variables set to 0, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

// Linear subspace given by a reduced-row-echelon basis.
class Subspace {
 public:
  static Subspace span(const Mat& vectors_as_rows);
  static Subspace zero(std::size_t ambient, const FieldSpec& f);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Coordinates of v in the echelon basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(Mat basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace h2c
