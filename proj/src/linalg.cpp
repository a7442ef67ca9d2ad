#include "h2c/linalg.hpp"

#include <algorithm>

namespace h2c {

Vec zero_vec(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

Mat Mat::identity(std::size_t n, const FieldSpec& f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f) {
  Mat m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "row size mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<long>(i * cols_));
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(Errc::dimension_mismatch, "col size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix/vector size mismatch");
  Vec r = zero_vec(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& m = at(i, j);
      if (!m.is_zero() && !v[j].is_zero()) r[i] += m * v[j];
    }
  }
  return r;
}

Mat Mat::operator*(const Mat& b) const {
  if (cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  Mat r(rows_, b.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += x * b.at(k, j);
      }
    }
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<std::size_t> Mat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (!at(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
    Scalar inv = at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Scalar factor = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= factor * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Mat::rank() const {
  Mat copy = *this;
  return copy.rref().size();
}

Mat kernel(const Mat& m) {
  Mat red = m;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(m.cols(), m.field());
    v[c] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
    basis.push_back(std::move(v));
  }
  Mat out = Mat::from_rows(basis, m.cols(), m.field());
  out.rref();
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(Errc::dimension_mismatch, "rhs size mismatch");
  Mat aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x = zero_vec(m.cols(), m.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  auto pivots = aug.rref();
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Subspace Subspace::span(const Mat& vectors_as_rows) {
  Mat red = vectors_as_rows;
  std::vector<std::size_t> pivots = red.rref();
  Mat basis(pivots.size(), red.cols(), red.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, red.row(i));
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
  return Subspace(Mat(0, ambient, f), {});
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient()) throw Error(Errc::dimension_mismatch, "ambient dimension mismatch");
  Vec rem = v;
  Vec coords = zero_vec(dim(), basis_.field());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = rem[pivots_[i]];  // by value: the loop below clears this slot
    if (c.is_zero()) continue;
    coords[i] = c;
    for (std::size_t j = 0; j < ambient(); ++j) rem[j] -= c * basis_.at(i, j);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

}  // namespace h2c
