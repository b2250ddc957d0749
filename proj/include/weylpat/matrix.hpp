#pragma once

// Dense exact rational matrices: arithmetic, rank, kernel, solve, inverse,
// determinant. Everything is plain Gaussian elimination over Q; sizes in
// this library never exceed a few dozen rows.

#include "weylpat/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weylpat {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("Mat: entry count mismatch");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_)
        throw std::invalid_argument("from_cols: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<Rat>& entries() const { return a_; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  Vec operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("Mat*v: shape mismatch");
    Vec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat operator*(const Rat& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat+: shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat-: shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap((*this)(p, j), (*this)(r, j));
      Rat inv = Rat(1) / (*this)(r, c);
      for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rat f = (*this)(i, c);
        for (std::size_t j = 0; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  Rat det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    Mat m = *this;
    Rat d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) return Rat(0);
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      Rat inv = Rat(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        Rat f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  bool invertible() const { return rows_ == cols_ && det() != 0; }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  // Basis of the right null space.
  std::vector<Vec> kernel() const {
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      Vec v(cols_, Rat(0));
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of A x = b, or nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: shape mismatch");
    Mat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Rank of a set of vectors, used for dependence tests on normals.
inline std::size_t span_rank(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return Mat::from_rows(vs).rank();
}

}  // namespace weylpat
