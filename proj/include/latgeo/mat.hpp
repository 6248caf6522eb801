#pragma once

#include <utility>
#include <vector>

#include "latgeo/vec.hpp"

namespace latgeo {

/// Dense integer matrix, row-major. Rows and columns are small (points live
/// in Z^2..Z^5; canonical forms add one column per vertex).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("negative matrix shape");
  }
  Mat(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged matrix literal");
      for (long long v : r) a_.push_back(v);
    }
  }

  [[nodiscard]] static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  [[nodiscard]] Int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  [[nodiscard]] Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  [[nodiscard]] Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  [[nodiscard]] Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        Int aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  /// Matrix-vector product (points are column vectors).
  [[nodiscard]] Vec apply(const Vec& v) const {
    if (cols_ != v.dim()) throw PreconditionError("matrix apply shape mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) {
      Int s = 0;
      for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) = default;

  /// Row-major entrywise lexicographic order; the frozen comparison used by
  /// canonical forms.
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (auto c = a.a_[i] <=> b.a_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
[[nodiscard]] inline Int det(const Mat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  Mat a = m;
  Int denom = 1;
  int swaps = 0;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), denom);
      a.at(i, k) = 0;
    }
    denom = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return swaps % 2 == 0 ? d : -d;
}

struct HnfResult {
  Mat h;  // the normal form
  Mat u;  // unimodular row transform, u * input == h
};

namespace detail {

/// Row-style Hermite form in upper echelon shape: pivots scan left to right,
/// pivot entries positive, entries above a pivot reduced into [0, pivot).
/// Unique for every input; columns are final as soon as they are processed.
inline HnfResult hnf_upper(const Mat& m) {
  Mat h = m;
  Mat u = Mat::identity(m.rows());
  int pivot_row = 0;
  for (int j = 0; j < h.cols() && pivot_row < h.rows(); ++j) {
    // Concentrate the gcd of column j (rows >= pivot_row) into one row.
    while (true) {
      int best = -1;
      int nonzero = 0;
      for (int i = pivot_row; i < h.rows(); ++i)
        if (h.at(i, j) != 0) {
          ++nonzero;
          if (best < 0 || abs(h.at(i, j)) < abs(h.at(best, j))) best = i;
        }
      if (nonzero == 0) {
        best = -1;
        break;
      }
      if (nonzero == 1) {
        if (best != pivot_row) {
          for (int c = 0; c < h.cols(); ++c) std::swap(h.at(best, c), h.at(pivot_row, c));
          for (int c = 0; c < u.cols(); ++c) std::swap(u.at(best, c), u.at(pivot_row, c));
        }
        break;
      }
      for (int i = pivot_row; i < h.rows(); ++i) {
        if (i == best || h.at(i, j) == 0) continue;
        Int q = Int(h.at(i, j).value() / h.at(best, j).value());  // truncated: shrinks |entry|
        for (int c = 0; c < h.cols(); ++c) h.at(i, c) -= q * h.at(best, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(best, c);
      }
    }
    if (h.at(pivot_row, j) == 0) continue;  // column has no new pivot
    if (h.at(pivot_row, j) < 0) {
      for (int c = 0; c < h.cols(); ++c) h.at(pivot_row, c) = -h.at(pivot_row, c);
      for (int c = 0; c < u.cols(); ++c) u.at(pivot_row, c) = -u.at(pivot_row, c);
    }
    for (int i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h.at(i, j), h.at(pivot_row, j));
      if (q == 0) continue;
      for (int c = 0; c < h.cols(); ++c) h.at(i, c) -= q * h.at(pivot_row, c);
      for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

/// Reverse row and column order.
inline Mat reversed(const Mat& m) {
  Mat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
  return r;
}

}  // namespace detail

/// Hermite normal form in the frozen convention: u * m == h, h
/// lower-triangular for square nonsingular m, diagonal positive, sub-diagonal
/// entries nonnegative and strictly smaller than the diagonal entry of their
/// column. Obtained by mirroring the upper echelon form, so it is the unique
/// lattice-basis normal form of the row lattice of m for every shape.
[[nodiscard]] inline HnfResult hermite_normal_form(const Mat& m) {
  HnfResult r = detail::hnf_upper(detail::reversed(m));
  return {detail::reversed(r.h), detail::reversed(r.u)};
}

[[nodiscard]] inline int rank(const Mat& m) {
  Mat h = detail::hnf_upper(m).h;
  int r = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) nonzero = true;
    if (nonzero) ++r;
  }
  return r;
}

/// Classical adjugate: adjugate(m) * m == det(m) * I.
[[nodiscard]] inline Mat adjugate(const Mat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("adjugate of non-square matrix");
  int n = m.rows();
  Mat adj(n, n);
  if (n == 0) return adj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;
    }
  return adj;
}

/// Inverse of a matrix with determinant +-1 (adjugate divided by det).
[[nodiscard]] inline Mat inverse_unimodular(const Mat& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw PreconditionError("matrix is not unimodular");
  Mat inv = adjugate(m);
  if (d == -1)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = -inv.at(i, j);
  return inv;
}

/// Primitive normal of the hyperplane spanned by the rows of a
/// (d-1) x d matrix: entry i is (-1)^i times the minor omitting column i.
/// Zero vector iff the rows do not span a hyperplane.
[[nodiscard]] inline Vec hyperplane_normal(const Mat& dirs) {
  if (dirs.rows() + 1 != dirs.cols()) throw PreconditionError("normal needs d-1 rows in dim d");
  int d = dirs.cols();
  Vec n(d);
  for (int i = 0; i < d; ++i) {
    Mat minor(d - 1, d - 1);
    for (int r = 0; r < d - 1; ++r)
      for (int c = 0, cc = 0; c < d; ++c) {
        if (c == i) continue;
        minor.at(r, cc++) = dirs.at(r, c);
      }
    Int m = det(minor);
    n[i] = (i % 2 == 0) ? m : -m;
  }
  return primitive_part(n).direction;
}

/// Completes a primitive row functional y to a unimodular matrix whose last
/// row is y: applying the result to a point x yields coordinates in which
/// <y, x> is the final coordinate.
[[nodiscard]] inline Mat complete_primitive_to_unimodular(const Vec& y) {
  int n = y.dim();
  Mat col(n, 1);
  for (int i = 0; i < n; ++i) col.at(i, 0) = y[i];
  HnfResult r = detail::hnf_upper(col);
  if (r.h.at(0, 0) != 1) throw PreconditionError("functional is not primitive");
  // u * y == e1, so y is the first column of u^-1, i.e. the first row of
  // (u^-1)^T; move it to the bottom.
  Mat c = inverse_unimodular(r.u).transposed();
  Mat out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 1; i < n; ++i) out.at(i - 1, j) = c.at(i, j);
    out.at(n - 1, j) = c.at(0, j);
  }
  return out;
}

}  // namespace latgeo
