#pragma once

// Exact rational scalars and dense matrices.
//
// Scalars are GMP rationals and are always kept in canonical form
// (positive denominator, coprime numerator/denominator), so structural
// equality is value equality. Determinants and linear solves run a
// fraction-free (Bareiss) elimination over integers obtained by clearing
// the denominators of each row; the entries of the sequences this library
// works with can be hundreds of thousands of bits wide.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tverberg {

using Integer = mpz_class;
using Scalar = mpq_class;

/// Malformed arguments: wrong shapes, out-of-range indices, broken preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A square system with zero determinant.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (optional leading sign). The result is canonical.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto is_digits = [](std::string_view v) {
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed scalar '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw InputError("zero denominator in scalar '" + s + "'");
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

/// Decimal "p/q"; the denominator is omitted when it is 1.
inline std::string to_string(const Scalar& x) { return x.get_str(10); }

inline int sign(const Scalar& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

/// Q^e for integer e of either sign.
inline Scalar power(const Scalar& base, long e) {
  if (base == 0 && e < 0) throw InputError("zero base with negative exponent");
  Integer num, den;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Scalar out = e < 0 ? Scalar(den, num) : Scalar(num, den);
  out.canonicalize();
  return out;
}

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void set_column(std::size_t c, std::span<const T> values) {
    if (values.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<T> operator*(std::span<const T> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      T acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(r, k) == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += (*this)(r, k) * o(k, c);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = Matrix<Scalar>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

namespace detail {

// Multiplies every row by the lcm of its denominators. Returns the integer
// matrix and the product of the multipliers (always positive).
inline std::pair<Matrix<Integer>, Integer> clear_denominators(const DenseMatrix& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      Integer q;
      mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      out(r, c) = x.get_num() * q;
    }
    scale *= l;
  }
  return {std::move(out), std::move(scale)};
}

// In-place fraction-free forward elimination on the first `pivot_cols`
// columns. Returns false if a pivot column is entirely zero (singular).
// On success the matrix is upper triangular in those columns and
// `swaps_odd` records the parity of row exchanges.
inline bool bareiss_forward(Matrix<Integer>& a, std::size_t pivot_cols, bool& swaps_odd) {
  const std::size_t n = a.rows();
  swaps_odd = false;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      a.swap_rows(p, k);
      swaps_odd = !swaps_odd;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        t = a(i, j) * a(k, k);
        mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

}  // namespace detail

/// Exact determinant.
inline Scalar determinant(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  auto [a, scale] = detail::clear_denominators(m);
  bool odd = false;
  if (!detail::bareiss_forward(a, a.cols(), odd)) return Scalar(0);
  Integer det = a(a.rows() - 1, a.cols() - 1);
  if (odd) det = -det;
  Scalar out(det, scale);
  out.canonicalize();
  return out;
}

/// Sign of the determinant in {-1, 0, +1}.
inline int det_sign(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("det_sign of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto a = detail::clear_denominators(m).first;
  bool odd = false;
  if (!detail::bareiss_forward(a, a.cols(), odd)) return 0;
  int s = sgn(a(a.rows() - 1, a.cols() - 1));
  return odd ? -s : s;
}

/// The unique x with m x = b; throws SingularSystemError when det(m) = 0.
inline std::vector<Scalar> solve_linear(const DenseMatrix& m, std::span<const Scalar> b) {
  if (!m.square()) throw DimensionError("solve_linear needs a square matrix");
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.rows();
  DenseMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto a = detail::clear_denominators(aug).first;
  bool odd = false;
  if (!detail::bareiss_forward(a, n, odd)) throw SingularSystemError("singular linear system");
  std::vector<Scalar> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc(a(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc -= Scalar(a(i, j)) * x[j];
    x[i] = acc / Scalar(a(i, i));
  }
  return x;
}

namespace detail {

// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(DenseMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    Scalar inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank(const DenseMatrix& m) {
  DenseMatrix a = m;
  return detail::rref(a).size();
}

/// A basis of {x : m x = 0}.
inline std::vector<std::vector<Scalar>> null_space(const DenseMatrix& m) {
  DenseMatrix a = m;
  auto pivots = detail::rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tverberg
