#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Scalar type.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/sequences.hpp"

namespace oracle {

using tverberg::Scalar;
using Grid = std::vector<std::vector<Scalar>>;

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

/// Leibniz expansion.
inline Scalar leibniz_det(const Grid& a) {
  const std::size_t n = a.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar total = 0;
  do {
    Scalar term = permutation_sign(p);
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][static_cast<std::size_t>(p[i])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Every nonzero Leibniz term: (row -> column map, signed product).
struct Term {
  std::vector<int> column_of_row;
  Scalar value;
};

inline std::vector<Term> leibniz_terms(const Grid& a) {
  const std::size_t n = a.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Term> out;
  do {
    Scalar term = permutation_sign(p);
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][static_cast<std::size_t>(p[i])];
    if (term != 0) out.push_back({p, term});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Textbook Gauss-Jordan over the rationals; nullopt when singular.
inline std::optional<std::vector<Scalar>> gauss_solve(Grid a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// The Tverberg matrix written out from the row/column conventions:
/// columns alpha_0..alpha_{n-1}, z_1..z_d; rows (class m, coordinate c).
inline Grid tverberg_matrix(const std::vector<std::vector<Scalar>>& points, const std::vector<int>& class_of,
                            std::size_t r) {
  const std::size_t n = points.size();
  const std::size_t d = points.front().size();
  const std::size_t size = r * (d + 1);
  Grid m(size, std::vector<Scalar>(size));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = static_cast<std::size_t>(class_of[i]) * (d + 1);
    m[g][i] = 1;
    for (std::size_t c = 0; c < d; ++c) m[g + 1 + c][i] = points[i][c];
  }
  for (std::size_t c = 1; c <= d; ++c)
    for (std::size_t k = 0; k < r; ++k) m[k * (d + 1) + c][n + c - 1] = -1;
  return m;
}

/// Tverberg by definition: solve for the alphas and require all positive.
inline bool is_tverberg_direct(const std::vector<std::vector<Scalar>>& points, const std::vector<int>& class_of,
                               std::size_t r) {
  const std::size_t d = points.front().size();
  auto m = tverberg_matrix(points, class_of, r);
  std::vector<Scalar> b(m.size());
  for (std::size_t k = 0; k < r; ++k) b[k * (d + 1)] = 1;
  auto x = gauss_solve(m, b);
  if (!x) return false;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((*x)[i] <= 0) return false;
  return true;
}

/// Rainbow by definition on 0-based blocks {s(r-1), ..., s(r-1)+r-1}.
inline bool is_rainbow_direct(const std::vector<int>& class_of, std::size_t d, std::size_t r) {
  for (std::size_t s = 0; s <= d; ++s) {
    std::vector<int> hits(r, 0);
    for (std::size_t x = 0; x < r; ++x) ++hits[static_cast<std::size_t>(class_of[s * (r - 1) + x])];
    for (int h : hits)
      if (h != 1) return false;
  }
  return true;
}

/// All surjective colorings [n] -> [r] with class sizes in 1..cap,
/// classes ordered by smallest element.
inline std::vector<std::vector<int>> proper_colorings(std::size_t n, std::size_t r, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
    if (i == n) {
      if (used != static_cast<int>(r)) return;
      std::vector<std::size_t> size(r, 0);
      for (int x : c) ++size[static_cast<std::size_t>(x)];
      for (auto s : size)
        if (s == 0 || s > cap) return;
      out.push_back(c);
      return;
    }
    for (int k = 0; k <= used && k < static_cast<int>(r); ++k) {
      c[i] = k;
      go(i + 1, std::max(used, k + 1));
    }
  };
  go(0, 0);
  return out;
}

inline tverberg::Partition to_partition(const std::vector<int>& class_of, std::size_t r) {
  std::vector<std::vector<int>> classes(r);
  for (std::size_t i = 0; i < class_of.size(); ++i) classes[static_cast<std::size_t>(class_of[i])].push_back(static_cast<int>(i));
  return tverberg::Partition(class_of.size(), std::move(classes));
}

}  // namespace oracle
