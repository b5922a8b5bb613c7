#pragma once

// The linear system of a partition and the Tverberg decision.
//
// For points p_0..p_{n-1} in R^d and a partition into r classes, the
// unknowns are alpha_0..alpha_{n-1} and z = (z_1..z_d). Each class m
// contributes d+1 rows stating sum_{i in A_m} alpha_i (1, p_i) = (1, z).
// Column i (a point) carries (1, p_i) in the rows of its class; column
// n + t - 1 (z_t) carries -1 in row t of every class; b carries 1 in row 0
// of every class. M_l is M with column l replaced by b.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/sequences.hpp"

namespace tverberg {

/// Points are degenerate for this partition (M is singular).
class DegenerateConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColumnRole {
  enum class Kind { alpha, z } kind;
  int index;  // point index, or z coordinate 1..d
  friend bool operator==(const ColumnRole&, const ColumnRole&) = default;
};

struct RowRole {
  int color;       // class m
  int coordinate;  // 0 for the affine row, 1..d for coordinates
  friend bool operator==(const RowRole&, const RowRole&) = default;
};

struct TverbergSystem {
  std::size_t d = 0;
  std::size_t r = 0;
  DenseMatrix M;
  std::vector<Scalar> rhs;
  std::vector<ColumnRole> column_map;
  std::vector<RowRole> row_map;

  std::size_t n() const { return M.cols() - d; }

  /// M with column l replaced by the right-hand side.
  DenseMatrix replaced(std::size_t l) const {
    if (l >= M.cols()) throw InputError("column index out of range");
    DenseMatrix out = M;
    out.set_column(l, rhs);
    return out;
  }
};

/// Infers r from n = (r-1)(d+1)+1.
inline std::size_t classes_for(std::size_t n, std::size_t d) {
  if (n < 1 || (n - 1) % (d + 1) != 0) throw DimensionError("sequence length is not a Tverberg number");
  return (n - 1) / (d + 1) + 1;
}

inline TverbergSystem build_system(const PointSequence& points, const Partition& p) {
  const std::size_t d = points.dim();
  const std::size_t n = points.size();
  const std::size_t r = p.r();
  if (p.n() != n) throw DimensionError("partition and point sequence sizes differ");
  if (r < 2 || n != tverberg_number(r, d)) throw DimensionError("point count must be T(r,d) for r classes");
  const std::size_t size = r * (d + 1);
  TverbergSystem sys;
  sys.d = d;
  sys.r = r;
  sys.M = DenseMatrix(size, size);
  sys.rhs.assign(size, Scalar(0));
  for (std::size_t m = 0; m < r; ++m)
    for (std::size_t c = 0; c <= d; ++c) sys.row_map.push_back({static_cast<int>(m), static_cast<int>(c)});
  for (std::size_t i = 0; i < n; ++i) {
    sys.column_map.push_back({ColumnRole::Kind::alpha, static_cast<int>(i)});
    const auto base = static_cast<std::size_t>(p.class_of(static_cast<int>(i))) * (d + 1);
    sys.M(base, i) = 1;
    for (std::size_t t = 0; t < d; ++t) sys.M(base + 1 + t, i) = points(t, i);
  }
  for (std::size_t t = 1; t <= d; ++t) {
    sys.column_map.push_back({ColumnRole::Kind::z, static_cast<int>(t)});
    for (std::size_t m = 0; m < r; ++m) sys.M(m * (d + 1) + t, n + t - 1) = -1;
  }
  for (std::size_t m = 0; m < r; ++m) sys.rhs[m * (d + 1)] = 1;
  return sys;
}

struct TverbergVerdict {
  bool is_tverberg = false;
  bool proper = true;
  std::vector<Scalar> alphas;
  std::vector<Scalar> z;
  std::vector<int> cramer_signs;  // sign det(M_l), l = 0..n-1
  int det_sign_M = 0;
  bool criteria_agree = true;     // all alpha > 0  <=>  all cramer signs equal and nonzero
  bool hulls_disjoint = false;    // M singular and M x = b inconsistent
};

enum class DecisionMode { both, direct_only };

/// Solves M x = b directly and, in `both` mode, also takes the signs of
/// det(M_l); the partition is Tverberg iff every alpha is positive.
/// Non-proper partitions are never Tverberg and are not solved. A singular
/// M with an inconsistent system means the affine hulls share no point, so
/// the partition is not Tverberg; a singular consistent system is degenerate.
inline TverbergVerdict decide_tverberg(const PointSequence& points, const Partition& p,
                                       DecisionMode mode = DecisionMode::both) {
  TverbergVerdict v;
  const std::size_t d = points.dim();
  if (!p.is_proper(d)) {
    if (p.n() != points.size()) throw DimensionError("partition and point sequence sizes differ");
    v.proper = false;
    return v;
  }
  const auto sys = build_system(points, p);
  const std::size_t n = points.size();
  std::vector<Scalar> x;
  try {
    x = solve_linear(sys.M, sys.rhs);
  } catch (const SingularSystemError&) {
    DenseMatrix aug(sys.M.rows(), sys.M.cols() + 1);
    for (std::size_t r = 0; r < sys.M.rows(); ++r) {
      for (std::size_t c = 0; c < sys.M.cols(); ++c) aug(r, c) = sys.M(r, c);
      aug(r, sys.M.cols()) = sys.rhs[r];
    }
    if (rank(aug) == rank(sys.M))
      throw DegenerateConfigurationError("singular Tverberg system: points are not in strong general position");
    v.hulls_disjoint = true;
    return v;
  }
  v.alphas.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  v.z.assign(x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
  v.is_tverberg = std::all_of(v.alphas.begin(), v.alphas.end(), [](const Scalar& a) { return a > 0; });
  if (mode == DecisionMode::both) {
    v.det_sign_M = det_sign(sys.M);
    v.cramer_signs.reserve(n);
    for (std::size_t l = 0; l < n; ++l) v.cramer_signs.push_back(det_sign(sys.replaced(l)));
    const int first = v.cramer_signs.front();
    const bool same = first != 0 && std::all_of(v.cramer_signs.begin(), v.cramer_signs.end(),
                                                 [&](int s) { return s == first; });
    v.criteria_agree = same == v.is_tverberg;
    for (std::size_t l = 0; l < n; ++l)
      if (sgn(v.alphas[l]) != v.cramer_signs[l] * v.det_sign_M) v.criteria_agree = false;
  }
  return v;
}

/// All Tverberg partitions of the points, canonical and sorted.
inline std::vector<Partition> enumerate_tverberg(const PointSequence& points,
                                                 DecisionMode mode = DecisionMode::direct_only) {
  const std::size_t d = points.dim();
  const std::size_t r = classes_for(points.size(), d);
  std::vector<Partition> out;
  for_each_partition(points.size(), r, d + 1, [&](const Partition& p) {
    if (decide_tverberg(points, p, mode).is_tverberg) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Dimension of aff{p_i : i in S}, -1 for the empty set.
inline long affine_dim(const std::vector<std::vector<Scalar>>& lifted, const std::vector<int>& S) {
  if (S.empty()) return -1;
  DenseMatrix m(S.size(), lifted.front().size());
  for (std::size_t x = 0; x < S.size(); ++x)
    for (std::size_t c = 0; c < m.cols(); ++c) m(x, c) = lifted[static_cast<std::size_t>(S[x])][c];
  return static_cast<long>(rank(m)) - 1;
}

// Dimension of the intersection of the affine hulls, -1 when empty. Each
// hull is the slice x_0 = 1 of the linear span L_m of its lifted points;
// the intersection of the L_m is the null space of the stacked
// orthogonal complements.
inline long intersection_dim(const std::vector<std::vector<Scalar>>& lifted, const std::vector<std::vector<int>>& sets) {
  const std::size_t D = lifted.front().size();
  std::vector<std::vector<Scalar>> normals;
  for (const auto& S : sets) {
    DenseMatrix m(S.size(), D);
    for (std::size_t x = 0; x < S.size(); ++x)
      for (std::size_t c = 0; c < D; ++c) m(x, c) = lifted[static_cast<std::size_t>(S[x])][c];
    for (auto& v : null_space(m)) normals.push_back(std::move(v));
  }
  std::vector<std::vector<Scalar>> meet;
  if (normals.empty()) {
    for (std::size_t c = 0; c < D; ++c) {
      std::vector<Scalar> e(D);
      e[c] = 1;
      meet.push_back(std::move(e));
    }
  } else {
    DenseMatrix stacked(normals.size(), D);
    for (std::size_t x = 0; x < normals.size(); ++x)
      for (std::size_t c = 0; c < D; ++c) stacked(x, c) = normals[x][c];
    meet = null_space(stacked);
  }
  const bool reaches_affine = std::any_of(meet.begin(), meet.end(), [](const auto& v) { return v[0] != 0; });
  if (!reaches_affine) return -1;
  return static_cast<long>(meet.size()) - 1;
}

}  // namespace detail

/// For every collection of at most r pairwise disjoint nonempty subsets,
/// d - dim(∩ H_m) = min(d + 1, Σ (d - dim H_m)) with H_m the affine hulls
/// (dim ∅ = -1). Exponential in n.
inline bool is_strong_general_position(const PointSequence& points, std::size_t r) {
  const std::size_t n = points.size();
  const long d = static_cast<long>(points.dim());
  std::vector<std::vector<Scalar>> lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    lifted[i].push_back(Scalar(1));
    for (std::size_t t = 0; t < points.dim(); ++t) lifted[i].push_back(points(t, i));
  }
  // assignment[i] in 0..r: 0 means unused, otherwise the 1-based set label;
  // labels are opened in order so each collection is visited once
  bool ok = true;
  std::vector<std::vector<int>> sets;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!ok) return;
    if (i == n) {
      if (sets.empty()) return;
      long codims = 0;
      for (const auto& S : sets) codims += d - detail::affine_dim(lifted, S);
      const long lhs = d - detail::intersection_dim(lifted, sets);
      if (lhs != std::min(d + 1, codims)) ok = false;
      return;
    }
    walk(i + 1);
    for (std::size_t m = 0; m < sets.size(); ++m) {
      sets[m].push_back(static_cast<int>(i));
      walk(i + 1);
      sets[m].pop_back();
    }
    if (sets.size() < r) {
      sets.push_back({static_cast<int>(i)});
      walk(i + 1);
      sets.pop_back();
    }
  };
  walk(0);
  return ok;
}

/// Applies an invertible (d+1)x(d+1) map with first row (1, 0, ..., 0) to
/// the lifted points (1, p_i): p_i -> c + A p_i.
inline PointSequence apply_lifted_transform(const PointSequence& points, const DenseMatrix& T) {
  const std::size_t d = points.dim();
  if (T.rows() != d + 1 || T.cols() != d + 1) throw DimensionError("transform must be (d+1)x(d+1)");
  if (T(0, 0) != 1) throw InputError("transform must fix the affine coordinate");
  for (std::size_t c = 1; c <= d; ++c)
    if (T(0, c) != 0) throw InputError("transform must fix the affine coordinate");
  if (det_sign(T) == 0) throw SingularSystemError("transform is singular");
  std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t t = 0; t < d; ++t) {
      Scalar acc = T(t + 1, 0);
      for (std::size_t c = 0; c < d; ++c) acc += T(t + 1, c + 1) * points(c, i);
      rows[t][i] = acc;
    }
  return PointSequence(std::move(rows));
}

/// decide_tverberg agrees before and after the transform.
inline bool transform_invariance_check(const PointSequence& points, const DenseMatrix& T, const Partition& p) {
  const auto moved = apply_lifted_transform(points, T);
  return decide_tverberg(points, p).is_tverberg == decide_tverberg(moved, p).is_tverberg;
}

}  // namespace tverberg
