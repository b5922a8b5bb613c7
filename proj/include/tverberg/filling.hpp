#pragma once

// G fillings: the (d+1) x r grids that index the nonzero monomials of
// det(M_l).
//
// Row k of a grid stands for coordinate k of the ordered lifted sequence,
// column m for class A_m. A cell holds an element i of [n] \ {l} (meaning
// the factor a^(k)_i) or the z-entry of its row. Every row holds exactly
// one z-entry. A LiftFrame ties grid rows to the rows of the Tverberg
// matrix, so the all-ones row need not be row 0 of the grid.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/dominance.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/sequences.hpp"
#include "tverberg/system.hpp"

namespace tverberg {

/// Dimension d with n = (r - 1)(d + 1) + 1.
inline std::size_t dimension_for(const Partition& p) {
  if (p.r() < 2 || (p.n() - 1) % (p.r() - 1) != 0) throw DimensionError("partition size is not a Tverberg number");
  const std::size_t rows = (p.n() - 1) / (p.r() - 1);
  if (rows < 2) throw DimensionError("partition size is too small");
  return rows - 1;
}

class GFilling {
 public:
  static constexpr int kZ = -1;

  GFilling() = default;
  GFilling(std::size_t d, std::size_t r, int ell) : d_(d), r_(r), ell_(ell), cells_((d + 1) * r, kZ) {}

  std::size_t d() const noexcept { return d_; }
  std::size_t rows() const noexcept { return d_ + 1; }
  std::size_t r() const noexcept { return r_; }
  int ell() const noexcept { return ell_; }

  int& at(std::size_t row, std::size_t col) { return cells_.at(row * r_ + col); }
  int at(std::size_t row, std::size_t col) const { return cells_.at(row * r_ + col); }
  bool is_z(std::size_t row, std::size_t col) const { return at(row, col) == kZ; }

  /// Column of the z-entry in `row` (the first, if the grid is invalid).
  std::size_t z_column(std::size_t row) const {
    for (std::size_t c = 0; c < r_; ++c)
      if (is_z(row, c)) return c;
    throw InputError("row without a z-entry");
  }

  /// z_columns()[k] is the column of the z-entry in row k.
  std::vector<int> z_columns() const {
    std::vector<int> out(rows());
    for (std::size_t k = 0; k < rows(); ++k) out[k] = static_cast<int>(z_column(k));
    return out;
  }

  /// Elements of every column increase from top to bottom.
  bool column_increasing() const {
    for (std::size_t c = 0; c < r_; ++c) {
      int last = -1;
      for (std::size_t k = 0; k < rows(); ++k) {
        if (is_z(k, c)) continue;
        if (at(k, c) < last) return false;
        last = at(k, c);
      }
    }
    return true;
  }

  friend bool operator==(const GFilling&, const GFilling&) = default;
  friend bool operator<(const GFilling& a, const GFilling& b) { return a.cells_ < b.cells_; }

 private:
  std::size_t d_ = 0;
  std::size_t r_ = 0;
  int ell_ = -1;
  std::vector<int> cells_;
};

/// z-entries each column needs: d + 1 - |A_m \ {l}|.
inline std::vector<int> z_counts(const Partition& p, int ell) {
  const std::size_t d = dimension_for(p);
  std::vector<int> out(p.r());
  for (std::size_t m = 0; m < p.r(); ++m) {
    int k = static_cast<int>(p.cls(m).size());
    if (p.class_of(ell) == static_cast<int>(m)) --k;
    out[m] = static_cast<int>(d) + 1 - k;
  }
  return out;
}

/// Valid: one z-entry per row; column m holds exactly the elements of
/// A_m \ {l}.
inline bool is_valid_filling(const GFilling& g, const Partition& p) {
  const std::size_t d = dimension_for(p);
  if (g.d() != d || g.r() != p.r() || g.ell() < 0 || static_cast<std::size_t>(g.ell()) >= p.n()) return false;
  for (std::size_t k = 0; k <= d; ++k) {
    int zs = 0;
    for (std::size_t c = 0; c < g.r(); ++c) zs += g.is_z(k, c);
    if (zs != 1) return false;
  }
  for (std::size_t c = 0; c < g.r(); ++c) {
    std::vector<int> seen;
    for (std::size_t k = 0; k <= d; ++k)
      if (!g.is_z(k, c)) seen.push_back(g.at(k, c));
    std::sort(seen.begin(), seen.end());
    std::vector<int> want;
    for (int i : p.cls(c))
      if (i != g.ell()) want.push_back(i);
    if (seen != want) return false;
  }
  return true;
}

/// Fills every column from a z pattern, placing elements in increasing
/// order down the non-z slots.
inline GFilling filling_from_z_columns(const Partition& p, int ell, const std::vector<int>& z_column_of_row) {
  const std::size_t d = dimension_for(p);
  if (z_column_of_row.size() != d + 1) throw DimensionError("z pattern must have d+1 rows");
  GFilling g(d, p.r(), ell);
  for (std::size_t c = 0; c < p.r(); ++c) {
    std::vector<int> elems;
    for (int i : p.cls(c))
      if (i != ell) elems.push_back(i);
    std::size_t next = 0;
    for (std::size_t k = 0; k <= d; ++k) {
      if (z_column_of_row[k] == static_cast<int>(c)) continue;
      if (next >= elems.size()) throw InputError("z pattern leaves too many slots in column " + std::to_string(c));
      g.at(k, c) = elems[next++];
    }
    if (next != elems.size()) throw InputError("z pattern leaves too few slots in column " + std::to_string(c));
  }
  return g;
}

/// All z patterns compatible with the column z counts.
inline std::vector<std::vector<int>> enumerate_z_patterns(const Partition& p, int ell) {
  const std::size_t d = dimension_for(p);
  auto need = z_counts(p, ell);
  std::vector<std::vector<int>> out;
  std::vector<int> pattern(d + 1);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == d + 1) {
      if (std::all_of(need.begin(), need.end(), [](int x) { return x == 0; })) out.push_back(pattern);
      return;
    }
    for (std::size_t c = 0; c < need.size(); ++c) {
      if (need[c] == 0) continue;
      --need[c];
      pattern[k] = static_cast<int>(c);
      walk(k + 1);
      ++need[c];
    }
  };
  walk(0);
  return out;
}

/// All valid fillings for excluded index ell; with `column_increasing_only`
/// just the one column-increasing filling per z pattern.
inline std::vector<GFilling> enumerate_valid_fillings(const Partition& p, int ell, bool column_increasing_only = false) {
  if (ell < 0 || static_cast<std::size_t>(ell) >= p.n()) throw InputError("excluded index out of range");
  std::vector<GFilling> out;
  for (const auto& pattern : enumerate_z_patterns(p, ell)) {
    GFilling base = filling_from_z_columns(p, ell, pattern);
    if (column_increasing_only) {
      out.push_back(base);
      continue;
    }
    // every arrangement of each column's elements over its non-z slots
    std::function<void(std::size_t, GFilling&)> per_column = [&](std::size_t c, GFilling& g) {
      if (c == p.r()) {
        out.push_back(g);
        return;
      }
      std::vector<std::size_t> slots;
      std::vector<int> elems;
      for (std::size_t k = 0; k < g.rows(); ++k)
        if (!g.is_z(k, c)) {
          slots.push_back(k);
          elems.push_back(g.at(k, c));
        }
      std::sort(elems.begin(), elems.end());
      do {
        for (std::size_t x = 0; x < slots.size(); ++x) g.at(slots[x], c) = elems[x];
        per_column(c + 1, g);
      } while (std::next_permutation(elems.begin(), elems.end()));
    };
    per_column(0, base);
  }
  return out;
}

/// The lifted points (1, p) together with the coordinate each grid row
/// stands for: grid row k is lifted coordinate coord[k].
struct LiftFrame {
  PointSequence lifted;
  std::vector<int> coord;

  std::size_t d() const { return lifted.dim() - 1; }
  std::size_t n() const { return lifted.size(); }

  /// The points p without the all-ones coordinate.
  PointSequence points() const { return lifted.without_row(0); }

  /// The lifted sequence with rows in grid order.
  PointSequence ordered() const { return lifted.permuted_rows(coord); }

  /// Grid row of the all-ones coordinate.
  std::size_t ones_row() const {
    return static_cast<std::size_t>(std::find(coord.begin(), coord.end(), 0) - coord.begin());
  }
};

/// Frame with grid rows in lifted order (row 0 is the all-ones row).
inline LiftFrame natural_frame(const PointSequence& points) {
  LiftFrame f{points.lifted(), {}};
  f.coord.resize(points.dim() + 1);
  std::iota(f.coord.begin(), f.coord.end(), 0);
  return f;
}

/// Frame with grid rows sorted by growth rate of the lifted coordinates.
inline LiftFrame ordered_frame(const PointSequence& points, const Scalar& q) {
  LiftFrame f{points.lifted(), {}};
  f.coord = order_permutation(f.lifted, q);
  return f;
}

struct Monomial {
  GFilling filling;
  Scalar value;            // product of the chosen entries of M_l (with the -1s)
  int permutation_sign;    // sign of the transversal as a permutation
  Scalar term() const { return permutation_sign * value; }
  Scalar magnitude() const { return abs(value); }
};

namespace detail {

inline int permutation_parity_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[static_cast<std::size_t>(perm[i])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace detail

/// The transversal of M_l described by the filling: column_of_row[x] is
/// the matrix column chosen in matrix row x.
inline std::vector<int> transversal(const GFilling& g, const Partition& p, const LiftFrame& frame) {
  const std::size_t d = frame.d();
  const std::size_t n = frame.n();
  if (!is_valid_filling(g, p)) throw InputError("invalid filling");
  if (g.d() != d || p.n() != n) throw DimensionError("filling and points disagree");
  std::vector<int> column_of_row(p.r() * (d + 1), -1);
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t m = 0; m < p.r(); ++m) {
      const int c = frame.coord[k];
      const std::size_t row = m * (d + 1) + static_cast<std::size_t>(c);
      if (g.is_z(k, m))
        column_of_row[row] = c == 0 ? g.ell() : static_cast<int>(n) + c - 1;
      else
        column_of_row[row] = g.at(k, m);
    }
  return column_of_row;
}

/// The monomial of det(M_l) described by a valid filling.
inline Monomial monomial_value(const GFilling& g, const Partition& p, const LiftFrame& frame) {
  const auto cols = transversal(g, p, frame);
  Monomial w{g, Scalar(1), detail::permutation_parity_sign(cols)};
  for (std::size_t k = 0; k < g.rows(); ++k)
    for (std::size_t m = 0; m < g.r(); ++m) {
      const auto c = static_cast<std::size_t>(frame.coord[k]);
      if (g.is_z(k, m)) {
        if (c != 0) w.value = -w.value;
      } else {
        w.value *= frame.lifted(c, static_cast<std::size_t>(g.at(k, m)));
      }
    }
  return w;
}

/// Element indices driving a z-switch: for u = s..t-1, i_u is the smallest
/// element of column alpha below row u and j_u the largest element of
/// column beta at or above row u.
struct SwitchIndices {
  std::vector<int> i;
  std::vector<int> j;
};

inline void check_switch(const GFilling& g, std::size_t s, std::size_t t, std::size_t alpha, std::size_t beta) {
  if (!g.column_increasing()) throw InputError("z-switch needs a column-increasing filling");
  if (!(s < t) || t >= g.rows()) throw InputError("z-switch rows must satisfy s < t");
  if (alpha == beta || alpha >= g.r() || beta >= g.r()) throw InputError("z-switch columns must differ");
  if (!g.is_z(s, alpha) || !g.is_z(t, beta)) throw InputError("z-switch needs z at (s, alpha) and (t, beta)");
}

inline SwitchIndices switch_indices(const GFilling& g, std::size_t s, std::size_t t, std::size_t alpha, std::size_t beta) {
  check_switch(g, s, t, alpha, beta);
  SwitchIndices out;
  for (std::size_t u = s; u < t; ++u) {
    int iu = -1, ju = -1;
    for (std::size_t k = u + 1; k < g.rows() && iu < 0; ++k)
      if (!g.is_z(k, alpha)) iu = g.at(k, alpha);
    for (std::size_t k = 0; k <= u; ++k)
      if (!g.is_z(k, beta)) ju = g.at(k, beta);
    if (iu < 0 || ju < 0) throw InputError("z-switch indices undefined");
    out.i.push_back(iu);
    out.j.push_back(ju);
  }
  return out;
}

/// Moves z^(s) from column alpha to beta and z^(t) from beta to alpha,
/// keeping every column increasing.
inline GFilling z_switch(const GFilling& g, const Partition& p, std::size_t s, std::size_t t, std::size_t alpha,
                         std::size_t beta) {
  check_switch(g, s, t, alpha, beta);
  auto pattern = g.z_columns();
  pattern[s] = static_cast<int>(beta);
  pattern[t] = static_cast<int>(alpha);
  return filling_from_z_columns(p, g.ell(), pattern);
}

/// Every admissible switch (s, t, alpha, beta) of a column-increasing filling.
struct SwitchMove {
  std::size_t s, t, alpha, beta;
};

inline std::vector<SwitchMove> available_switches(const GFilling& g) {
  std::vector<SwitchMove> out;
  const auto zc = g.z_columns();
  for (std::size_t s = 0; s < g.rows(); ++s)
    for (std::size_t t = s + 1; t < g.rows(); ++t)
      if (zc[s] != zc[t])
        out.push_back({s, t, static_cast<std::size_t>(zc[s]), static_cast<std::size_t>(zc[t])});
  return out;
}

/// Predicted direction: the switched monomial dominates iff i_tau < j_tau
/// at the turnstile-maximal gap tau among s..t-1.
inline bool switch_dominates(const GFilling& g, const DominanceProfile& profile, const SwitchMove& mv) {
  const auto idx = switch_indices(g, mv.s, mv.t, mv.alpha, mv.beta);
  const int tau = profile.maximal_in_range(static_cast<int>(mv.s), static_cast<int>(mv.t) - 1);
  const auto x = static_cast<std::size_t>(tau) - mv.s;
  return idx.i[x] < idx.j[x];
}

}  // namespace tverberg
