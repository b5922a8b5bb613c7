#pragma once

// Point sequences and their generators.
//
// A PointSequence stores coordinate sequences as rows: row t is the
// coordinate sequence a^(t), column i is the point a_i. All indices are
// 0-based. A PowerSequence stores the exponents of a sequence whose entries
// are integer powers of a single base; it materializes into a
// PointSequence and also drives the exponent-only fast path of the
// dominance calculus.

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"

namespace tverberg {

class PointSequence {
 public:
  PointSequence() = default;

  /// rows[t][i] is coordinate t of point i.
  explicit PointSequence(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("point sequence needs at least one coordinate");
    const std::size_t n = rows_.front().size();
    if (n == 0) throw InputError("point sequence needs at least one point");
    for (const auto& r : rows_)
      if (r.size() != n) throw DimensionError("coordinate sequences have different lengths");
  }

  /// points[i][t] is coordinate t of point i.
  static PointSequence from_points(const std::vector<std::vector<Scalar>>& points) {
    if (points.empty()) throw InputError("point sequence needs at least one point");
    const std::size_t d = points.front().size();
    std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != d) throw DimensionError("points have different dimensions");
      for (std::size_t t = 0; t < d; ++t) rows[t][i] = points[i][t];
    }
    return PointSequence(std::move(rows));
  }

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }

  const Scalar& operator()(std::size_t t, std::size_t i) const { return rows_.at(t).at(i); }
  const std::vector<Scalar>& row(std::size_t t) const { return rows_.at(t); }
  const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }

  std::vector<Scalar> point(std::size_t i) const {
    std::vector<Scalar> p(dim());
    for (std::size_t t = 0; t < dim(); ++t) p[t] = rows_[t].at(i);
    return p;
  }

  bool positive() const {
    for (const auto& r : rows_)
      for (const auto& x : r)
        if (x <= 0) return false;
    return true;
  }

  /// (1, p): a new all-ones coordinate in front.
  PointSequence lifted() const {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(dim() + 1);
    rows.emplace_back(size(), Scalar(1));
    rows.insert(rows.end(), rows_.begin(), rows_.end());
    return PointSequence(std::move(rows));
  }

  /// Drops coordinate `t` (used to undo a lift).
  PointSequence without_row(std::size_t t) const {
    if (dim() < 2) throw InputError("cannot drop the only coordinate");
    auto rows = rows_;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(t));
    return PointSequence(std::move(rows));
  }

  /// Row k of the result is row perm[k] of this sequence.
  PointSequence permuted_rows(const std::vector<int>& perm) const {
    if (perm.size() != dim()) throw DimensionError("row permutation has the wrong length");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(dim());
    for (int k : perm) rows.push_back(rows_.at(static_cast<std::size_t>(k)));
    return PointSequence(std::move(rows));
  }

  PointSequence subsequence(const std::vector<int>& indices) const {
    std::vector<std::vector<Scalar>> rows(dim());
    for (std::size_t t = 0; t < dim(); ++t)
      for (int i : indices) rows[t].push_back(rows_[t].at(static_cast<std::size_t>(i)));
    return PointSequence(std::move(rows));
  }

  friend bool operator==(const PointSequence&, const PointSequence&) = default;

 private:
  std::vector<std::vector<Scalar>> rows_;
};

/// Entries base^exponents[t][i].
class PowerSequence {
 public:
  PowerSequence(Scalar base, std::vector<std::vector<std::int64_t>> exponents)
      : base_(std::move(base)), exponents_(std::move(exponents)) {
    if (base_ <= 1) throw InputError("power sequence base must exceed 1");
    if (exponents_.empty() || exponents_.front().empty()) throw InputError("empty power sequence");
    for (const auto& r : exponents_)
      if (r.size() != exponents_.front().size()) throw DimensionError("ragged exponent schedule");
  }

  const Scalar& base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return exponents_.size(); }
  std::size_t size() const noexcept { return exponents_.front().size(); }
  std::int64_t exponent(std::size_t t, std::size_t i) const { return exponents_.at(t).at(i); }
  const std::vector<std::vector<std::int64_t>>& exponents() const noexcept { return exponents_; }

  PointSequence materialize() const {
    std::vector<std::vector<Scalar>> rows(dim(), std::vector<Scalar>(size()));
    for (std::size_t t = 0; t < dim(); ++t)
      for (std::size_t i = 0; i < size(); ++i) rows[t][i] = power(base_, static_cast<long>(exponents_[t][i]));
    return PointSequence(std::move(rows));
  }

  /// Elements at offset, offset + step, offset + 2 step, ...
  PowerSequence strided(std::size_t step, std::size_t offset) const {
    if (step == 0) throw InputError("stride must be positive");
    std::vector<std::vector<std::int64_t>> e(dim());
    for (std::size_t t = 0; t < dim(); ++t)
      for (std::size_t i = offset; i < size(); i += step) e[t].push_back(exponents_[t][i]);
    return PowerSequence(base_, std::move(e));
  }

  /// Drops coordinate `t` (used to turn a lifted sequence into points).
  PowerSequence without_row(std::size_t t) const {
    if (dim() < 2) throw InputError("cannot drop the only coordinate");
    auto e = exponents_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(t));
    return PowerSequence(base_, std::move(e));
  }

 private:
  Scalar base_;
  std::vector<std::vector<std::int64_t>> exponents_;
};

/// Smallest positive integer x with base^x > q.
inline std::int64_t exponent_threshold(const Scalar& base, const Scalar& q) {
  if (base <= 1) throw InputError("base must exceed 1");
  std::int64_t x = 1;
  Scalar p = base;
  while (p <= q) {
    p *= base;
    ++x;
  }
  return x;
}

/// Point i is (t_i, t_i^2, ..., t_i^d).
inline PointSequence gen_moment_curve(std::size_t d, const std::vector<Scalar>& params) {
  if (d == 0) throw InputError("moment curve dimension must be positive");
  if (params.empty()) throw InputError("moment curve needs parameters");
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] <= 0) throw InputError("moment curve parameters must be positive");
    if (i > 0 && params[i] <= params[i - 1]) throw InputError("moment curve parameters must increase");
  }
  std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i) {
    Scalar x = params[i];
    for (std::size_t t = 0; t < d; ++t, x *= params[i]) rows[t][i] = x;
  }
  return PointSequence(std::move(rows));
}

/// Moment curve at t = 1, 2, ..., n.
inline PointSequence gen_moment_curve(std::size_t d, std::size_t n) {
  std::vector<Scalar> t;
  for (std::size_t i = 1; i <= n; ++i) t.emplace_back(static_cast<long>(i));
  return gen_moment_curve(d, t);
}

using ExponentSchedule = std::function<std::int64_t(std::size_t, std::size_t)>;

struct PowerSequenceOptions {
  /// Reject schedules where e(t+1, i) - e(t, i) is not strictly increasing in i.
  bool require_ordered = true;
};

/// Coordinate t has entries base^{e(t, i)}.
inline PowerSequence gen_power_sequence(std::size_t rows, std::size_t n, const Scalar& base,
                                        const ExponentSchedule& e, PowerSequenceOptions opts = {}) {
  if (rows == 0 || n == 0) throw InputError("power sequence needs rows and points");
  std::vector<std::vector<std::int64_t>> ex(rows, std::vector<std::int64_t>(n));
  for (std::size_t t = 0; t < rows; ++t)
    for (std::size_t i = 0; i < n; ++i) ex[t][i] = e(t, i);
  if (opts.require_ordered) {
    for (std::size_t t = 0; t + 1 < rows; ++t)
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (ex[t + 1][i + 1] - ex[t][i + 1] <= ex[t + 1][i] - ex[t][i])
          throw InputError("exponent schedule gap between rows " + std::to_string(t) + " and " +
                           std::to_string(t + 1) + " is not strictly increasing");
  }
  return PowerSequence(base, std::move(ex));
}

// --- dominance-shaped schedules -------------------------------------------

/// How the exponent gap g_u(i) = e(u+1, i) - e(u, i) grows with i.
enum class GapShape {
  linear,       // g(i) = S i
  accelerating, // g(i) = S (2^i - 1): every step exceeds all earlier steps
  decelerating, // g(i) = S (2^{n-1} - 2^{n-1-i}): every step exceeds all later steps
};

/// One similarity class of gaps (the coordinate pairs u, u+1).
struct GapClass {
  std::vector<int> gaps;
  GapShape shape = GapShape::linear;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / 4 / a)
    throw InputError("exponent schedule overflows 64 bits");
  return a * b;
}

inline std::int64_t shape_value(GapShape shape, std::size_t n, std::size_t i) {
  switch (shape) {
    case GapShape::linear:
      return static_cast<std::int64_t>(i);
    case GapShape::accelerating:
      return (std::int64_t{1} << i) - 1;
    case GapShape::decelerating:
      return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n - 1 - i));
  }
  return 0;
}

}  // namespace detail

/// A dominant ordered sequence with a prescribed dominance profile.
///
/// Row 0 is the all-ones row. `classes` lists the gap classes from the
/// lowest to the highest in the precedence order; every gap 0..rows-2 must
/// appear in exactly one class. Accelerating classes are right-similar,
/// decelerating classes are left-similar, and a linear class must be a
/// singleton. Each class scale is chosen so that every step of the next
/// class exceeds the whole span of the current one by a factor above q.
inline PowerSequence gen_profile_sequence(std::size_t rows, std::size_t n, const Scalar& base,
                                          const Scalar& q, const std::vector<GapClass>& classes) {
  if (rows < 2) throw InputError("profile sequence needs at least two rows");
  if (n < 2 || n > 60) throw InputError("profile sequence length out of range");
  const std::size_t gaps = rows - 1;
  std::vector<int> seen(gaps, 0);
  for (const auto& c : classes) {
    if (c.gaps.empty()) throw InputError("empty gap class");
    if (c.shape == GapShape::linear && c.gaps.size() != 1)
      throw InputError("a linear gap class must be a singleton");
    for (int u : c.gaps) {
      if (u < 0 || static_cast<std::size_t>(u) >= gaps) throw InputError("gap index out of range");
      ++seen[static_cast<std::size_t>(u)];
    }
  }
  for (int s : seen)
    if (s != 1) throw InputError("every gap must belong to exactly one class");

  const std::int64_t d1 = exponent_threshold(base, q) + 1;
  std::vector<std::vector<std::int64_t>> g(gaps, std::vector<std::int64_t>(n));
  std::int64_t scale = d1;
  for (const auto& c : classes) {
    for (int u : c.gaps)
      for (std::size_t i = 0; i < n; ++i)
        g[static_cast<std::size_t>(u)][i] = detail::checked_mul(scale, detail::shape_value(c.shape, n, i));
    const std::int64_t span = detail::checked_mul(scale, detail::shape_value(c.shape, n, n - 1));
    scale = span + d1;
  }
  std::vector<std::vector<std::int64_t>> e(rows, std::vector<std::int64_t>(n, 0));
  for (std::size_t t = 1; t < rows; ++t)
    for (std::size_t i = 0; i < n; ++i) e[t][i] = e[t - 1][i] + g[t - 1][i];
  return PowerSequence(base, std::move(e));
}

/// The precedence-chain schedule: e(t, i) = c_t i with gaps
/// c_{t+1} - c_t = D_1 (n+1)^t and D_1 = ceil(log_Q q) + 1, row 0 all ones.
inline PowerSequence gen_chain_sequence(std::size_t rows, std::size_t n, const Scalar& base, const Scalar& q) {
  if (rows < 1) throw InputError("chain sequence needs rows");
  const std::int64_t d1 = exponent_threshold(base, q) + 1;
  std::vector<std::int64_t> slope(rows, 0);
  std::int64_t gap = d1;
  for (std::size_t t = 1; t < rows; ++t) {
    slope[t] = slope[t - 1] + gap;
    gap = detail::checked_mul(gap, static_cast<std::int64_t>(n + 1));
  }
  return gen_power_sequence(rows, n, base, [&](std::size_t t, std::size_t i) {
    return detail::checked_mul(slope[t], static_cast<std::int64_t>(i + 1));
  });
}

/// All gaps equal: e(t, i) = t * step * (i + 1). Ordered and q-increasing
/// for step >= threshold, but never dominant for n >= 3.
inline PowerSequence gen_uniform_sequence(std::size_t rows, std::size_t n, const Scalar& base, std::int64_t step) {
  if (step <= 0) throw InputError("uniform step must be positive");
  return gen_power_sequence(rows, n, base, [&](std::size_t t, std::size_t i) {
    return static_cast<std::int64_t>(t) * step * static_cast<std::int64_t>(i + 1);
  });
}

/// A super-dominant lifted sequence and its dominant witness.
struct SuperDominantInstance {
  PowerSequence witness;   // dominant, length (d+1) n
  PowerSequence sequence;  // witness elements (d+1), 2(d+1), ..., (d+1) n (1-based)
};

/// (d+1)-row super-dominant sequence of length n built by striding a
/// dominant witness of length (d+1) n. Row 0 is the all-ones row.
/// An empty `classes` list selects the precedence chain.
inline SuperDominantInstance gen_super_dominant(std::size_t d, std::size_t n, const Scalar& base, const Scalar& q,
                                                const std::vector<GapClass>& classes = {}) {
  const std::size_t rows = d + 1;
  const std::size_t long_n = rows * n;
  PowerSequence witness = classes.empty() ? gen_chain_sequence(rows, long_n, base, q)
                                          : gen_profile_sequence(rows, long_n, base, q, classes);
  PowerSequence seq = witness.strided(rows, rows - 1);
  return {std::move(witness), std::move(seq)};
}

inline Integer factorial(unsigned long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

/// (r(d+1))! + 1: exceeds the number of monomials of det(M_l).
inline Scalar default_threshold(std::size_t d, std::size_t r) {
  return Scalar(factorial(static_cast<unsigned long>(r * (d + 1))) + 1);
}

}  // namespace tverberg
