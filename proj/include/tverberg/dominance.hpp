#pragma once

// Growth predicates and the dominance calculus on ordered sequences.
//
// For a sequence a with rows 0..R-1, gap u (0 <= u < R-1) relates rows u
// and u+1 through
//
//     f(u, i, j) = (a[u+1][j] a[u][i]) / (a[u][j] a[u+1][i]).
//
// Everything that only compares f-values against q is written against a
// ratio policy, so the same code runs on exact rationals (ExactRatios) or on
// integer exponents of a single base (ExponentRatios).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/sequences.hpp"

namespace tverberg {

/// Position of a positive value relative to the closed interval [1/q, q].
enum class Band { below, inside, above };

/// True iff every entry is positive and each consecutive ratio exceeds q.
inline bool is_q_increasing(const std::vector<Scalar>& s, const Scalar& q) {
  for (const auto& x : s)
    if (x <= 0) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i + 1] <= q * s[i]) return false;
  return true;
}

namespace detail {

inline std::vector<Scalar> row_ratio(const PointSequence& a, std::size_t t, std::size_t s) {
  std::vector<Scalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(t, i) / a(s, i);
  return out;
}

}  // namespace detail

/// Coordinate t grows faster than coordinate s: a^(t)/a^(s) is q-increasing.
inline bool grows_faster(const PointSequence& a, std::size_t t, std::size_t s, const Scalar& q) {
  return is_q_increasing(detail::row_ratio(a, t, s), q);
}

inline bool is_pseudo_geometric(const PointSequence& a, const Scalar& q) {
  if (a.dim() <= 1) throw InputError("pseudo-geometric sequences need at least two coordinates");
  if (!a.positive()) return false;
  for (std::size_t t = 0; t < a.dim(); ++t)
    for (std::size_t s = t + 1; s < a.dim(); ++s)
      if (!grows_faster(a, t, s, q) && !grows_faster(a, s, t, q)) return false;
  return true;
}

/// Ordered: positive and every a^(t+1)/a^(t) is q-increasing.
inline bool is_ordered(const PointSequence& a, const Scalar& q) {
  if (!a.positive()) return false;
  for (std::size_t t = 0; t + 1 < a.dim(); ++t)
    if (!grows_faster(a, t + 1, t, q)) return false;
  return true;
}

/// The unique permutation listing coordinates from slowest to fastest
/// growing: row k of a.permuted_rows(result) is row result[k] of a.
inline std::vector<int> order_permutation(const PointSequence& a, const Scalar& q) {
  if (!is_pseudo_geometric(a, q)) throw InputError("sequence is not q-pseudo-geometric");
  std::vector<int> perm(a.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    return grows_faster(a, static_cast<std::size_t>(y), static_cast<std::size_t>(x), q);
  });
  return perm;
}

/// f(t, i, j) for gap t.
inline Scalar f_ratio(const PointSequence& a, std::size_t t, std::size_t i, std::size_t j) {
  if (t + 1 >= a.dim() || i >= a.size() || j >= a.size()) throw InputError("f_ratio index out of range");
  return (a(t + 1, j) * a(t, i)) / (a(t, j) * a(t + 1, i));
}

/// Exact f-values as rationals.
class ExactRatios {
 public:
  using value_type = Scalar;

  ExactRatios(const PointSequence& a, Scalar q) : a_(&a), q_(std::move(q)), inv_q_(1 / q_) {
    if (q_ <= 1) throw InputError("q must exceed 1");
  }

  std::size_t gaps() const noexcept { return a_->dim() - 1; }
  std::size_t size() const noexcept { return a_->size(); }
  const Scalar& q() const noexcept { return q_; }

  value_type f(std::size_t t, std::size_t i, std::size_t j) const { return f_ratio(*a_, t, i, j); }
  static value_type one() { return Scalar(1); }
  static value_type times(const value_type& x, const value_type& y) { return x * y; }
  static value_type over(const value_type& x, const value_type& y) { return x / y; }
  static bool less(const value_type& x, const value_type& y) { return x < y; }

  Band band(const value_type& x) const {
    if (x > q_) return Band::above;
    if (x < inv_q_) return Band::below;
    return Band::inside;
  }

 private:
  const PointSequence* a_;
  Scalar q_;
  Scalar inv_q_;
};

/// f-values of a PowerSequence as integer exponents of its base. Exact:
/// base^x > q iff x >= threshold, with threshold computed in big integers.
class ExponentRatios {
 public:
  using value_type = std::int64_t;

  ExponentRatios(const PowerSequence& a, const Scalar& q)
      : a_(&a), q_(q), threshold_(exponent_threshold(a.base(), q)) {
    if (q <= 1) throw InputError("q must exceed 1");
  }

  std::size_t gaps() const noexcept { return a_->dim() - 1; }
  std::size_t size() const noexcept { return a_->size(); }
  const Scalar& q() const noexcept { return q_; }
  std::int64_t threshold() const noexcept { return threshold_; }

  value_type f(std::size_t t, std::size_t i, std::size_t j) const {
    if (t + 1 >= a_->dim() || i >= a_->size() || j >= a_->size()) throw InputError("f index out of range");
    return (a_->exponent(t + 1, j) - a_->exponent(t, j)) - (a_->exponent(t + 1, i) - a_->exponent(t, i));
  }
  static value_type one() { return 0; }
  static value_type times(value_type x, value_type y) { return x + y; }
  static value_type over(value_type x, value_type y) { return x - y; }
  static bool less(value_type x, value_type y) { return x < y; }

  Band band(value_type x) const {
    if (x >= threshold_) return Band::above;
    if (-x >= threshold_) return Band::below;
    return Band::inside;
  }

 private:
  const PowerSequence* a_;
  Scalar q_;
  std::int64_t threshold_;
};

/// Ordered and q-increasing: f(t, i, i+1) > q for every gap and index.
template <typename Ratios>
bool is_ordered_q_increasing(const Ratios& R) {
  for (std::size_t t = 0; t < R.gaps(); ++t)
    for (std::size_t i = 0; i + 1 < R.size(); ++i)
      if (R.band(R.f(t, i, i + 1)) != Band::above) return false;
  return true;
}

enum class PairRelation { precedes, succeeded_by, left_similar, right_similar, inconsistent };

inline const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::precedes: return "precedes";
    case PairRelation::succeeded_by: return "succeeded_by";
    case PairRelation::left_similar: return "left_similar";
    case PairRelation::right_similar: return "right_similar";
    case PairRelation::inconsistent: return "inconsistent";
  }
  return "?";
}

/// Right similarity has two readings. `symmetric` requires
/// f(t,j,k) > q f(s,i,j) and f(s,j,k) > q f(t,i,j), the mirror image of
/// left similarity. `literal` replaces the second clause with
/// f(s,j,k) > q f(s,i,j).
enum class RightSimilarReading { symmetric, literal };

/// Relation of gaps t and s, tested on every triple i < j < k through
///   F1 = f(t,i,j) / f(s,j,k)   and   F2 = f(t,j,k) / f(s,i,j).
/// t precedes s iff F1 and F2 are always below 1/q; s precedes t iff both
/// are always above q; left similar iff F1 above and F2 below; right
/// similar iff F1 below and F2 above.
template <typename Ratios>
PairRelation classify_pair(const Ratios& R, std::size_t t, std::size_t s,
                           RightSimilarReading reading = RightSimilarReading::symmetric) {
  if (t == s) throw InputError("classify_pair needs two distinct gaps");
  if (t >= R.gaps() || s >= R.gaps()) throw InputError("gap index out of range");
  const std::size_t n = R.size();
  if (n < 3) throw InputError("classify_pair needs at least three points");

  bool f1_below = true, f1_above = true, f2_below = true, f2_above = true, s_right = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Band b1 = R.band(R.over(R.f(t, i, j), R.f(s, j, k)));
        const Band b2 = R.band(R.over(R.f(t, j, k), R.f(s, i, j)));
        f1_below = f1_below && b1 == Band::below;
        f1_above = f1_above && b1 == Band::above;
        f2_below = f2_below && b2 == Band::below;
        f2_above = f2_above && b2 == Band::above;
        if (reading == RightSimilarReading::literal)
          s_right = s_right && R.band(R.over(R.f(s, j, k), R.f(s, i, j))) == Band::above;
      }
  if (f1_below && f2_below) return PairRelation::precedes;
  if (f1_above && f2_above) return PairRelation::succeeded_by;
  if (f1_above && f2_below) return PairRelation::left_similar;
  if (reading == RightSimilarReading::symmetric) {
    if (f1_below && f2_above) return PairRelation::right_similar;
  } else if (f2_above && s_right) {
    return PairRelation::right_similar;
  }
  return PairRelation::inconsistent;
}

/// Raised when some pair of gaps has no consistent relation.
class NotDominantError : public InputError {
 public:
  NotDominantError(std::size_t t, std::size_t s)
      : InputError("sequence not dominant: pair (" + std::to_string(t) + "," + std::to_string(s) +
                   ") inconsistent"),
        first(t), second(s) {}
  std::size_t first;
  std::size_t second;
};

enum class SimilarityKind { single, left, right };

/// Pairwise relations of the gaps, their similarity classes and the
/// turnstile order extending precedence.
class DominanceProfile {
 public:
  /// relation[t][s] for t != s; the diagonal is ignored.
  static DominanceProfile from_relations(std::vector<std::vector<PairRelation>> relation) {
    DominanceProfile p;
    p.relation_ = std::move(relation);
    p.finish();
    return p;
  }

  /// Gaps 0 < 1 < ... < d-1 pairwise in precedence.
  static DominanceProfile chain(std::size_t gaps) {
    std::vector<std::vector<PairRelation>> rel(gaps, std::vector<PairRelation>(gaps, PairRelation::precedes));
    for (std::size_t t = 0; t < gaps; ++t)
      for (std::size_t s = 0; s < t; ++s) rel[t][s] = PairRelation::succeeded_by;
    return from_relations(std::move(rel));
  }

  std::size_t gaps() const noexcept { return relation_.size(); }
  PairRelation relation(std::size_t t, std::size_t s) const { return relation_.at(t).at(s); }

  /// Gaps listed from turnstile-minimal to turnstile-maximal.
  const std::vector<int>& order() const noexcept { return order_; }
  /// Position of gap t in order().
  int rank(std::size_t t) const { return rank_.at(t); }
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
  const std::vector<SimilarityKind>& class_kinds() const noexcept { return kinds_; }

  /// t comes before s in the turnstile order.
  bool before(std::size_t t, std::size_t s) const { return rank_.at(t) < rank_.at(s); }

  /// Turnstile-maximal gap among lo..hi (inclusive).
  int maximal_in_range(int lo, int hi) const {
    if (lo > hi) throw InputError("empty gap range");
    int best = lo;
    for (int u = lo + 1; u <= hi; ++u)
      if (rank_.at(static_cast<std::size_t>(u)) > rank_.at(static_cast<std::size_t>(best))) best = u;
    return best;
  }

  template <typename Range>
  int maximal_in(const Range& gaps) const {
    int best = -1;
    for (int u : gaps)
      if (best < 0 || rank_.at(static_cast<std::size_t>(u)) > rank_.at(static_cast<std::size_t>(best))) best = u;
    if (best < 0) throw InputError("empty gap set");
    return best;
  }

 private:
  // The direct definition: t before s if t precedes s, or they are right
  // similar and t < s, or left similar and t > s.
  bool turnstile(std::size_t t, std::size_t s) const {
    switch (relation_[t][s]) {
      case PairRelation::precedes: return true;
      case PairRelation::right_similar: return t < s;
      case PairRelation::left_similar: return t > s;
      default: return false;
    }
  }

  void finish() {
    const std::size_t d = relation_.size();
    for (const auto& row : relation_)
      if (row.size() != d) throw DimensionError("relation matrix must be square");
    auto similar = [](PairRelation r) { return r == PairRelation::left_similar || r == PairRelation::right_similar; };
    auto mirror = [](PairRelation r) {
      switch (r) {
        case PairRelation::precedes: return PairRelation::succeeded_by;
        case PairRelation::succeeded_by: return PairRelation::precedes;
        default: return r;
      }
    };
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t s = 0; s < d; ++s) {
        if (t == s) continue;
        if (relation_[t][s] == PairRelation::inconsistent) throw NotDominantError(t, s);
        if (relation_[s][t] != mirror(relation_[t][s]))
          throw InputError("relation matrix is not antisymmetric for (" + std::to_string(t) + "," +
                           std::to_string(s) + ")");
      }

    // similarity classes, checked to be transitive and of a single kind
    std::vector<int> cls(d, -1);
    for (std::size_t t = 0; t < d; ++t) {
      if (cls[t] >= 0) continue;
      cls[t] = static_cast<int>(classes_.size());
      classes_.push_back({static_cast<int>(t)});
      kinds_.push_back(SimilarityKind::single);
      for (std::size_t s = t + 1; s < d; ++s) {
        if (!similar(relation_[t][s])) continue;
        cls[s] = cls[t];
        classes_.back().push_back(static_cast<int>(s));
      }
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      const auto& members = classes_[c];
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          auto r = relation_[static_cast<std::size_t>(members[x])][static_cast<std::size_t>(members[y])];
          if (!similar(r)) throw InputError("similarity is not transitive");
          auto kind = r == PairRelation::left_similar ? SimilarityKind::left : SimilarityKind::right;
          if (kinds_[c] == SimilarityKind::single) kinds_[c] = kind;
          if (kinds_[c] != kind) throw InputError("similarity class mixes left and right similar pairs");
        }
    }

    order_.resize(d);
    std::iota(order_.begin(), order_.end(), 0);
    // insertion sort so an inconsistent relation cannot corrupt std::sort
    for (std::size_t x = 1; x < d; ++x)
      for (std::size_t y = x; y > 0 && turnstile(static_cast<std::size_t>(order_[y]), static_cast<std::size_t>(order_[y - 1])); --y)
        std::swap(order_[y], order_[y - 1]);
    rank_.assign(d, 0);
    for (std::size_t k = 0; k < d; ++k) rank_[static_cast<std::size_t>(order_[k])] = static_cast<int>(k);
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t s = 0; s < d; ++s)
        if (t != s && turnstile(t, s) != (rank_[t] < rank_[s]))
          throw InputError("turnstile relation is not a total order");
  }

  std::vector<std::vector<PairRelation>> relation_;
  std::vector<std::vector<int>> classes_;
  std::vector<SimilarityKind> kinds_;
  std::vector<int> order_;
  std::vector<int> rank_;
};

/// Profile of a dominant sequence; throws NotDominantError otherwise.
template <typename Ratios>
DominanceProfile dominance_profile(const Ratios& R) {
  const std::size_t d = R.gaps();
  std::vector<std::vector<PairRelation>> rel(d, std::vector<PairRelation>(d, PairRelation::precedes));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s)
      if (t != s) {
        rel[t][s] = R.size() < 3 ? (t < s ? PairRelation::precedes : PairRelation::succeeded_by)
                                 : classify_pair(R, t, s);
        if (rel[t][s] == PairRelation::inconsistent) throw NotDominantError(t, s);
      }
  return DominanceProfile::from_relations(std::move(rel));
}

inline DominanceProfile dominance_profile(const PointSequence& a, const Scalar& q) {
  return dominance_profile(ExactRatios(a, q));
}

/// Ordered, q-increasing, and every pair of gaps related consistently.
template <typename Ratios>
bool is_dominant(const Ratios& R) {
  if (!is_ordered_q_increasing(R)) return false;
  if (R.size() < 3) return true;
  for (std::size_t t = 0; t < R.gaps(); ++t)
    for (std::size_t s = t + 1; s < R.gaps(); ++s)
      if (classify_pair(R, t, s) == PairRelation::inconsistent) return false;
  return true;
}

inline bool is_dominant(const PointSequence& a, const Scalar& q) {
  if (!a.positive()) return false;
  return is_dominant(ExactRatios(a, q));
}

/// a is the (rows)-strided subsequence of the dominant witness b:
/// a_i = b_{(i+1) rows - 1} for 0-based i.
inline bool is_super_dominant(const PointSequence& a, const PointSequence& witness, const Scalar& q) {
  const std::size_t rows = a.dim();
  if (witness.dim() != rows || witness.size() != rows * a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < rows; ++t)
      if (a(t, i) != witness(t, (i + 1) * rows - 1)) return false;
  return is_dominant(witness, q);
}

/// One instance of the product bound: gaps in increasing order with their
/// index pairs (i_s, j_s).
struct CruxCase {
  std::vector<int> gaps;
  std::vector<int> i;
  std::vector<int> j;
};

/// Hypotheses of the product bound: i and j non-decreasing along the gaps
/// and |i_tau - j_tau| >= |S| at the turnstile-maximal gap tau.
inline bool crux_admissible(const CruxCase& c, const DominanceProfile& profile) {
  if (c.gaps.empty() || c.i.size() != c.gaps.size() || c.j.size() != c.gaps.size()) return false;
  for (std::size_t x = 1; x < c.gaps.size(); ++x)
    if (c.gaps[x] <= c.gaps[x - 1] || c.i[x] < c.i[x - 1] || c.j[x] < c.j[x - 1]) return false;
  const int tau = profile.maximal_in(c.gaps);
  const auto pos = static_cast<std::size_t>(std::find(c.gaps.begin(), c.gaps.end(), tau) - c.gaps.begin());
  return std::abs(c.i[pos] - c.j[pos]) >= static_cast<int>(c.gaps.size());
}

/// Product of f(s, i_s, j_s) is above q when i_tau < j_tau and below 1/q
/// when i_tau > j_tau.
template <typename Ratios>
bool crux_holds(const Ratios& R, const DominanceProfile& profile, const CruxCase& c) {
  auto prod = R.one();
  for (std::size_t x = 0; x < c.gaps.size(); ++x)
    prod = R.times(prod, R.f(static_cast<std::size_t>(c.gaps[x]), static_cast<std::size_t>(c.i[x]),
                             static_cast<std::size_t>(c.j[x])));
  const int tau = profile.maximal_in(c.gaps);
  const auto pos = static_cast<std::size_t>(std::find(c.gaps.begin(), c.gaps.end(), tau) - c.gaps.begin());
  const Band b = R.band(prod);
  return c.i[pos] < c.j[pos] ? b == Band::above : b == Band::below;
}

}  // namespace tverberg
