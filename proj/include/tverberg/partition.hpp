#pragma once

// Partitions of {0, ..., n-1} into ordered color classes, blocks and
// rainbow partitions.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"

namespace tverberg {

/// T(r, d) = (r - 1)(d + 1) + 1.
constexpr std::size_t tverberg_number(std::size_t r, std::size_t d) { return (r - 1) * (d + 1) + 1; }

class Partition {
 public:
  Partition() = default;

  /// Classes may be given in any order; each class is sorted. Throws if
  /// the classes overlap or do not cover 0..n-1.
  Partition(std::size_t n, std::vector<std::vector<int>> classes) : n_(n), classes_(std::move(classes)) {
    class_of_.assign(n_, -1);
    for (std::size_t m = 0; m < classes_.size(); ++m) {
      auto& c = classes_[m];
      std::sort(c.begin(), c.end());
      for (int i : c) {
        if (i < 0 || static_cast<std::size_t>(i) >= n_) throw InputError("partition element out of range");
        if (class_of_[static_cast<std::size_t>(i)] >= 0) throw InputError("partition classes overlap at " + std::to_string(i));
        class_of_[static_cast<std::size_t>(i)] = static_cast<int>(m);
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (class_of_[i] < 0) throw InputError("partition does not cover element " + std::to_string(i));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return classes_.size(); }
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
  const std::vector<int>& cls(std::size_t m) const { return classes_.at(m); }
  int class_of(int i) const { return class_of_.at(static_cast<std::size_t>(i)); }

  /// 1 <= |A_m| <= d + 1 for every class.
  bool is_proper(std::size_t d) const {
    return std::all_of(classes_.begin(), classes_.end(),
                       [&](const auto& c) { return !c.empty() && c.size() <= d + 1; });
  }

  /// Classes reordered by smallest element (empty classes last).
  Partition canonical() const {
    auto c = classes_;
    std::stable_sort(c.begin(), c.end(), [](const auto& x, const auto& y) {
      if (x.empty() || y.empty()) return !x.empty() && y.empty();
      return x.front() < y.front();
    });
    return Partition(n_, std::move(c));
  }

  /// The same partition, classes relabeled so that class m becomes perm[m].
  Partition relabeled(const std::vector<int>& perm) const {
    if (perm.size() != r()) throw DimensionError("class permutation has the wrong length");
    std::vector<std::vector<int>> c(r());
    for (std::size_t m = 0; m < r(); ++m) c.at(static_cast<std::size_t>(perm[m])) = classes_[m];
    return Partition(n_, std::move(c));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.n_ == b.n_ && a.classes_ == b.classes_; }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.classes_ < b.classes_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// Blocks B_0..B_d, B_s = {s(r-1), ..., (s+1)(r-1)}: r consecutive
/// elements each, consecutive blocks sharing one element.
inline std::vector<std::vector<int>> blocks(std::size_t d, std::size_t r) {
  if (d < 1 || r < 2) throw InputError("blocks need d >= 1 and r >= 2");
  std::vector<std::vector<int>> out(d + 1);
  for (std::size_t s = 0; s <= d; ++s)
    for (std::size_t x = 0; x < r; ++x) out[s].push_back(static_cast<int>(s * (r - 1) + x));
  return out;
}

/// Proper and |A_m ∩ B_s| = 1 for every class m and block s.
inline bool is_rainbow(const Partition& p, std::size_t d, std::size_t r) {
  if (p.n() != tverberg_number(r, d)) throw DimensionError("partition ground set must have T(r,d) elements");
  if (p.r() != r || !p.is_proper(d)) return false;
  for (const auto& b : blocks(d, r)) {
    std::vector<int> hits(r, 0);
    for (int i : b) ++hits[static_cast<std::size_t>(p.class_of(i))];
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  }
  return true;
}

/// Calls `visit` on every partition of 0..n-1 into exactly r nonempty
/// classes of size at most `max_size`, in canonical form (classes ordered
/// by smallest element). Enumerates restricted-growth strings with
/// capacity pruning.
inline void for_each_partition(std::size_t n, std::size_t r, std::size_t max_size,
                               const std::function<void(const Partition&)>& visit) {
  if (r == 0 || r * max_size < n || r > n) return;
  std::vector<std::vector<int>> classes;
  std::function<void(int)> place = [&](int i) {
    const auto remaining = static_cast<std::size_t>(static_cast<int>(n) - i);
    if (remaining + classes.size() < r) return;  // too few elements left to open every class
    if (i == static_cast<int>(n)) {
      if (classes.size() == r) visit(Partition(n, classes));
      return;
    }
    std::size_t room = 0;
    for (const auto& c : classes) room += max_size - c.size();
    room += (r - classes.size()) * max_size;
    if (room < remaining) return;
    // by index: opening a class deeper down may reallocate `classes`
    for (std::size_t m = 0; m < classes.size(); ++m) {
      if (classes[m].size() >= max_size) continue;
      classes[m].push_back(i);
      place(i + 1);
      classes[m].pop_back();
    }
    if (classes.size() < r) {
      classes.push_back({i});
      place(i + 1);
      classes.pop_back();
    }
  };
  place(0);
}

/// All proper partitions of [T(r,d)] into r classes, canonical and sorted.
inline std::vector<Partition> enumerate_proper_partitions(std::size_t d, std::size_t r) {
  std::vector<Partition> out;
  for_each_partition(tverberg_number(r, d), r, d + 1, [&](const Partition& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

/// All rainbow partitions, canonical and sorted.
inline std::vector<Partition> enumerate_rainbow(std::size_t d, std::size_t r) {
  std::vector<Partition> out;
  for_each_partition(tverberg_number(r, d), r, d + 1, [&](const Partition& p) {
    if (is_rainbow(p, d, r)) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tverberg
