#pragma once

// Exhaustive search for monochromatic subsequences under a coloring of
// k-element index tuples.

#include <functional>
#include <optional>
#include <vector>

#include "tverberg/core_arith.hpp"

namespace tverberg {

/// Colors an increasing tuple of indices.
using TupleColoring = std::function<int(const std::vector<int>&)>;

namespace detail {

inline bool extend_monochromatic(std::vector<int>& chosen, std::size_t target, std::size_t arity, int universe,
                                 const TupleColoring& color, std::optional<int>& colour_seen) {
  if (chosen.size() == target) return true;
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  const auto need = static_cast<int>(target - chosen.size());
  for (int next = start; next + need <= universe; ++next) {
    // every new tuple ends in `next`; check all of them
    bool ok = true;
    std::optional<int> local = colour_seen;
    if (chosen.size() + 1 >= arity) {
      std::vector<int> pick;
      std::vector<int> tuple(arity);
      std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t depth) -> bool {
        if (depth + 1 == arity) {
          for (std::size_t x = 0; x < pick.size(); ++x) tuple[x] = pick[x];
          tuple[arity - 1] = next;
          const int c = color(tuple);
          if (!local) local = c;
          return *local == c;
        }
        for (std::size_t p = from; p < chosen.size(); ++p) {
          pick.push_back(chosen[p]);
          const bool good = walk(p + 1, depth + 1);
          pick.pop_back();
          if (!good) return false;
        }
        return true;
      };
      ok = walk(0, 0);
    }
    if (!ok) continue;
    chosen.push_back(next);
    std::optional<int> saved = colour_seen;
    colour_seen = local;
    if (extend_monochromatic(chosen, target, arity, universe, color, colour_seen)) return true;
    colour_seen = saved;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Lexicographically first set of `target` indices from 0..universe-1 whose
/// arity-subsets all receive the same color, or nullopt.
inline std::optional<std::vector<int>> monochromatic_subsequence(std::size_t target, std::size_t arity,
                                                                 const TupleColoring& color, int universe) {
  if (arity == 0) throw InputError("arity must be positive");
  if (universe < 0 || target > static_cast<std::size_t>(universe)) return std::nullopt;
  std::vector<int> chosen;
  std::optional<int> colour;
  if (detail::extend_monochromatic(chosen, target, arity, universe, color, colour)) return chosen;
  return std::nullopt;
}

}  // namespace tverberg
