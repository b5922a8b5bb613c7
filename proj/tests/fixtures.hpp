#pragma once

// Super-dominant instances shared by the filling tests and the acceptance
// binary.

#include <stdexcept>

#include "tverberg/dominance.hpp"
#include "tverberg/filling.hpp"
#include "tverberg/sequences.hpp"

namespace fixture {

using namespace tverberg;

struct Instance {
  std::size_t d = 0, r = 0;
  Scalar q;
  SuperDominantInstance gen;
  PointSequence points;  // without the all-ones row
  LiftFrame frame;
  DominanceProfile profile;
};

/// Base-2 super-dominant points for (d, r); classes empty = precedence chain.
inline Instance super_dominant(std::size_t d, std::size_t r, const std::vector<GapClass>& classes = {}) {
  const Scalar q = default_threshold(d, r);
  auto gen = gen_super_dominant(d, tverberg_number(r, d), Scalar(2), q, classes);
  auto points = gen.sequence.materialize().without_row(0);
  auto frame = ordered_frame(points, q);
  if (!is_ordered_q_increasing(ExactRatios(frame.ordered(), q))) throw std::logic_error("not q-increasing");
  auto profile = dominance_profile(frame.ordered(), q);
  return Instance{d, r, q, std::move(gen), std::move(points), std::move(frame), std::move(profile)};
}

}  // namespace fixture
