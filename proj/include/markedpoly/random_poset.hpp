#pragma once

#include <cstdint>

#include "markedpoly/marked.hpp"
#include "markedpoly/rng.hpp"

namespace markedpoly {

struct RandomPosetOptions {
  int max_unmarked = 6;
  // Marks are drawn from [-max_mark, max_mark].
  int max_mark = 3;
  // Draw marks from (1/d)Z with d in [1, max_denominator] instead of Z.
  bool real_marks = false;
  int max_denominator = 4;
};

// Random marked poset. Between 1 and max_unmarked unmarked elements "x<i>"
// carry a random DAG whose density is itself drawn from {0, 1/4, 1/2, 3/4, 1}.
// At most max(2, max_unmarked) marked elements are split into bottoms "s<i>",
// tops "t<i>" and middles "m<i>" inserted at a random point of the
// topological order. Every unmarked element without an unmarked element
// below (above) gets a bottom (top), so all extremal elements are marked.
MarkedPoset random_marked_poset(Rng& rng, const RandomPosetOptions& options);

} // namespace markedpoly
