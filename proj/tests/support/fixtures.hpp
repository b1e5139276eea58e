#pragma once

#include <string>

#include "markedpoly/io.hpp"
#include "markedpoly/marked.hpp"

namespace markedpoly::testing {

// 0 < p < q < r < 3 with 1 < q < 2; marks named by their values.
inline const char* kFig2File = R"(# marked Hasse diagram with lambda = (3,2,1,0)
elem m0 p q r m3 m1 m2
mark m3 3
mark m2 2
mark m1 1
mark m0 0
cover m0 p
cover p q
cover q r
cover r m3
cover m1 q
cover q m2
)";

inline MarkedPoset fig2() { return parse_marked_poset(kFig2File); }

// a < p < b with the given marks.
inline MarkedPoset segment(const std::string& low, const std::string& high) {
  return parse_marked_poset("elem a p b\nmark a " + low + "\nmark b " + high + "\ncover a p\ncover p b\n");
}

} // namespace markedpoly::testing
