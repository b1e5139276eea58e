#pragma once

#include <string>
#include <string_view>

#include "markedpoly/marked.hpp"

namespace markedpoly {

// Marked poset text format, one directive per line, `#` starts a comment:
//
//   elem <name>+            declare elements (order of first appearance)
//   mark <name> <rational>  mark an element; rational is `[-+]N` or `[-+]N/D`
//   cover <lower> <upper>   relation lower < upper (transitively reduced)
//
// Names must be declared before use. Throws ParseError with the offending
// line number, or the validation errors of Poset / MarkedPoset.
MarkedPoset parse_marked_poset(std::string_view text);

// Inverse of parse_marked_poset: one `elem` line, marks and covers in index
// order.
std::string serialize_marked_poset(const MarkedPoset& M);

} // namespace markedpoly
