#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "markedpoly/marked.hpp"

namespace markedpoly {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Grid point counts of the order and chain polytopes agree.
CheckResult check_count_equality(const MarkedPoset& M, std::int64_t m);
// φ̃ maps the (1/m)-grid points of the order polytope one-to-one onto those
// of the chain polytope.
CheckResult check_bijection(const MarkedPoset& M, std::int64_t m);
// ψ̃∘φ̃ = id on the order grid points and φ̃∘ψ̃ = id on the chain grid
// points, with images inside the other polytope.
CheckResult check_round_trip(const MarkedPoset& M, std::int64_t m);
// Both Ehrhart polynomials agree (skipped for non-integral markings).
CheckResult check_ehrhart_equality(const MarkedPoset& M);

// All four checks in the order above.
std::vector<CheckResult> verify_marked_poset(const MarkedPoset& M, std::int64_t m);

} // namespace markedpoly
