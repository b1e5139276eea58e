#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "markedpoly/poset.hpp"
#include "markedpoly/rational.hpp"

namespace markedpoly {

// A marked poset (P, A, λ): a finite poset, a subset A of marked elements
// containing every extremal element, and a rational value λ_a for each a ∈ A.
//
// The unmarked elements P−A are the coordinates of every polytope built from
// it. Their order (the "variable order") is poset index order.
class MarkedPoset {
public:
  // Throws ExtremalNotMarked or MarkingDomainMismatch (a marked element
  // without a value, a value on an unmarked element, or an unknown name).
  static MarkedPoset create(Poset poset, const std::set<std::string>& marked,
                            const std::map<std::string, Rational>& marking);

  const Poset& poset() const { return poset_; }

  bool is_marked(ElementId p) const { return marking_.at(p).has_value(); }
  // λ_p; p must be marked.
  const Rational& mark(ElementId p) const;

  // Unmarked elements in variable order.
  const std::vector<ElementId>& unmarked() const { return unmarked_; }
  std::size_t dimension() const { return unmarked_.size(); }
  // Position of p in the variable order; p must be unmarked.
  std::size_t variable(ElementId p) const;
  std::vector<std::string> variable_names() const;

  std::vector<ElementId> marked_elements() const;
  bool has_integral_marking() const;
  Integer marking_denominator() const;

  friend bool operator==(const MarkedPoset& a, const MarkedPoset& b) {
    return a.poset_ == b.poset_ && a.marking_ == b.marking_;
  }

private:
  MarkedPoset(Poset poset) : poset_(std::move(poset)) {}

  Poset poset_;
  std::vector<std::optional<Rational>> marking_;
  std::vector<ElementId> unmarked_;
  std::vector<std::size_t> variable_;
};

// a < interior[0] ≺ … ≺ interior.back() < b, saturated, with only the
// endpoints marked.
struct MarkedChain {
  ElementId lower_mark;
  std::vector<ElementId> interior;
  ElementId upper_mark;

  friend bool operator==(const MarkedChain&, const MarkedChain&) = default;
};

// Free-function constructor mirroring MarkedPoset::create.
MarkedPoset new_marked_poset(Poset poset, const std::set<std::string>& marked,
                             const std::map<std::string, Rational>& marking);

// P̃ = P ∪ {0̂, 1̂} with A = {0̂, 1̂}, λ = (0, 1). The new elements are named
// "hat0" and "hat1" (primed until they do not clash with P).
MarkedPoset stanley_embed(const Poset& poset);

// Same (P, A) with marking n·λ.
MarkedPoset dilate_marking(const MarkedPoset& M, long n);

// Saturated chains whose endpoints are marked and whose interior is a
// nonempty set of unmarked elements, sorted lexicographically by the index
// sequence (lower, interior..., upper).
std::vector<MarkedChain> marked_chains(const MarkedPoset& M);

// Marked covers a ≺ b with λ_b < λ_a. No inequality of either polytope
// involves such a pair directly, so the pair is reported rather than rejected.
std::vector<std::pair<ElementId, ElementId>> marking_warnings(const MarkedPoset& M);

} // namespace markedpoly
