#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "markedpoly/marked.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/poset.hpp"
#include "markedpoly/rational.hpp"

namespace markedpoly {

// A vector indexed by every element of P, in poset index order.
using FullVector = std::vector<Rational>;

// Stanley's transfer map on R^P: x_p for minimal p, otherwise
// min { x_p - x_q : p ≻ q }.
FullVector phi(const Poset& P, const FullVector& x);

// The marked transfer map on R^{P-A}:
//   φ̃(x)_p = min({x_p - x_q : p ≻ q, q ∉ A} ∪ {x_p - λ_q : p ≻ q, q ∈ A}).
// Computed from this formula and checked against π∘φ∘i; a disagreement
// throws std::logic_error.
GridVector phi_tilde(const MarkedPoset& M, const GridVector& x);

// The two routes separately.
GridVector phi_tilde_formula(const MarkedPoset& M, const GridVector& x);
GridVector phi_tilde_composed(const MarkedPoset& M, const GridVector& x);

// i: adds λ_a at every marked a.
FullVector include(const MarkedPoset& M, const GridVector& x);
// π: forgets the marked coordinates.
GridVector project(const MarkedPoset& M, const FullVector& x);

// Lift ψ(y)_p = λ_p for p ∈ A, y_p + max { ψ(y)_q : p ≻ q } otherwise,
// evaluated bottom-up in height order.
FullVector psi(const MarkedPoset& M, const GridVector& y);

// ψ̃ = π∘ψ, the inverse of φ̃ on the chain polytope.
GridVector psi_tilde(const MarkedPoset& M, const GridVector& y);

// φ̃ and ψ̃ on integer vectors v = scale·x, for streaming over large grids.
// Every mark must lie in (1/scale)Z (throws std::invalid_argument) and the
// scaled marks must fit in 64 bits (throws OutOfRange).
class ScaledTransfer {
public:
  ScaledTransfer(const MarkedPoset& M, std::int64_t scale);

  std::size_t dimension() const { return lower_.size(); }
  std::int64_t scale() const { return scale_; }

  void phi(std::span<const std::int64_t> x, std::span<std::int64_t> y) const;
  void psi(std::span<const std::int64_t> y, std::span<std::int64_t> x) const;

private:
  // Lower covers of each variable: a variable index, or a scaled mark.
  struct Lower {
    bool marked;
    std::int64_t value;
  };
  std::int64_t scale_;
  std::vector<std::vector<Lower>> lower_;
  // Variables sorted by height, so lower covers come first.
  std::vector<std::size_t> bottom_up_;
};

} // namespace markedpoly
