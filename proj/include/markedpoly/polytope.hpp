#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "markedpoly/marked.hpp"
#include "markedpoly/rational.hpp"
#include "markedpoly/rng.hpp"

namespace markedpoly {

enum class PolytopeKind { Order, Chain };

const char* to_string(PolytopeKind kind);

// coefficients · x <= bound
struct InequalityRow {
  std::vector<Rational> coefficients;
  Rational bound;
};

// Canonical form used to compare systems: each row as (support → coefficient,
// bound), rows as a set, plus the set of nonnegative variables.
struct NormalizedSystem {
  std::set<std::pair<std::map<std::string, Rational>, Rational>> rows;
  std::set<std::string> nonnegative;

  friend bool operator==(const NormalizedSystem&, const NormalizedSystem&) = default;
};

// Exact H-representation over named variables.
struct LinearInequalitySystem {
  std::vector<std::string> variables;
  std::vector<InequalityRow> rows;
  std::vector<bool> nonnegative;

  std::size_t dimension() const { return variables.size(); }
  NormalizedSystem normalized() const;
  std::string to_string() const;
};

// A point whose coordinates all lie in (1/denominator)·Z.
struct GridVector {
  std::vector<Rational> coords;
  Integer denominator = 1;

  // Denominator set to the least common denominator of the coordinates.
  static GridVector from_coords(std::vector<Rational> coords);
  // coords[i] = scaled[i] / m.
  static GridVector from_scaled(std::span<const std::int64_t> scaled, std::int64_t m);

  std::size_t size() const { return coords.size(); }
  bool on_grid() const;

  friend bool operator==(const GridVector& a, const GridVector& b) { return a.coords == b.coords; }
  friend bool operator<(const GridVector& a, const GridVector& b) { return a.coords < b.coords; }
};

std::string to_string(const GridVector& x);

struct EhrhartPolynomial {
  // Ascending powers of t.
  std::vector<Rational> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Rational operator()(const Rational& t) const;
  std::string to_string() const;

  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;
};

// One row per cover relation touching an unmarked element:
// x_q - x_p <= 0 for unmarked q ≺ p, -x_p <= -λ_a for a ≺ p, x_p <= λ_b for p ≺ b.
LinearInequalitySystem order_hrep(const MarkedPoset& M);

// x >= 0 and one row per marked chain, sum of interior coordinates <= λ_b - λ_a.
LinearInequalitySystem chain_hrep(const MarkedPoset& M);

LinearInequalitySystem hrep(const MarkedPoset& M, PolytopeKind kind);

// Throws IndexMismatch if x has the wrong length.
bool contains(const LinearInequalitySystem& H, const GridVector& x);
bool contains(const LinearInequalitySystem& H, const std::vector<Rational>& x);

// Points of the polytope with every coordinate in (1/m)·Z, sorted
// lexicographically in variable order. The marking may be any rational
// vector.
std::vector<GridVector> enumerate_order_points(const MarkedPoset& M, std::int64_t m);
std::vector<GridVector> enumerate_chain_points(const MarkedPoset& M, std::int64_t m);
std::vector<GridVector> enumerate_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m);

// Calls visit(scaled) for each grid point, where scaled = m·x in variable
// order. Order of visits is unspecified.
void visit_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m,
                  const std::function<void(std::span<const std::int64_t>)>& visit);

// Number of (1/m)-grid points, computed by a dynamic program over the
// variable order without listing the points.
Integer count_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m);

// Interpolates lattice point counts of the dilates n = 1 .. dim+1.
// Throws NonIntegralMarking or EmptyPolytope.
EhrhartPolynomial ehrhart(const MarkedPoset& M, PolytopeKind kind);

// Lagrange interpolation through (x_i, y_i); the x_i must be distinct.
EhrhartPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// A random point of the polytope on the (1/denominator)-grid, drawn
// coordinate by coordinate; nullopt if that grid misses the polytope.
std::optional<GridVector> sample_point(const MarkedPoset& M, PolytopeKind kind, Rng& rng,
                                       std::int64_t denominator);

} // namespace markedpoly
