#pragma once

#include <string>
#include <utility>
#include <vector>

#include "markedpoly/marked.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/rational.hpp"

namespace markedpoly {

enum class LieType { A, B, C };

const char* to_string(LieType type);

// A dominant weight given by its coordinates (λ_1, …, λ_n) in the ε basis.
// Type A: n = number of entries of sl_n; weakly decreasing integers.
// Type C: weakly decreasing nonnegative integers.
// Type B: weakly decreasing elements of (1/2)Z≥0, all integers or none.
struct Weight {
  LieType type;
  std::vector<Rational> entries;

  std::size_t rank() const { return entries.size(); }
};

// Throws InvalidWeight.
Weight make_weight(LieType type, std::vector<Rational> entries);
void validate_weight(const Weight& w);

// α_{i,j} = ε_i - ε_j with 1 <= i < j <= n.
using PositiveRoot = std::pair<int, int>;

// Variable name of α_{i,j}: "a<i>_<j>".
std::string root_name(const PositiveRoot& root);

struct DyckPath {
  std::vector<PositiveRoot> roots;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

// Gelfand–Tsetlin marked poset of sl_n: marks "l1".."ln" carrying λ and one
// unmarked element per positive root, named by root_name. The board entry in
// row r (r >= 1), position k (0-based) is α_{k+1, k+1+r}; it lies below its
// upper-left and above its upper-right neighbor. Variables come out in
// lexicographic root order.
MarkedPoset gt_poset(const Weight& w);

// Positive roots of sl_n in lexicographic order.
std::vector<PositiveRoot> positive_roots(int n);

// All Dyck paths of sl_n, sorted by start root and then lexicographically by
// root sequence.
std::vector<DyckPath> dyck_paths(int n);

// Feigin–Fourier–Littelmann inequalities over the positive roots:
// s >= 0 and, for each Dyck path from α_i to α_j, the sum of its
// coordinates <= m_i + … + m_j = λ_i - λ_{j+1}.
LinearInequalitySystem ffl_hrep(const Weight& w);

// Marked poset of the Berenstein–Zelevinsky board for sp_2n / o_2n+1: marks
// "l1".."ln" carrying λ, 2n-1 rows of lengths n, n-1, n-1, …, 1, 1 named
// "b<row>_<col>" (col = doubled horizontal offset), and a mark "z<row>"
// with value 0 below each right-edge entry. Accepts type B or C weights.
MarkedPoset bz_poset(const Weight& w);

// sp_2n patterns are the integral points of the order polytope of this poset.
MarkedPoset sp_poset(const Weight& w);

// Per variable of bz_poset(w): true if the board entry has an upper-right
// neighbor. These are the entries constrained to λ_1 + Z in type B.
std::vector<bool> bz_has_upper_right(const Weight& w);

// o_2n+1 patterns R(λ): half-integral points of the order polytope of
// bz_poset(w) whose entries with an upper-right neighbor are ≡ λ_1 mod Z.
std::vector<GridVector> o_patterns(const Weight& w);

// S(λ) as the image φ̃(R(λ)), sorted.
std::vector<GridVector> s_lambda_image(const Weight& w);

// S(λ) from its description inside the chain polytope: half-integral points,
// integral on elements of height >= 3, and max{y_q : p ≻ q} + y_p + λ_1 ∈ Z
// for elements p of height 2. Throws CharacterizationMismatch if a height-2
// element covers a marked element (the description does not cover it).
std::vector<GridVector> s_lambda_direct(const Weight& w);

// S(λ); throws CharacterizationMismatch if the two descriptions differ.
std::vector<GridVector> s_lambda(const Weight& w);

// dim V(λ) by the Weyl dimension formula in exact arithmetic.
Integer weyl_dim(const Weight& w);

} // namespace markedpoly
