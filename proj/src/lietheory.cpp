#include "markedpoly/lietheory.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "markedpoly/errors.hpp"
#include "markedpoly/transfer.hpp"

namespace markedpoly {

const char* to_string(LieType type) {
  switch (type) {
  case LieType::A: return "A";
  case LieType::B: return "B";
  case LieType::C: return "C";
  }
  return "?";
}

void validate_weight(const Weight& w) {
  const auto& e = w.entries;
  if (e.empty()) throw InvalidWeight("weight has no entries");
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] < e[i + 1]) throw InvalidWeight("entries must be weakly decreasing");
  switch (w.type) {
  case LieType::A:
    for (const auto& v : e)
      if (!is_integral(v)) throw InvalidWeight("type A entries must be integers");
    break;
  case LieType::C:
    for (const auto& v : e)
      if (!is_integral(v) || v < 0) throw InvalidWeight("type C entries must be nonnegative integers");
    break;
  case LieType::B: {
    for (const auto& v : e) {
      if (v < 0 || !is_integral(v * 2)) throw InvalidWeight("type B entries must lie in (1/2)Z>=0");
      if (is_integral(v) != is_integral(e.front()))
        throw InvalidWeight("type B entries must be all integers or all half-odd");
    }
    break;
  }
  }
}

Weight make_weight(LieType type, std::vector<Rational> entries) {
  Weight w{type, std::move(entries)};
  validate_weight(w);
  return w;
}

std::string root_name(const PositiveRoot& root) {
  return "a" + std::to_string(root.first) + "_" + std::to_string(root.second);
}

namespace {

std::string mark_name(std::size_t i) { return "l" + std::to_string(i); }

void require(const Weight& w, LieType type, std::size_t min_rank) {
  validate_weight(w);
  if (w.type != type) throw InvalidWeight(std::string("expected a type ") + to_string(type) + " weight");
  if (w.rank() < min_rank) throw InvalidWeight("rank too small");
}

} // namespace

std::vector<PositiveRoot> positive_roots(int n) {
  std::vector<PositiveRoot> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.emplace_back(i, j);
  return roots;
}

MarkedPoset gt_poset(const Weight& w) {
  require(w, LieType::A, 2);
  const int n = static_cast<int>(w.rank());
  auto entry = [&](int i, int j) { return j == i ? std::string() : root_name({i, j}); };

  std::vector<std::string> elements;
  std::map<std::string, Rational> marking;
  std::set<std::string> marked;
  for (int i = 1; i <= n; ++i) {
    elements.push_back(mark_name(i));
    marked.insert(mark_name(i));
    marking[mark_name(i)] = w.entries[i - 1];
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& [i, j] : positive_roots(n)) {
    const std::string self = root_name({i, j});
    elements.push_back(self);
    // Upper-left neighbor: α_{i,j-1}, or the mark λ_i in the top row.
    relations.emplace_back(self, j - 1 == i ? mark_name(i) : entry(i, j - 1));
    // Upper-right neighbor: α_{i+1,j}, or the mark λ_j in the top row.
    relations.emplace_back(i + 1 == j ? mark_name(j) : entry(i + 1, j), self);
  }
  return MarkedPoset::create(Poset::validate(elements, relations), marked, marking);
}

std::vector<DyckPath> dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<PositiveRoot> path;
  std::function<void(int, int)> walk = [&](int i, int j) {
    path.emplace_back(i, j);
    if (j == i + 1) out.push_back(DyckPath{path});
    if (j + 1 <= n) walk(i, j + 1);
    if (i + 1 < j) walk(i + 1, j);
    path.pop_back();
  };
  for (int i = 1; i < n; ++i) walk(i, i + 1);
  return out;
}

LinearInequalitySystem ffl_hrep(const Weight& w) {
  require(w, LieType::A, 2);
  const int n = static_cast<int>(w.rank());
  const auto roots = positive_roots(n);
  LinearInequalitySystem H;
  for (const auto& r : roots) H.variables.push_back(root_name(r));
  H.nonnegative.assign(roots.size(), true);
  auto column = [&](const PositiveRoot& r) {
    return static_cast<std::size_t>(std::find(roots.begin(), roots.end(), r) - roots.begin());
  };
  for (const auto& path : dyck_paths(n)) {
    const int first = path.roots.front().first, last = path.roots.back().first;
    // m_i + … + m_j with m_k = λ_k - λ_{k+1}.
    InequalityRow row{std::vector<Rational>(roots.size(), Rational(0)),
                      w.entries[first - 1] - w.entries[last]};
    for (const auto& r : path.roots) row.coefficients[column(r)] = 1;
    H.rows.push_back(std::move(row));
  }
  return H;
}

namespace {

// Board cells use (row, doubled column). Row 0 holds λ at columns
// 0, 2, …, 2n-2; row r >= 1 runs from column r to 2n-1 (odd r) or 2n-2
// (even r) in steps of 2.
struct Board {
  MarkedPoset marked;
  std::vector<bool> upper_right;
};

Board build_board(const Weight& w) {
  validate_weight(w);
  if (w.type == LieType::A) throw InvalidWeight("board needs a type B or C weight");
  const int n = static_cast<int>(w.rank());
  auto last_column = [&](int row) { return row == 0 ? 2 * n - 2 : (row % 2 ? 2 * n - 1 : 2 * n - 2); };
  auto first_column = [&](int row) { return row; };
  auto cell = [&](int row, int col) {
    if (row == 0) return mark_name(static_cast<std::size_t>(col / 2 + 1));
    return "b" + std::to_string(row) + "_" + std::to_string(col);
  };
  auto exists = [&](int row, int col) {
    return row >= 0 && row <= 2 * n - 1 && col >= first_column(row) && col <= last_column(row) &&
           (col - row) % 2 == 0;
  };

  std::vector<std::string> elements;
  std::set<std::string> marked;
  std::map<std::string, Rational> marking;
  for (int i = 1; i <= n; ++i) {
    elements.push_back(mark_name(i));
    marked.insert(mark_name(i));
    marking[mark_name(i)] = w.entries[i - 1];
  }
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<bool> upper_right;
  std::vector<std::string> zeros;
  for (int row = 1; row <= 2 * n - 1; ++row) {
    for (int col = first_column(row); col <= last_column(row); col += 2) {
      const std::string self = cell(row, col);
      elements.push_back(self);
      relations.emplace_back(self, cell(row - 1, col - 1));
      if (exists(row - 1, col + 1)) {
        relations.emplace_back(cell(row - 1, col + 1), self);
        upper_right.push_back(true);
      } else {
        const std::string zero = "z" + std::to_string(row);
        zeros.push_back(zero);
        relations.emplace_back(zero, self);
        upper_right.push_back(false);
      }
    }
  }
  for (const auto& z : zeros) {
    elements.push_back(z);
    marked.insert(z);
    marking[z] = 0;
  }
  return Board{MarkedPoset::create(Poset::validate(elements, relations), marked, marking),
               std::move(upper_right)};
}

} // namespace

MarkedPoset bz_poset(const Weight& w) { return build_board(w).marked; }

MarkedPoset sp_poset(const Weight& w) {
  require(w, LieType::C, 1);
  return bz_poset(w);
}

std::vector<bool> bz_has_upper_right(const Weight& w) { return build_board(w).upper_right; }

std::vector<GridVector> o_patterns(const Weight& w) {
  require(w, LieType::B, 1);
  const Board board = build_board(w);
  const Rational& top = w.entries.front();
  std::vector<GridVector> out;
  for (auto& x : enumerate_order_points(board.marked, 2)) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      if (board.upper_right[i] && !is_integral(x.coords[i] + top)) ok = false;
    if (ok) {
      x.denominator = 2;
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<GridVector> s_lambda_image(const Weight& w) {
  require(w, LieType::B, 1);
  const MarkedPoset M = bz_poset(w);
  std::vector<GridVector> out;
  for (const auto& x : o_patterns(w)) out.push_back(phi_tilde(M, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridVector> s_lambda_direct(const Weight& w) {
  require(w, LieType::B, 1);
  const MarkedPoset M = bz_poset(w);
  const Poset& P = M.poset();
  const Rational& top = w.entries.front();
  for (ElementId p : M.unmarked()) {
    if (P.height(p) != 2) continue;
    for (ElementId q : P.lower_covers(p))
      if (M.is_marked(q))
        throw CharacterizationMismatch("height-2 element '" + P.name(p) + "' covers marked '" + P.name(q) + "'");
  }
  std::vector<GridVector> out;
  for (auto& y : enumerate_chain_points(M, 2)) {
    bool ok = true;
    for (std::size_t i = 0; i < M.dimension() && ok; ++i) {
      const ElementId p = M.unmarked()[i];
      const std::size_t h = P.height(p);
      if (h >= 3) {
        ok = is_integral(y.coords[i]);
      } else if (h == 2) {
        Rational best = y.coords[M.variable(P.lower_covers(p).front())];
        for (ElementId q : P.lower_covers(p))
          if (y.coords[M.variable(q)] > best) best = y.coords[M.variable(q)];
        ok = is_integral(best + y.coords[i] + top);
      }
    }
    if (ok) {
      y.denominator = 2;
      out.push_back(std::move(y));
    }
  }
  return out;
}

std::vector<GridVector> s_lambda(const Weight& w) {
  auto image = s_lambda_image(w);
  const auto direct = s_lambda_direct(w);
  if (image != direct)
    throw CharacterizationMismatch("image has " + std::to_string(image.size()) + " points, description has " +
                                   std::to_string(direct.size()));
  return image;
}

Integer weyl_dim(const Weight& w) {
  validate_weight(w);
  const std::size_t n = w.rank();
  std::vector<Rational> rho(n);
  std::vector<std::vector<int>> roots;  // coefficient vectors in the ε basis
  auto unit = [&](std::size_t i, int a, std::size_t j, int b) {
    std::vector<int> v(n, 0);
    v[i] += a;
    v[j] += b;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) roots.push_back(unit(i, 1, j, -1));
  switch (w.type) {
  case LieType::A:
    for (std::size_t i = 0; i < n; ++i) rho[i] = static_cast<long>(n - 1 - i);
    break;
  case LieType::B:
    for (std::size_t i = 0; i < n; ++i) rho[i] = Rational(static_cast<long>(2 * (n - i) - 1), 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) roots.push_back(unit(i, 1, j, 1));
    for (std::size_t i = 0; i < n; ++i) roots.push_back(unit(i, 1, i, 0));
    break;
  case LieType::C:
    for (std::size_t i = 0; i < n; ++i) rho[i] = static_cast<long>(n - i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) roots.push_back(unit(i, 1, j, 1));
    for (std::size_t i = 0; i < n; ++i) roots.push_back(unit(i, 2, i, 0));
    break;
  }
  Rational dim = 1;
  for (const auto& alpha : roots) {
    Rational num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      num += (w.entries[i] + rho[i]) * alpha[i];
      den += rho[i] * alpha[i];
    }
    dim *= num / den;
  }
  if (!is_integral(dim)) throw std::logic_error("Weyl dimension is not an integer: " + to_string(dim));
  return dim.get_num();
}

} // namespace markedpoly
