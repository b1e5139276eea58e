#include "markedpoly/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

#include "markedpoly/errors.hpp"

namespace markedpoly {

const char* to_string(PolytopeKind kind) { return kind == PolytopeKind::Order ? "order" : "chain"; }

// ---------------------------------------------------------------------------
// H-representations

NormalizedSystem LinearInequalitySystem::normalized() const {
  NormalizedSystem out;
  for (const auto& row : rows) {
    std::map<std::string, Rational> support;
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (row.coefficients[i] != 0) support.emplace(variables[i], row.coefficients[i]);
    out.rows.emplace(std::move(support), row.bound);
  }
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (nonnegative[i]) out.nonnegative.insert(variables[i]);
  return out;
}

std::string LinearInequalitySystem::to_string() const {
  std::ostringstream os;
  std::vector<std::string> nonneg;
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (nonnegative[i]) nonneg.push_back(variables[i]);
  if (!nonneg.empty()) {
    for (std::size_t i = 0; i < nonneg.size(); ++i) os << (i ? ", " : "") << nonneg[i];
    os << " >= 0\n";
  }
  for (const auto& row : rows) {
    bool first = true;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      const Rational& c = row.coefficients[i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const Rational a = abs(c);
      if (a != 1) os << markedpoly::to_string(a) << "*";
      os << variables[i];
      first = false;
    }
    if (first) os << "0";
    os << " <= " << markedpoly::to_string(row.bound) << "\n";
  }
  return os.str();
}

LinearInequalitySystem order_hrep(const MarkedPoset& M) {
  const Poset& P = M.poset();
  LinearInequalitySystem H;
  H.variables = M.variable_names();
  H.nonnegative.assign(M.dimension(), false);
  const std::size_t d = M.dimension();
  for (const auto& [lo, hi] : P.cover_pairs()) {
    const bool lo_marked = M.is_marked(lo), hi_marked = M.is_marked(hi);
    if (lo_marked && hi_marked) continue;
    InequalityRow row{std::vector<Rational>(d, Rational(0)), Rational(0)};
    if (!lo_marked) row.coefficients[M.variable(lo)] = 1;
    else row.bound -= M.mark(lo);
    if (!hi_marked) row.coefficients[M.variable(hi)] = -1;
    else row.bound += M.mark(hi);
    H.rows.push_back(std::move(row));
  }
  return H;
}

LinearInequalitySystem chain_hrep(const MarkedPoset& M) {
  LinearInequalitySystem H;
  H.variables = M.variable_names();
  H.nonnegative.assign(M.dimension(), true);
  for (const auto& chain : marked_chains(M)) {
    InequalityRow row{std::vector<Rational>(M.dimension(), Rational(0)),
                      M.mark(chain.upper_mark) - M.mark(chain.lower_mark)};
    for (ElementId p : chain.interior) row.coefficients[M.variable(p)] = 1;
    H.rows.push_back(std::move(row));
  }
  return H;
}

LinearInequalitySystem hrep(const MarkedPoset& M, PolytopeKind kind) {
  return kind == PolytopeKind::Order ? order_hrep(M) : chain_hrep(M);
}

bool contains(const LinearInequalitySystem& H, const std::vector<Rational>& x) {
  if (x.size() != H.dimension())
    throw IndexMismatch("point has " + std::to_string(x.size()) + " coordinates, system has " +
                        std::to_string(H.dimension()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (H.nonnegative[i] && x[i] < 0) return false;
  Rational lhs;
  for (const auto& row : H.rows) {
    lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (row.coefficients[i] != 0) lhs += row.coefficients[i] * x[i];
    if (lhs > row.bound) return false;
  }
  return true;
}

bool contains(const LinearInequalitySystem& H, const GridVector& x) { return contains(H, x.coords); }

// ---------------------------------------------------------------------------
// Grid vectors and polynomials

GridVector GridVector::from_coords(std::vector<Rational> coords) {
  GridVector g;
  g.denominator = common_denominator(coords);
  g.coords = std::move(coords);
  return g;
}

GridVector GridVector::from_scaled(std::span<const std::int64_t> scaled, std::int64_t m) {
  GridVector g;
  g.denominator = m;
  g.coords.reserve(scaled.size());
  for (std::int64_t v : scaled) {
    Rational q(static_cast<long>(v), static_cast<unsigned long>(m));
    q.canonicalize();
    g.coords.push_back(std::move(q));
  }
  return g;
}

bool GridVector::on_grid() const {
  if (denominator <= 0) return false;
  return std::all_of(coords.begin(), coords.end(),
                     [&](const Rational& c) { return is_integral(c * Rational(denominator)); });
}

std::string to_string(const GridVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ",";
    s += to_string(x.coords[i]);
  }
  return s;
}

Rational EhrhartPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Rational a = abs(c);
    if (k == 0) {
      os << markedpoly::to_string(a);
    } else {
      if (a != 1) os << markedpoly::to_string(a) << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

EhrhartPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  assert(xs.size() == ys.size());
  const std::size_t n = xs.size();
  std::vector<Rational> result(std::max<std::size_t>(n, 1), Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational scale = ys[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      scale /= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return EhrhartPolynomial{std::move(result)};
}

// ---------------------------------------------------------------------------
// Grid enumeration
//
// All grid work happens on scaled integer coordinates v = m·x. Variables are
// processed in the poset's linear extension (height, index), so every
// unmarked lower cover of a variable is assigned before it.

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::min();

std::vector<std::size_t> variable_steps(const MarkedPoset& M) {
  std::vector<std::size_t> steps;
  for (ElementId p : M.poset().linear_extension())
    if (!M.is_marked(p)) steps.push_back(M.variable(p));
  return steps;
}

std::int64_t scaled_ceil(const Rational& q, std::int64_t m) { return to_int64(ceil(q * Rational(m))); }
std::int64_t scaled_floor(const Rational& q, std::int64_t m) { return to_int64(floor(q * Rational(m))); }

// Order polytope on the scaled grid. Lower bounds come from marked lower
// covers and assigned lower covers; the upper bound is a static bound
// propagated down from the marked upper covers. With these bounds every
// partial assignment extends, so backtracking never hits a dead end.
struct OrderPlan {
  std::vector<std::size_t> var;                    // step -> variable
  std::vector<std::int64_t> marked_lower;          // step -> max ceil(m λ), or kNoBound
  std::vector<std::vector<std::size_t>> lower;     // step -> steps of unmarked lower covers
  std::vector<std::vector<std::size_t>> upper;     // step -> steps of unmarked upper covers
  std::vector<std::int64_t> static_upper;          // step -> upper bound
  bool empty = false;

  OrderPlan(const MarkedPoset& M, std::int64_t m) {
    const Poset& P = M.poset();
    var = variable_steps(M);
    const std::size_t d = var.size();
    std::vector<std::size_t> step_of(d);
    for (std::size_t s = 0; s < d; ++s) step_of[var[s]] = s;

    marked_lower.assign(d, kNoBound);
    lower.assign(d, {});
    upper.assign(d, {});
    std::vector<std::int64_t> marked_upper(d, std::numeric_limits<std::int64_t>::max());
    bool has_upper_mark_path = true;
    for (std::size_t s = 0; s < d; ++s) {
      const ElementId p = M.unmarked()[var[s]];
      for (ElementId q : P.lower_covers(p)) {
        if (M.is_marked(q)) marked_lower[s] = std::max(marked_lower[s], scaled_ceil(M.mark(q), m));
        else lower[s].push_back(step_of[M.variable(q)]);
      }
      for (ElementId q : P.upper_covers(p)) {
        if (M.is_marked(q)) marked_upper[s] = std::min(marked_upper[s], scaled_floor(M.mark(q), m));
        else upper[s].push_back(step_of[M.variable(q)]);
      }
    }

    static_upper = marked_upper;
    for (std::size_t s = d; s-- > 0;)
      for (std::size_t t : upper[s]) static_upper[s] = std::min(static_upper[s], static_upper[t]);

    std::vector<std::int64_t> static_lower = marked_lower;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t : lower[s]) static_lower[s] = std::max(static_lower[s], static_lower[t]);

    for (std::size_t s = 0; s < d; ++s) {
      // Every unmarked element sits between marked extremal elements.
      if (static_lower[s] == kNoBound || static_upper[s] == std::numeric_limits<std::int64_t>::max())
        has_upper_mark_path = false;
      if (static_lower[s] > static_upper[s]) empty = true;
    }
    assert(has_upper_mark_path);
    (void)has_upper_mark_path;
  }

  std::int64_t lower_bound(std::size_t s, const std::vector<std::int64_t>& value) const {
    std::int64_t lo = marked_lower[s];
    for (std::size_t t : lower[s]) lo = std::max(lo, value[t]);
    return lo;
  }
};

// Chain polytope on the scaled grid: x >= 0 and running sums along each
// marked chain. Chain members are assigned bottom-up, so the slack of a chain
// only shrinks and any partial assignment within the slacks extends by zeros.
struct ChainPlan {
  std::vector<std::size_t> var;
  std::vector<std::int64_t> bound;                   // chain -> floor(m(λ_b - λ_a))
  std::vector<std::vector<std::size_t>> members;     // chain -> steps, ascending
  std::vector<std::vector<std::size_t>> through;     // step -> chains
  bool empty = false;

  ChainPlan(const MarkedPoset& M, std::int64_t m) {
    var = variable_steps(M);
    const std::size_t d = var.size();
    std::vector<std::size_t> step_of(d);
    for (std::size_t s = 0; s < d; ++s) step_of[var[s]] = s;
    through.assign(d, {});
    for (const auto& chain : marked_chains(M)) {
      const std::size_t c = bound.size();
      bound.push_back(scaled_floor(M.mark(chain.upper_mark) - M.mark(chain.lower_mark), m));
      if (bound.back() < 0) empty = true;
      std::vector<std::size_t> steps;
      for (ElementId p : chain.interior) steps.push_back(step_of[M.variable(p)]);
      std::sort(steps.begin(), steps.end());
      for (std::size_t s : steps) through[s].push_back(c);
      members.push_back(std::move(steps));
    }
    for (std::size_t s = 0; s < d; ++s) {
      // Each unmarked element lies on a saturated chain between marked extremals.
      assert(!through[s].empty());
    }
  }
};

void backtrack_order(const OrderPlan& plan, std::int64_t /*m*/,
                     const std::function<void(std::span<const std::int64_t>)>& visit) {
  const std::size_t d = plan.var.size();
  std::vector<std::int64_t> value(d), out(d);
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == d) {
      for (std::size_t t = 0; t < d; ++t) out[plan.var[t]] = value[t];
      visit(out);
      return;
    }
    const std::int64_t lo = plan.lower_bound(s, value), hi = plan.static_upper[s];
    for (std::int64_t v = lo; v <= hi; ++v) {
      value[s] = v;
      rec(s + 1);
    }
  };
  rec(0);
}

void backtrack_chain(const ChainPlan& plan,
                     const std::function<void(std::span<const std::int64_t>)>& visit) {
  const std::size_t d = plan.var.size();
  std::vector<std::int64_t> value(d), out(d), slack = plan.bound;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == d) {
      for (std::size_t t = 0; t < d; ++t) out[plan.var[t]] = value[t];
      visit(out);
      return;
    }
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    for (std::size_t c : plan.through[s]) hi = std::min(hi, slack[c]);
    for (std::int64_t v = 0; v <= hi; ++v) {
      value[s] = v;
      for (std::size_t c : plan.through[s]) slack[c] -= v;
      rec(s + 1);
      for (std::size_t c : plan.through[s]) slack[c] += v;
    }
  };
  rec(0);
}

// Forward dynamic program over the steps. The state after step s holds the
// only data later steps read: for the order polytope the values of assigned
// variables with an unassigned upper cover; for the chain polytope the partial
// sums of chains with members on both sides of s.
Integer count_order(const OrderPlan& plan) {
  const std::size_t d = plan.var.size();
  // frontier[s]: steps t <= s with an upper cover after s.
  std::vector<std::vector<std::size_t>> frontier(d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t <= s; ++t)
      if (std::any_of(plan.upper[t].begin(), plan.upper[t].end(), [&](std::size_t u) { return u > s; }))
        frontier[s].push_back(t);

  std::map<std::vector<std::int64_t>, Integer> states{{{}, Integer(1)}};
  std::vector<std::size_t> previous;
  std::vector<std::int64_t> value(d, 0);
  for (std::size_t s = 0; s < d; ++s) {
    std::map<std::vector<std::int64_t>, Integer> next;
    for (const auto& [key, count] : states) {
      for (std::size_t i = 0; i < previous.size(); ++i) value[previous[i]] = key[i];
      const std::int64_t lo = plan.lower_bound(s, value), hi = plan.static_upper[s];
      for (std::int64_t v = lo; v <= hi; ++v) {
        value[s] = v;
        std::vector<std::int64_t> nk;
        nk.reserve(frontier[s].size());
        for (std::size_t t : frontier[s]) nk.push_back(value[t]);
        next[std::move(nk)] += count;
      }
    }
    states = std::move(next);
    previous = frontier[s];
  }
  Integer total = 0;
  for (const auto& [key, count] : states) total += count;
  return total;
}

Integer count_chain(const ChainPlan& plan) {
  const std::size_t d = plan.var.size();
  const std::size_t nchains = plan.bound.size();
  std::vector<std::vector<std::size_t>> open(d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t c = 0; c < nchains; ++c)
      if (plan.members[c].front() <= s && plan.members[c].back() > s) open[s].push_back(c);

  std::map<std::vector<std::int64_t>, Integer> states{{{}, Integer(1)}};
  std::vector<std::size_t> previous;
  std::vector<std::int64_t> partial(nchains, 0);
  for (std::size_t s = 0; s < d; ++s) {
    std::map<std::vector<std::int64_t>, Integer> next;
    for (const auto& [key, count] : states) {
      std::fill(partial.begin(), partial.end(), 0);
      for (std::size_t i = 0; i < previous.size(); ++i) partial[previous[i]] = key[i];
      std::int64_t hi = std::numeric_limits<std::int64_t>::max();
      for (std::size_t c : plan.through[s]) hi = std::min(hi, plan.bound[c] - partial[c]);
      for (std::int64_t v = 0; v <= hi; ++v) {
        std::vector<std::int64_t> nk;
        nk.reserve(open[s].size());
        for (std::size_t c : open[s]) {
          const bool member =
              std::find(plan.through[s].begin(), plan.through[s].end(), c) != plan.through[s].end();
          nk.push_back(partial[c] + (member ? v : 0));
        }
        next[std::move(nk)] += count;
      }
    }
    states = std::move(next);
    previous = open[s];
  }
  Integer total = 0;
  for (const auto& [key, count] : states) total += count;
  return total;
}

void check_grid(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("grid parameter must be a positive integer");
}

} // namespace

void visit_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m,
                  const std::function<void(std::span<const std::int64_t>)>& visit) {
  check_grid(m);
  if (kind == PolytopeKind::Order) {
    OrderPlan plan(M, m);
    if (!plan.empty) backtrack_order(plan, m, visit);
  } else {
    ChainPlan plan(M, m);
    if (!plan.empty) backtrack_chain(plan, visit);
  }
}

std::vector<GridVector> enumerate_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m) {
  std::vector<std::vector<std::int64_t>> scaled;
  visit_points(M, kind, m, [&](std::span<const std::int64_t> v) { scaled.emplace_back(v.begin(), v.end()); });
  std::sort(scaled.begin(), scaled.end());
  std::vector<GridVector> out;
  out.reserve(scaled.size());
  for (const auto& v : scaled) out.push_back(GridVector::from_scaled(v, m));
  return out;
}

std::vector<GridVector> enumerate_order_points(const MarkedPoset& M, std::int64_t m) {
  return enumerate_points(M, PolytopeKind::Order, m);
}

std::vector<GridVector> enumerate_chain_points(const MarkedPoset& M, std::int64_t m) {
  return enumerate_points(M, PolytopeKind::Chain, m);
}

Integer count_points(const MarkedPoset& M, PolytopeKind kind, std::int64_t m) {
  check_grid(m);
  if (kind == PolytopeKind::Order) {
    OrderPlan plan(M, m);
    return plan.empty ? Integer(0) : count_order(plan);
  }
  ChainPlan plan(M, m);
  return plan.empty ? Integer(0) : count_chain(plan);
}

EhrhartPolynomial ehrhart(const MarkedPoset& M, PolytopeKind kind) {
  if (!M.has_integral_marking()) throw NonIntegralMarking("Ehrhart polynomials need an integral marking");
  const std::size_t d = M.dimension();
  std::vector<Rational> xs, ys;
  for (std::size_t n = 1; n <= d + 1; ++n) {
    const Integer c = count_points(dilate_marking(M, static_cast<long>(n)), kind, 1);
    if (n == 1 && c == 0) throw EmptyPolytope(std::string(to_string(kind)) + " polytope has no points");
    xs.emplace_back(static_cast<long>(n));
    ys.emplace_back(c);
  }
  return interpolate(xs, ys);
}

std::optional<GridVector> sample_point(const MarkedPoset& M, PolytopeKind kind, Rng& rng,
                                       std::int64_t denominator) {
  check_grid(denominator);
  std::vector<std::int64_t> out(M.dimension());
  if (kind == PolytopeKind::Order) {
    OrderPlan plan(M, denominator);
    if (plan.empty) return std::nullopt;
    std::vector<std::int64_t> value(plan.var.size());
    for (std::size_t s = 0; s < plan.var.size(); ++s) {
      value[s] = rng.uniform(plan.lower_bound(s, value), plan.static_upper[s]);
      out[plan.var[s]] = value[s];
    }
  } else {
    ChainPlan plan(M, denominator);
    if (plan.empty) return std::nullopt;
    std::vector<std::int64_t> slack = plan.bound;
    for (std::size_t s = 0; s < plan.var.size(); ++s) {
      std::int64_t hi = std::numeric_limits<std::int64_t>::max();
      for (std::size_t c : plan.through[s]) hi = std::min(hi, slack[c]);
      const std::int64_t v = rng.uniform(0, hi);
      for (std::size_t c : plan.through[s]) slack[c] -= v;
      out[plan.var[s]] = v;
    }
  }
  return GridVector::from_scaled(out, denominator);
}

} // namespace markedpoly
