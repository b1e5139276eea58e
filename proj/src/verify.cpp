#include "markedpoly/verify.hpp"

#include <algorithm>
#include <optional>

#include "markedpoly/errors.hpp"
#include "markedpoly/rational.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/transfer.hpp"

namespace markedpoly {

const char* to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::Pass: return "PASS";
  case CheckStatus::Fail: return "FAIL";
  case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

CheckResult result(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

} // namespace

CheckResult check_count_equality(const MarkedPoset& M, std::int64_t m) {
  const Integer order = count_points(M, PolytopeKind::Order, m);
  const Integer chain = count_points(M, PolytopeKind::Chain, m);
  return result("count-equality", order == chain,
                "grid 1/" + std::to_string(m) + ": order " + to_string(order) + ", chain " + to_string(chain));
}

CheckResult check_bijection(const MarkedPoset& M, std::int64_t m) {
  // Streams the order grid points through φ̃ in scaled integers. The image
  // must land on the chain grid, ψ̃ must undo φ̃ (so φ̃ is injective), and
  // both grids must have the same number of points. A spread-out sample of
  // points is also pushed through the exact rational φ̃.
  const std::int64_t scale = to_int64(lcm(Integer(m), M.marking_denominator()));
  const std::int64_t k = scale / m;
  const ScaledTransfer T(M, scale);
  const auto H = chain_hrep(M);
  std::vector<std::vector<std::int64_t>> coeffs;
  std::vector<std::int64_t> bounds;
  for (const auto& row : H.rows) {
    std::vector<std::int64_t> c;
    for (const auto& v : row.coefficients) c.push_back(to_int64(Integer(v)));
    coeffs.push_back(std::move(c));
    bounds.push_back(to_int64(Integer(row.bound * scale)));
  }

  const Integer expected = count_points(M, PolytopeKind::Order, m);
  const Integer stride = std::max(Integer(1), Integer(expected / 2000));
  const std::size_t d = M.dimension();
  std::vector<std::int64_t> x(d), y(d), back(d);
  Integer visited = 0;
  std::string failure;
  visit_points(M, PolytopeKind::Order, m, [&](std::span<const std::int64_t> v) {
    if (!failure.empty()) return;
    for (std::size_t i = 0; i < d; ++i) x[i] = v[i] * k;
    T.phi(x, y);
    for (std::size_t i = 0; i < d && failure.empty(); ++i)
      if (y[i] < 0 || y[i] % k != 0) failure = "phi~ leaves the chain grid";
    for (std::size_t r = 0; r < coeffs.size() && failure.empty(); ++r) {
      std::int64_t lhs = 0;
      for (std::size_t i = 0; i < d; ++i) lhs += coeffs[r][i] * y[i];
      if (lhs > bounds[r]) failure = "phi~ leaves the chain polytope";
    }
    T.psi(y, back);
    if (failure.empty() && back != x) failure = "psi~(phi~(x)) != x, so phi~ is not injective";
    if (failure.empty() && visited % stride == 0 &&
        !(phi_tilde(M, GridVector::from_scaled(v, m)) == GridVector::from_scaled(y, scale)))
      failure = "scaled and rational transfer maps disagree";
    if (!failure.empty()) failure += " at " + to_string(GridVector::from_scaled(v, m));
    ++visited;
  });
  Integer chain = 0;
  if (failure.empty()) visit_points(M, PolytopeKind::Chain, m, [&](std::span<const std::int64_t>) { ++chain; });

  std::string detail = "grid 1/" + std::to_string(m) + ": " + to_string(visited) + " -> " + to_string(chain) + " points";
  if (!failure.empty()) return result("bijection", false, detail + ", " + failure);
  if (visited != chain) return result("bijection", false, detail + ", image misses chain grid points");
  return result("bijection", true, detail);
}

CheckResult check_round_trip(const MarkedPoset& M, std::int64_t m) {
  const auto O = order_hrep(M);
  const auto C = chain_hrep(M);
  std::size_t checked = 0;
  for (const auto& x : enumerate_order_points(M, m)) {
    const GridVector y = phi_tilde(M, x);
    if (!contains(C, y)) return result("round-trip", false, "phi~(" + to_string(x) + ") leaves the chain polytope");
    if (!(psi_tilde(M, y) == x)) return result("round-trip", false, "psi~(phi~(x)) != x at " + to_string(x));
    ++checked;
  }
  for (const auto& y : enumerate_chain_points(M, m)) {
    const GridVector x = psi_tilde(M, y);
    if (!contains(O, x)) return result("round-trip", false, "psi~(" + to_string(y) + ") leaves the order polytope");
    if (!(phi_tilde(M, x) == y)) return result("round-trip", false, "phi~(psi~(y)) != y at " + to_string(y));
    ++checked;
  }
  return result("round-trip", true, std::to_string(checked) + " points");
}

CheckResult check_ehrhart_equality(const MarkedPoset& M) {
  if (!M.has_integral_marking()) return {"ehrhart-equality", CheckStatus::Skip, "marking is not integral"};
  std::optional<EhrhartPolynomial> order, chain;
  try {
    order = ehrhart(M, PolytopeKind::Order);
  } catch (const EmptyPolytope&) {
  }
  try {
    chain = ehrhart(M, PolytopeKind::Chain);
  } catch (const EmptyPolytope&) {
  }
  if (!order && !chain) return {"ehrhart-equality", CheckStatus::Pass, "both polytopes are empty"};
  if (!order || !chain) return result("ehrhart-equality", false, "exactly one polytope is empty");
  return result("ehrhart-equality", *order == *chain,
                "order " + order->to_string() + "; chain " + chain->to_string());
}

std::vector<CheckResult> verify_marked_poset(const MarkedPoset& M, std::int64_t m) {
  return {check_count_equality(M, m), check_bijection(M, m), check_round_trip(M, m), check_ehrhart_equality(M)};
}

} // namespace markedpoly
