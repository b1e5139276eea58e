#include "markedpoly/transfer.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "markedpoly/errors.hpp"

namespace markedpoly {

namespace {

void check_size(const MarkedPoset& M, const GridVector& x) {
  if (x.size() != M.dimension())
    throw IndexMismatch("vector has " + std::to_string(x.size()) + " coordinates, expected " +
                        std::to_string(M.dimension()));
}

} // namespace

FullVector phi(const Poset& P, const FullVector& x) {
  if (x.size() != P.size()) throw IndexMismatch("vector length does not match the poset");
  FullVector y(x.size());
  for (ElementId p = 0; p < P.size(); ++p) {
    const auto& lower = P.lower_covers(p);
    if (lower.empty()) {
      y[p] = x[p];
      continue;
    }
    y[p] = x[p] - x[lower.front()];
    for (ElementId q : lower)
      if (x[p] - x[q] < y[p]) y[p] = x[p] - x[q];
  }
  return y;
}

FullVector include(const MarkedPoset& M, const GridVector& x) {
  check_size(M, x);
  FullVector full(M.poset().size());
  for (ElementId p = 0; p < full.size(); ++p)
    full[p] = M.is_marked(p) ? M.mark(p) : x.coords[M.variable(p)];
  return full;
}

GridVector project(const MarkedPoset& M, const FullVector& x) {
  if (x.size() != M.poset().size()) throw IndexMismatch("vector length does not match the poset");
  std::vector<Rational> coords;
  coords.reserve(M.dimension());
  for (ElementId p : M.unmarked()) coords.push_back(x[p]);
  return GridVector::from_coords(std::move(coords));
}

GridVector phi_tilde_formula(const MarkedPoset& M, const GridVector& x) {
  check_size(M, x);
  const Poset& P = M.poset();
  std::vector<Rational> y(M.dimension());
  Rational diff;
  for (std::size_t i = 0; i < M.dimension(); ++i) {
    const ElementId p = M.unmarked()[i];
    bool first = true;
    for (ElementId q : P.lower_covers(p)) {
      diff = x.coords[i] - (M.is_marked(q) ? M.mark(q) : x.coords[M.variable(q)]);
      if (first || diff < y[i]) y[i] = diff;
      first = false;
    }
  }
  return GridVector::from_coords(std::move(y));
}

GridVector phi_tilde_composed(const MarkedPoset& M, const GridVector& x) {
  return project(M, phi(M.poset(), include(M, x)));
}

GridVector phi_tilde(const MarkedPoset& M, const GridVector& x) {
  GridVector y = phi_tilde_formula(M, x);
  if (!(y == phi_tilde_composed(M, x)))
    throw std::logic_error("transfer map: formula and composition disagree at " + to_string(x));
  return y;
}

FullVector psi(const MarkedPoset& M, const GridVector& y) {
  check_size(M, y);
  const Poset& P = M.poset();
  FullVector out(P.size());
  for (ElementId p : P.linear_extension()) {
    if (M.is_marked(p)) {
      out[p] = M.mark(p);
      continue;
    }
    const auto& lower = P.lower_covers(p);
    Rational best = out[lower.front()];
    for (ElementId q : lower)
      if (out[q] > best) best = out[q];
    out[p] = y.coords[M.variable(p)] + best;
  }
  return out;
}

GridVector psi_tilde(const MarkedPoset& M, const GridVector& y) { return project(M, psi(M, y)); }

ScaledTransfer::ScaledTransfer(const MarkedPoset& M, std::int64_t scale) : scale_(scale) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  const Poset& P = M.poset();
  lower_.resize(M.dimension());
  for (std::size_t i = 0; i < M.dimension(); ++i) {
    for (ElementId q : P.lower_covers(M.unmarked()[i])) {
      if (!M.is_marked(q)) {
        lower_[i].push_back({false, static_cast<std::int64_t>(M.variable(q))});
        continue;
      }
      const Rational v = M.mark(q) * scale;
      if (!is_integral(v)) throw std::invalid_argument("mark " + to_string(M.mark(q)) + " is off the grid");
      lower_[i].push_back({true, to_int64(v.get_num())});
    }
  }
  for (ElementId p : P.linear_extension())
    if (!M.is_marked(p)) bottom_up_.push_back(M.variable(p));
}

void ScaledTransfer::phi(std::span<const std::int64_t> x, std::span<std::int64_t> y) const {
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    std::int64_t below = INT64_MIN;
    for (const Lower& l : lower_[i]) below = std::max(below, l.marked ? l.value : x[l.value]);
    y[i] = x[i] - below;
  }
}

void ScaledTransfer::psi(std::span<const std::int64_t> y, std::span<std::int64_t> x) const {
  for (std::size_t i : bottom_up_) {
    std::int64_t below = INT64_MIN;
    for (const Lower& l : lower_[i]) below = std::max(below, l.marked ? l.value : x[l.value]);
    x[i] = y[i] + below;
  }
}

} // namespace markedpoly
