#include "markedpoly/poset.hpp"

#include <algorithm>

#include "markedpoly/errors.hpp"

namespace markedpoly {

Poset Poset::validate(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset P;
  for (const auto& e : elements) {
    if (!P.index_.emplace(e, P.names_.size()).second) throw DuplicateElement("'" + e + "'");
    P.names_.push_back(e);
  }
  const std::size_t n = P.names_.size();

  auto lookup = [&](const std::string& e) {
    auto it = P.index_.find(e);
    if (it == P.index_.end()) throw UnknownElementInCover("'" + e + "'");
    return it->second;
  };

  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : relations) {
    const ElementId a = lookup(lo), b = lookup(hi);
    if (a == b) throw CycleDetected("'" + lo + "' related to itself");
    if (std::find(succ[a].begin(), succ[a].end(), b) != succ[a].end()) continue;
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; deterministic by always taking the smallest index.
  std::vector<ElementId> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> deg = indegree;
    std::vector<ElementId> ready;
    for (ElementId p = 0; p < n; ++p)
      if (deg[p] == 0) ready.push_back(p);
    while (!ready.empty()) {
      auto it = std::min_element(ready.begin(), ready.end());
      const ElementId p = *it;
      ready.erase(it);
      topo.push_back(p);
      for (ElementId q : succ[p])
        if (--deg[q] == 0) ready.push_back(q);
    }
  }
  if (topo.size() != n) {
    for (ElementId p = 0; p < n; ++p)
      if (std::find(topo.begin(), topo.end(), p) == topo.end())
        throw CycleDetected("cycle through '" + P.names_[p] + "'");
  }

  // Transitive closure in reverse topological order.
  std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const ElementId p = *it;
    for (ElementId q : succ[p]) {
      above[p][q] = true;
      for (ElementId r = 0; r < n; ++r)
        if (above[q][r]) above[p][r] = true;
    }
  }

  P.below_.assign(n, std::vector<bool>(n, false));
  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q)
      if (above[p][q]) P.below_[q][p] = true;

  // q covers p iff p < q and there is no r with p < r < q.
  P.lower_.assign(n, {});
  P.upper_.assign(n, {});
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      if (!above[p][q]) continue;
      bool cover = true;
      for (ElementId r = 0; r < n && cover; ++r)
        if (above[p][r] && above[r][q]) cover = false;
      if (cover) {
        P.cover_pairs_.emplace_back(p, q);
        P.lower_[q].push_back(p);
        P.upper_[p].push_back(q);
      }
    }
  }

  P.height_.assign(n, 0);
  for (ElementId p : topo)
    for (ElementId q : P.upper_[p]) P.height_[q] = std::max(P.height_[q], P.height_[p] + 1);

  P.linear_extension_.resize(n);
  for (ElementId p = 0; p < n; ++p) P.linear_extension_[p] = p;
  std::stable_sort(P.linear_extension_.begin(), P.linear_extension_.end(),
                   [&](ElementId a, ElementId b) { return P.height_[a] < P.height_[b]; });
  return P;
}

ElementId Poset::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement("'" + name + "'");
  return it->second;
}

bool Poset::less_than(ElementId p, ElementId q) const {
  if (p >= size() || q >= size()) throw UnknownElement("index out of range");
  return below_[q][p];
}

bool Poset::less_than(const std::string& p, const std::string& q) const {
  return less_than(index(p), index(q));
}

bool Poset::covers(ElementId q, ElementId p) const {
  const auto& lo = lower_covers(q);
  return std::find(lo.begin(), lo.end(), p) != lo.end();
}

std::pair<std::vector<ElementId>, std::vector<ElementId>> Poset::extremal_elements() const {
  std::vector<ElementId> minimal, maximal;
  for (ElementId p = 0; p < size(); ++p) {
    if (is_minimal(p)) minimal.push_back(p);
    if (is_maximal(p)) maximal.push_back(p);
  }
  return {minimal, maximal};
}

} // namespace markedpoly
