#include "markedpoly/marked.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "markedpoly/errors.hpp"

namespace markedpoly {

MarkedPoset MarkedPoset::create(Poset poset, const std::set<std::string>& marked,
                                const std::map<std::string, Rational>& marking) {
  MarkedPoset M(std::move(poset));
  const Poset& P = M.poset_;
  for (const auto& name : marked)
    if (!P.contains(name)) throw MarkingDomainMismatch("marked element '" + name + "' is not in the poset");
  for (const auto& [name, value] : marking) {
    if (!marked.count(name))
      throw MarkingDomainMismatch("value given for unmarked element '" + name + "'");
  }
  M.marking_.assign(P.size(), std::nullopt);
  for (const auto& name : marked) {
    auto it = marking.find(name);
    if (it == marking.end()) throw MarkingDomainMismatch("no value for marked element '" + name + "'");
    M.marking_[P.index(name)] = it->second;
  }
  for (ElementId p = 0; p < P.size(); ++p) {
    if (P.is_extremal(p) && !M.marking_[p])
      throw ExtremalNotMarked("'" + P.name(p) + "' is " + (P.is_minimal(p) ? "minimal" : "maximal") +
                              " but not marked");
  }
  M.variable_.assign(P.size(), std::numeric_limits<std::size_t>::max());
  for (ElementId p = 0; p < P.size(); ++p) {
    if (M.marking_[p]) continue;
    M.variable_[p] = M.unmarked_.size();
    M.unmarked_.push_back(p);
  }
  return M;
}

const Rational& MarkedPoset::mark(ElementId p) const {
  const auto& v = marking_.at(p);
  if (!v) throw MarkingDomainMismatch("'" + poset_.name(p) + "' is not marked");
  return *v;
}

std::size_t MarkedPoset::variable(ElementId p) const {
  if (p >= variable_.size() || marking_[p]) throw IndexMismatch("element is not a coordinate");
  return variable_[p];
}

std::vector<std::string> MarkedPoset::variable_names() const {
  std::vector<std::string> out;
  out.reserve(unmarked_.size());
  for (ElementId p : unmarked_) out.push_back(poset_.name(p));
  return out;
}

std::vector<ElementId> MarkedPoset::marked_elements() const {
  std::vector<ElementId> out;
  for (ElementId p = 0; p < marking_.size(); ++p)
    if (marking_[p]) out.push_back(p);
  return out;
}

bool MarkedPoset::has_integral_marking() const {
  return std::all_of(marking_.begin(), marking_.end(),
                     [](const auto& v) { return !v || is_integral(*v); });
}

Integer MarkedPoset::marking_denominator() const {
  Integer d = 1;
  for (const auto& v : marking_)
    if (v) d = lcm(d, v->get_den());
  return d;
}

MarkedPoset new_marked_poset(Poset poset, const std::set<std::string>& marked,
                             const std::map<std::string, Rational>& marking) {
  return MarkedPoset::create(std::move(poset), marked, marking);
}

MarkedPoset stanley_embed(const Poset& poset) {
  auto fresh = [&](std::string base) {
    while (poset.contains(base)) base += "'";
    return base;
  };
  const std::string bottom = fresh("hat0");
  const std::string top = fresh("hat1");

  std::vector<std::string> elements{bottom};
  for (const auto& n : poset.names()) elements.push_back(n);
  elements.push_back(top);

  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& [lo, hi] : poset.cover_pairs()) relations.emplace_back(poset.name(lo), poset.name(hi));
  for (const auto& n : poset.names()) {
    relations.emplace_back(bottom, n);
    relations.emplace_back(n, top);
  }
  if (poset.size() == 0) relations.emplace_back(bottom, top);

  return MarkedPoset::create(Poset::validate(elements, relations), {bottom, top},
                             {{bottom, Rational(0)}, {top, Rational(1)}});
}

MarkedPoset dilate_marking(const MarkedPoset& M, long n) {
  std::set<std::string> marked;
  std::map<std::string, Rational> marking;
  for (ElementId a : M.marked_elements()) {
    marked.insert(M.poset().name(a));
    marking[M.poset().name(a)] = M.mark(a) * n;
  }
  return MarkedPoset::create(M.poset(), marked, marking);
}

std::vector<MarkedChain> marked_chains(const MarkedPoset& M) {
  const Poset& P = M.poset();
  std::vector<std::vector<ElementId>> sequences;
  std::vector<ElementId> path;

  std::function<void(ElementId)> extend = [&](ElementId p) {
    path.push_back(p);
    for (ElementId q : P.upper_covers(p)) {
      if (M.is_marked(q)) {
        path.push_back(q);
        sequences.push_back(path);
        path.pop_back();
      } else {
        extend(q);
      }
    }
    path.pop_back();
  };

  for (ElementId a : M.marked_elements()) {
    path.assign(1, a);
    for (ElementId p : P.upper_covers(a))
      if (!M.is_marked(p)) extend(p);
  }
  std::sort(sequences.begin(), sequences.end());

  std::vector<MarkedChain> chains;
  chains.reserve(sequences.size());
  for (const auto& s : sequences)
    chains.push_back(MarkedChain{s.front(), std::vector<ElementId>(s.begin() + 1, s.end() - 1), s.back()});
  return chains;
}

std::vector<std::pair<ElementId, ElementId>> marking_warnings(const MarkedPoset& M) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (const auto& [lo, hi] : M.poset().cover_pairs())
    if (M.is_marked(lo) && M.is_marked(hi) && M.mark(hi) < M.mark(lo)) out.emplace_back(lo, hi);
  return out;
}

} // namespace markedpoly
