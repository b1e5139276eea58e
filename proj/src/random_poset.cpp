#include "markedpoly/random_poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace markedpoly {

MarkedPoset random_marked_poset(Rng& rng, const RandomPosetOptions& options) {
  const int u = static_cast<int>(rng.uniform(1, std::max(1, options.max_unmarked)));
  const int density = static_cast<int>(rng.uniform(0, 4));  // in quarters
  const int budget = static_cast<int>(rng.uniform(2, std::max(2, options.max_unmarked)));
  const int bottoms = static_cast<int>(rng.uniform(1, budget - 1));
  const int tops = static_cast<int>(rng.uniform(1, budget - bottoms));
  const int middles = budget - bottoms - tops;

  auto x = [](int i) { return "x" + std::to_string(i); };
  auto s = [](int i) { return "s" + std::to_string(i); };
  auto t = [](int i) { return "t" + std::to_string(i); };
  auto mid = [](int i) { return "m" + std::to_string(i); };

  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<bool> has_lower(u, false), has_upper(u, false);
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j)
      if (rng.chance(density, 4)) {
        relations.emplace_back(x(i), x(j));
        has_upper[i] = has_lower[j] = true;
      }

  std::vector<int> position(middles);
  for (int k = 0; k < middles; ++k) {
    position[k] = static_cast<int>(rng.uniform(0, u));
    for (int i = 0; i < u; ++i) {
      if (!rng.chance(std::max(density, 1), 4)) continue;
      if (i < position[k]) {
        relations.emplace_back(x(i), mid(k));
        has_upper[i] = true;
      } else {
        relations.emplace_back(mid(k), x(i));
        has_lower[i] = true;
      }
    }
    for (int b = 0; b < bottoms; ++b)
      if (rng.chance(1, 3)) relations.emplace_back(s(b), mid(k));
    for (int e = 0; e < tops; ++e)
      if (rng.chance(1, 3)) relations.emplace_back(mid(k), t(e));
  }

  for (int i = 0; i < u; ++i) {
    if (!has_lower[i]) relations.emplace_back(s(static_cast<int>(rng.uniform(0, bottoms - 1))), x(i));
    if (!has_upper[i]) relations.emplace_back(x(i), t(static_cast<int>(rng.uniform(0, tops - 1))));
  }
  for (int b = 0; b < bottoms; ++b)
    for (int i = 0; i < u; ++i)
      if (rng.chance(1, 4)) relations.emplace_back(s(b), x(i));
  for (int e = 0; e < tops; ++e)
    for (int i = 0; i < u; ++i)
      if (rng.chance(1, 4)) relations.emplace_back(x(i), t(e));

  // Element order: bottoms, unmarked and middles interleaved by position, tops.
  std::vector<std::string> elements;
  for (int b = 0; b < bottoms; ++b) elements.push_back(s(b));
  for (int i = 0; i <= u; ++i) {
    for (int k = 0; k < middles; ++k)
      if (position[k] == i) elements.push_back(mid(k));
    if (i < u) elements.push_back(x(i));
  }
  for (int e = 0; e < tops; ++e) elements.push_back(t(e));

  std::set<std::string> marked;
  std::map<std::string, Rational> marking;
  auto draw = [&]() {
    if (!options.real_marks) return Rational(static_cast<long>(rng.uniform(-options.max_mark, options.max_mark)));
    const std::int64_t den = rng.uniform(1, std::max(1, options.max_denominator));
    Rational q(static_cast<long>(rng.uniform(-options.max_mark * den, options.max_mark * den)),
               static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
  };
  for (const auto& name : elements) {
    if (name[0] == 'x') continue;
    marked.insert(name);
    marking[name] = draw();
  }
  return MarkedPoset::create(Poset::validate(elements, relations), marked, marking);
}

} // namespace markedpoly
