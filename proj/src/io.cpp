#include "markedpoly/io.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "markedpoly/errors.hpp"

namespace markedpoly {

MarkedPoset parse_marked_poset(std::string_view text) {
  std::vector<std::string> elements;
  std::set<std::string> declared;
  std::vector<std::pair<std::string, std::string>> relations;
  std::set<std::string> marked;
  std::map<std::string, Rational> marking;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    auto require_declared = [&](const std::string& name) {
      if (!declared.count(name)) throw ParseError(lineno, "unknown element '" + name + "'");
    };

    const std::string& directive = tok[0];
    if (directive == "elem") {
      if (tok.size() < 2) throw ParseError(lineno, "elem needs at least one name");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!declared.insert(tok[i]).second) throw ParseError(lineno, "duplicate element '" + tok[i] + "'");
        elements.push_back(tok[i]);
      }
    } else if (directive == "mark") {
      if (tok.size() != 3) throw ParseError(lineno, "mark takes a name and a rational");
      require_declared(tok[1]);
      if (marked.count(tok[1])) throw ParseError(lineno, "element '" + tok[1] + "' marked twice");
      try {
        marking[tok[1]] = parse_rational(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      marked.insert(tok[1]);
    } else if (directive == "cover") {
      if (tok.size() != 3) throw ParseError(lineno, "cover takes two names");
      require_declared(tok[1]);
      require_declared(tok[2]);
      relations.emplace_back(tok[1], tok[2]);
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
  }
  return MarkedPoset::create(Poset::validate(elements, relations), marked, marking);
}

std::string serialize_marked_poset(const MarkedPoset& M) {
  const Poset& P = M.poset();
  std::ostringstream os;
  if (P.size() > 0) {
    os << "elem";
    for (const auto& n : P.names()) os << " " << n;
    os << "\n";
  }
  for (ElementId a : M.marked_elements()) os << "mark " << P.name(a) << " " << to_string(M.mark(a)) << "\n";
  for (const auto& [lo, hi] : P.cover_pairs()) os << "cover " << P.name(lo) << " " << P.name(hi) << "\n";
  return os.str();
}

} // namespace markedpoly
