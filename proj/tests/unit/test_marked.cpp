#include <doctest.h>

#include <functional>

#include "markedpoly/errors.hpp"
#include "markedpoly/marked.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/random_poset.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace markedpoly;
using markedpoly::testing::fig2;

namespace {

std::vector<std::string> names(const MarkedPoset& M, const MarkedChain& c) {
  std::vector<std::string> out{M.poset().name(c.lower_mark)};
  for (ElementId p : c.interior) out.push_back(M.poset().name(p));
  out.push_back(M.poset().name(c.upper_mark));
  return out;
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  Rational q(static_cast<long>(rng.uniform(lo * den, hi * den)), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

} // namespace

TEST_CASE("new_marked_poset") {
  const auto M = fig2();
  CHECK(M.dimension() == 3);
  CHECK(M.variable_names() == std::vector<std::string>{"p", "q", "r"});
  CHECK(M.mark(M.poset().index("m3")) == 3);
  CHECK(M.has_integral_marking());

  auto chain = Poset::validate({"p", "q"}, {{"p", "q"}});
  CHECK_THROWS_AS(new_marked_poset(chain, {"p"}, {{"p", Rational(0)}}), ExtremalNotMarked);
  CHECK_THROWS_AS(new_marked_poset(chain, {"p", "q"}, {{"p", Rational(0)}}), MarkingDomainMismatch);
  CHECK_THROWS_AS(new_marked_poset(chain, {"p", "q"}, {{"p", Rational(0)}, {"q", Rational(1)}, {"z", Rational(1)}}),
                  MarkingDomainMismatch);

  // Order-incompatible marks are accepted.
  auto seg = Poset::validate({"a", "p", "b"}, {{"a", "p"}, {"p", "b"}});
  auto M2 = new_marked_poset(seg, {"a", "b"}, {{"a", Rational(1)}, {"b", Rational(0)}});
  CHECK(M2.dimension() == 1);
}

TEST_CASE("stanley_embed") {
  auto single = stanley_embed(Poset::validate({"p"}, {}));
  CHECK(single.poset().size() == 3);
  CHECK(single.dimension() == 1);
  CHECK(single.poset().less_than("hat0", "p"));
  CHECK(single.poset().less_than("p", "hat1"));
  CHECK(enumerate_order_points(single, 1).size() == 2);

  auto anti = stanley_embed(Poset::validate({"p", "q"}, {}));
  CHECK(enumerate_order_points(anti, 1).size() == 4);

  // Three points of {0 <= x_p <= x_q <= 1}.
  auto two = stanley_embed(Poset::validate({"p", "q"}, {{"p", "q"}}));
  CHECK(enumerate_order_points(two, 1).size() == 3);

  // Names that clash with P are primed.
  auto clash = stanley_embed(Poset::validate({"hat0"}, {}));
  CHECK(clash.poset().contains("hat0'"));
}

TEST_CASE("dilate_marking") {
  const auto M = fig2();
  CHECK(dilate_marking(M, 1) == M);
  const auto M2 = dilate_marking(M, 2);
  CHECK(M2.mark(M2.poset().index("m3")) == 6);
  CHECK(M2.mark(M2.poset().index("m2")) == 4);
  CHECK(M2.mark(M2.poset().index("m1")) == 2);
  CHECK(M2.mark(M2.poset().index("m0")) == 0);

  auto two = stanley_embed(Poset::validate({"p", "q"}, {{"p", "q"}}));
  CHECK(count_points(dilate_marking(two, 2), PolytopeKind::Order, 1) == 6);
}

TEST_CASE("marked_chains") {
  const auto M = fig2();
  std::set<std::vector<std::string>> got;
  for (const auto& c : marked_chains(M)) got.insert(names(M, c));
  const std::set<std::vector<std::string>> expected{
      {"m0", "p", "q", "r", "m3"}, {"m0", "p", "q", "m2"}, {"m1", "q", "r", "m3"}, {"m1", "q", "m2"}};
  CHECK(got == expected);

  auto all = Poset::validate({"a", "b"}, {{"a", "b"}});
  CHECK(marked_chains(new_marked_poset(all, {"a", "b"}, {{"a", Rational(0)}, {"b", Rational(1)}})).empty());

  const auto seg = testing::segment("0", "1");
  const auto chains = marked_chains(seg);
  REQUIRE(chains.size() == 1);
  CHECK(names(seg, chains[0]) == std::vector<std::string>{"a", "p", "b"});
}

TEST_CASE("marking warnings flag decreasing marked covers") {
  auto P = Poset::validate({"a", "b", "p", "c"}, {{"a", "b"}, {"b", "p"}, {"p", "c"}});
  auto M = new_marked_poset(P, {"a", "b", "c"}, {{"a", Rational(5)}, {"b", Rational(0)}, {"c", Rational(10)}});
  const auto w = marking_warnings(M);
  REQUIRE(w.size() == 1);
  CHECK(M.poset().name(w[0].first) == "a");
  CHECK(marking_warnings(fig2()).empty());
}

TEST_CASE("saturated chains generate every chain inequality for monotone marks") {
  Rng rng(11);
  RandomPosetOptions opts;
  opts.max_unmarked = 4;
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto R = random_marked_poset(rng, opts);
    const Poset& P = R.poset();
    // Re-mark with 2·height + {0,1}: strictly increasing along the order.
    std::set<std::string> marked;
    std::map<std::string, Rational> marking;
    for (ElementId a : R.marked_elements()) {
      marked.insert(P.name(a));
      marking[P.name(a)] = Rational(static_cast<long>(2 * P.height(a) + rng.uniform(0, 1)));
    }
    const auto M = new_marked_poset(P, marked, marking);

    // Every chain a < p_1 < … < p_k < b with unmarked p_i, saturated or not.
    LinearInequalitySystem all;
    all.variables = M.variable_names();
    all.nonnegative.assign(M.dimension(), true);
    std::vector<ElementId> interior;
    std::function<void(ElementId, ElementId)> grow = [&](ElementId a, ElementId last) {
      for (ElementId q = 0; q < P.size(); ++q) {
        if (!P.less_than(last, q)) continue;
        if (M.is_marked(q)) {
          if (interior.empty()) continue;
          InequalityRow row{std::vector<Rational>(M.dimension(), Rational(0)), M.mark(q) - M.mark(a)};
          for (ElementId p : interior) row.coefficients[M.variable(p)] = 1;
          all.rows.push_back(row);
        } else {
          interior.push_back(q);
          grow(a, q);
          interior.pop_back();
        }
      }
    };
    for (ElementId a : M.marked_elements()) grow(a, a);

    const auto saturated = chain_hrep(M);
    for (int k = 0; k < 30; ++k) {
      std::vector<Rational> x(M.dimension());
      for (auto& c : x) c = random_rational(rng, 0, 4, rng.uniform(1, 3));
      CHECK(contains(saturated, x) == contains(all, x));
    }
    ++compared;
  }
  CHECK(compared == 120);
}

TEST_CASE("stanley_embed reproduces the order and chain polytopes of P") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    std::vector<std::string> el;
    for (int i = 0; i < n; ++i) el.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(1, 2)) rel.emplace_back(el[i], el[j]);
    const auto P = Poset::validate(el, rel);
    const auto M = stanley_embed(P);
    const auto O = order_hrep(M), C = chain_hrep(M);

    // Stanley's definitions on [0,1]^P, with chains enumerated as subsets.
    auto in_order = [&](const std::vector<Rational>& x) {
      for (ElementId p = 0; p < P.size(); ++p) {
        if (x[p] < 0 || x[p] > 1) return false;
        for (ElementId q = 0; q < P.size(); ++q)
          if (P.less_than(p, q) && x[p] > x[q]) return false;
      }
      return true;
    };
    auto in_chain = [&](const std::vector<Rational>& x) {
      for (ElementId p = 0; p < P.size(); ++p)
        if (x[p] < 0 || x[p] > 1) return false;
      for (unsigned mask = 1; mask < (1u << P.size()); ++mask) {
        bool chain = true;
        Rational sum = 0;
        for (ElementId p = 0; p < P.size(); ++p) {
          if (!(mask >> p & 1)) continue;
          sum += x[p];
          for (ElementId q = 0; q < P.size(); ++q)
            if ((mask >> q & 1) && q != p && !P.comparable(p, q)) chain = false;
        }
        if (chain && sum > 1) return false;
      }
      return true;
    };
    for (int k = 0; k < 40; ++k) {
      std::vector<Rational> x(P.size());
      for (auto& c : x) c = random_rational(rng, -1, 2, 4);
      // Variables of M are P's elements in the same order.
      CHECK(contains(O, x) == in_order(x));
      CHECK(contains(C, x) == in_chain(x));
    }
  }
}

TEST_CASE("dilating the marking dilates the polytopes") {
  Rng rng(3);
  RandomPosetOptions opts;
  opts.max_unmarked = 4;
  for (int trial = 0; trial < 60; ++trial) {
    const auto M = random_marked_poset(rng, opts);
    const long n = static_cast<long>(rng.uniform(2, 4));
    const auto D = dilate_marking(M, n);
    for (auto kind : {PolytopeKind::Order, PolytopeKind::Chain}) {
      const auto H = hrep(M, kind), HD = hrep(D, kind);
      for (int k = 0; k < 20; ++k) {
        std::vector<Rational> x(M.dimension()), nx(M.dimension());
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = random_rational(rng, -3, 3, 2);
          nx[i] = x[i] * n;
        }
        CHECK(contains(H, x) == contains(HD, nx));
      }
    }
  }
}
