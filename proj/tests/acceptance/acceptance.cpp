// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "markedpoly/cli.hpp"
#include "markedpoly/errors.hpp"
#include "markedpoly/lietheory.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/random_poset.hpp"
#include "markedpoly/transfer.hpp"
#include "markedpoly/verify.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace markedpoly;

namespace {

constexpr std::uint64_t kFamilySeed = 20240601;
constexpr int kFamilySize = 500;

std::vector<MarkedPoset> family() {
  Rng rng(kFamilySeed);
  RandomPosetOptions opts;
  opts.max_unmarked = 6;
  opts.max_mark = 3;
  std::vector<MarkedPoset> out;
  for (int i = 0; i < kFamilySize; ++i) out.push_back(random_marked_poset(rng, opts));
  return out;
}

// Criterion outcome: ok plus a one-line summary.
struct Outcome {
  bool ok = true;
  std::string summary;

  void fail(const std::string& why) {
    if (ok) summary = why;
    ok = false;
  }
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(' ');
  const auto b = s.find_last_not_of(' ');
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + sep.size())
    out.push_back(trim(s.substr(start, pos - start)));
  out.push_back(trim(s.substr(start)));
  return out;
}

// Reads inequalities written as in the figure caption, e.g.
// "0 <= x_p <= x_q <= 3" or "x_p, x_q >= 0", into a system over `vars`.
LinearInequalitySystem from_caption(const std::vector<std::string>& vars, const std::vector<std::string>& lines) {
  LinearInequalitySystem H;
  H.variables = vars;
  H.nonnegative.assign(vars.size(), false);
  auto column = [&](const std::string& term) {
    const std::string name = term.substr(2);
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
  };
  struct Side {
    std::vector<Rational> coeffs;
    Rational constant;
  };
  auto side = [&](const std::string& text) {
    Side s{std::vector<Rational>(vars.size(), Rational(0)), Rational(0)};
    for (const auto& term : split(text, "+")) {
      if (term.rfind("x_", 0) == 0) s.coeffs[column(term)] += 1;
      else s.constant += parse_rational(term);
    }
    return s;
  };
  for (const auto& line : lines) {
    if (line.find(">= 0") != std::string::npos) {
      for (const auto& term : split(split(line, ">=")[0], ",")) H.nonnegative[column(term)] = true;
      continue;
    }
    const auto parts = split(line, "<=");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      const Side lo = side(parts[i]), hi = side(parts[i + 1]);
      InequalityRow row{std::vector<Rational>(vars.size()), hi.constant - lo.constant};
      for (std::size_t j = 0; j < vars.size(); ++j) row.coefficients[j] = lo.coeffs[j] - hi.coeffs[j];
      H.rows.push_back(std::move(row));
    }
  }
  return H;
}

Outcome criterion1() {
  Outcome o;
  const auto M = testing::fig2();
  const std::vector<std::string> vars{"p", "q", "r"};
  const auto order = from_caption(vars, {"0 <= x_p <= x_q <= x_r <= 3", "1 <= x_q <= 2"});
  const auto chain = from_caption(vars, {"x_p, x_q, x_r >= 0", "x_p + x_q + x_r <= 3", "x_p + x_q <= 2",
                                         "x_q + x_r <= 2", "x_q <= 1"});
  if (!(order_hrep(M).normalized() == order.normalized())) o.fail("order H-rep differs from the caption");
  if (!(chain_hrep(M).normalized() == chain.normalized())) o.fail("chain H-rep differs from the caption");
  const auto box_order = testing::box_filter(M, PolytopeKind::Order, 1).size();
  const auto box_chain = testing::box_filter(M, PolytopeKind::Chain, 1).size();
  const Integer n_order = count_points(M, PolytopeKind::Order, 1), n_chain = count_points(M, PolytopeKind::Chain, 1);
  if (n_order != box_order || n_chain != box_chain) o.fail("counts differ from the box filter");
  if (enumerate_order_points(M, 1).size() != box_order || enumerate_chain_points(M, 1).size() != box_chain)
    o.fail("enumerations differ from the box filter");
  if (o.ok)
    o.summary = "H-reps match the caption; order " + to_string(n_order) + ", chain " + to_string(n_chain) +
                ", box filter " + std::to_string(box_order) + "/" + std::to_string(box_chain);
  return o;
}

Outcome criterion2(const std::vector<MarkedPoset>& F) {
  Outcome o;
  Integer points = 0;
  int nonempty = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    nonempty += count_points(F[i], PolytopeKind::Order, 1) > 0;
    for (std::int64_t m = 1; m <= 3; ++m) {
      const auto count = check_count_equality(F[i], m);
      const auto bij = check_bijection(F[i], m);
      if (count.status != CheckStatus::Pass) o.fail("poset " + std::to_string(i) + ": " + count.detail);
      if (bij.status != CheckStatus::Pass) o.fail("poset " + std::to_string(i) + ": " + bij.detail);
      points += count_points(F[i], PolytopeKind::Order, m);
    }
  }
  if (o.ok)
    o.summary = std::to_string(F.size()) + " posets (" + std::to_string(nonempty) + " nonempty), m = 1..3, " + to_string(points) + " points mapped bijectively";
  return o;
}

Outcome criterion3(const std::vector<MarkedPoset>& F) {
  Outcome o;
  int nonempty = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& M = F[i];
    const auto check = check_ehrhart_equality(M);
    if (check.status != CheckStatus::Pass) {
      o.fail("poset " + std::to_string(i) + ": " + check.detail);
      continue;
    }
    if (count_points(M, PolytopeKind::Order, 1) == 0) continue;
    ++nonempty;
    const long node = static_cast<long>(M.dimension()) + 2;
    const auto D = dilate_marking(M, node);
    for (auto kind : {PolytopeKind::Order, PolytopeKind::Chain}) {
      const auto E = ehrhart(M, kind);
      if (E(Rational(node)) != count_points(D, kind, 1))
        o.fail("poset " + std::to_string(i) + ": " + to_string(kind) + " polynomial misses the extra node");
    }
  }
  if (o.ok)
    o.summary = std::to_string(F.size()) + " posets (" + std::to_string(nonempty) +
                " nonempty), polynomials identical and exact at n = d + 2";
  return o;
}

Outcome criterion4(const std::vector<MarkedPoset>& F) {
  Outcome o;
  Rng rng(kFamilySeed + 4);
  int order_points = 0, chain_points = 0, evaluations = 0;
  for (int round = 0; round < 50 && (order_points < 1000 || chain_points < 1000); ++round) {
    for (std::size_t i = 0; i < F.size(); ++i) {
      const auto& M = F[i];
      const std::int64_t den = rng.uniform(1, 7);
      if (auto x = sample_point(M, PolytopeKind::Order, rng, den)) {
        ++order_points;
        const auto formula = phi_tilde_formula(M, *x), composed = phi_tilde_composed(M, *x);
        ++evaluations;
        if (!(formula == composed)) o.fail("phi~ routes disagree on poset " + std::to_string(i));
        if (!(psi_tilde(M, formula) == *x)) o.fail("psi~ phi~ != id on poset " + std::to_string(i));
      }
      if (auto y = sample_point(M, PolytopeKind::Chain, rng, den)) {
        ++chain_points;
        const auto x = psi_tilde(M, *y);
        const auto formula = phi_tilde_formula(M, x), composed = phi_tilde_composed(M, x);
        ++evaluations;
        if (!(formula == composed)) o.fail("phi~ routes disagree on poset " + std::to_string(i));
        if (!(formula == *y)) o.fail("phi~ psi~ != id on poset " + std::to_string(i));
      }
    }
  }
  if (order_points < 1000 || chain_points < 1000) o.fail("too few sample points");
  if (o.ok)
    o.summary = std::to_string(order_points) + " order and " + std::to_string(chain_points) +
                " chain points round-trip; both phi~ routes agree on " + std::to_string(evaluations) + " evaluations";
  return o;
}

// Weakly decreasing sequences of length n with entries in {0, 1/den, …, top},
// last entry fixed to `last` when given.
std::vector<std::vector<Rational>> dominant(int n, const Rational& top, std::int64_t den, bool last_zero) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur;
  std::function<void(const Rational&)> rec = [&](const Rational& bound) {
    if (static_cast<int>(cur.size()) == n) {
      if (!last_zero || cur.back() == 0) out.push_back(cur);
      return;
    }
    for (Rational v = 0; v <= bound; v += Rational(1, den)) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(top);
  return out;
}

std::string show(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Outcome criterion5() {
  Outcome o;
  int weights = 0;
  std::string example;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& e : dominant(n, 3, 1, true)) {
      const auto w = make_weight(LieType::A, e);
      ++weights;
      const auto M = gt_poset(w);
      const Integer gt = count_points(M, PolytopeKind::Order, 1);
      const auto H = ffl_hrep(w);
      // FFL points by scanning the box [0, λ_1]^roots against the H-rep.
      std::int64_t ffl = 0;
      const std::int64_t hi = to_int64(Integer(e.front()));
      std::vector<Rational> s(H.dimension(), Rational(0));
      std::function<void(std::size_t)> scan = [&](std::size_t i) {
        if (i == s.size()) {
          ffl += contains(H, s);
          return;
        }
        for (std::int64_t v = 0; v <= hi; ++v) {
          s[i] = v;
          scan(i + 1);
        }
      };
      scan(0);
      const Integer dim = weyl_dim(w);
      if (gt != dim || ffl != dim) o.fail(show(e) + ": gt " + to_string(gt) + ", ffl " + std::to_string(ffl) + ", weyl " + to_string(dim));
      if (!(H.normalized() == chain_hrep(M).normalized())) o.fail(show(e) + ": FFL H-rep differs from chain H-rep");
      if (n == 3 && e == std::vector<Rational>{2, 1, 0})
        example = "(2,1,0): gt " + to_string(gt) + ", ffl " + std::to_string(ffl) + ", weyl " + to_string(dim);
    }
  }
  if (o.ok) o.summary = std::to_string(weights) + " weights agree; " + example;
  return o;
}

Outcome criterion6() {
  Outcome o;
  int weights = 0;
  for (const auto& e : dominant(2, 2, 1, false)) {
    const auto w = make_weight(LieType::C, e);
    ++weights;
    const auto M = sp_poset(w);
    const Integer patterns = count_points(M, PolytopeKind::Order, 1);
    const Integer chain = count_points(M, PolytopeKind::Chain, 1);
    const Integer board = testing::bz_board_count(e, 1, false);
    const Integer dim = weyl_dim(w);
    if (patterns != dim || chain != dim || board != dim)
      o.fail(show(e) + ": patterns " + to_string(patterns) + ", chain " + to_string(chain) + ", board " +
             to_string(board) + ", weyl " + to_string(dim));
  }
  if (o.ok) o.summary = std::to_string(weights) + " weights: patterns = chain points = Weyl dimension";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int weights = 0;
  std::size_t total = 0;
  for (const auto& e : dominant(2, Rational(3, 2), 2, false)) {
    // Type B weights are all integral or all half-odd.
    if (e[0].get_den() != e[1].get_den()) continue;
    const auto w = make_weight(LieType::B, e);
    ++weights;
    const auto R = o_patterns(w);
    const auto image = s_lambda_image(w);
    const auto direct = s_lambda_direct(w);
    const Integer dim = weyl_dim(w);
    const auto board = testing::bz_board_count(e, 2, true);
    if (R.size() != dim || board != dim) o.fail(show(e) + ": |R| " + std::to_string(R.size()) + ", weyl " + to_string(dim));
    if (image.size() != R.size()) o.fail(show(e) + ": |S| != |R|");
    if (image != direct) o.fail(show(e) + ": phi~ image differs from the grid characterization");
    total += R.size();
  }
  if (o.ok)
    o.summary = std::to_string(weights) + " weights, " + std::to_string(total) +
                " patterns: |R| = |S| = Weyl dimension, both S descriptions equal";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto M = testing::segment("1/2", "3/2");
  const Integer order = count_points(M, PolytopeKind::Order, 1), chain = count_points(M, PolytopeKind::Chain, 1);
  const auto box_order = testing::box_filter(M, PolytopeKind::Order, 1).size();
  const auto box_chain = testing::box_filter(M, PolytopeKind::Chain, 1).size();
  // By hand: [1/2, 3/2] contains only 1, [0, 1] contains 0 and 1.
  if (order != 1 || chain != 2 || order != box_order || chain != box_chain)
    o.fail("segment counts order " + to_string(order) + ", chain " + to_string(chain));

  std::ostringstream out, err;
  const int code = cli::run({"fuzz", "--seed", "1", "--iters", "1000", "--real-marks"}, out, err);
  if (code != cli::kSuccess || out.str().rfind("witness", 0) != 0) o.fail("fuzz found no witness: " + out.str());
  if (o.ok) {
    const std::string line = out.str().substr(0, out.str().find('\n'));
    o.summary = "segment: order 1, chain 2; fuzz --seed 1: " + line;
  }
  return o;
}

Outcome criterion9(const std::vector<MarkedPoset>& F) {
  Outcome o;
  int posets = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& M = F[i];
    if (M.dimension() > 4) continue;
    ++posets;
    for (std::int64_t m = 1; m <= 2; ++m)
      for (auto kind : {PolytopeKind::Order, PolytopeKind::Chain})
        if (enumerate_points(M, kind, m) != testing::box_filter(M, kind, m))
          o.fail("poset " + std::to_string(i) + ", " + to_string(kind) + ", m = " + std::to_string(m));
  }
  if (o.ok) o.summary = std::to_string(posets) + " posets with <= 4 unmarked elements, m = 1, 2, point-for-point";
  return o;
}

} // namespace

int main() {
  const auto F = family();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"running example H-reps and counts", criterion1},
      {"grid counts and transfer bijection", [&] { return criterion2(F); }},
      {"Ehrhart polynomials", [&] { return criterion3(F); }},
      {"transfer round-trip on rational points", [&] { return criterion4(F); }},
      {"type A: GT = FFL = Weyl", criterion5},
      {"type C: sp patterns = Weyl", criterion6},
      {"type B: R(lambda), S(lambda), Weyl", criterion7},
      {"integrality is necessary", criterion8},
      {"enumeration = box filter", [&] { return criterion9(F); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.summary << " [" << std::fixed << std::setprecision(2) << secs << "s]\n";
  }
  return all ? 0 : 1;
}
