#include "markedpoly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "markedpoly/errors.hpp"
#include "markedpoly/io.hpp"
#include "markedpoly/lietheory.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/random_poset.hpp"
#include "markedpoly/transfer.hpp"
#include "markedpoly/verify.hpp"

namespace markedpoly::cli {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Vector I/O uses the unmarked element names in sorted order.
struct Coordinates {
  std::vector<std::string> names;       // sorted
  std::vector<std::size_t> variable;    // sorted position -> variable index

  explicit Coordinates(const MarkedPoset& M) {
    const auto vars = M.variable_names();
    variable.resize(vars.size());
    std::iota(variable.begin(), variable.end(), 0);
    std::sort(variable.begin(), variable.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
    for (std::size_t v : variable) names.push_back(vars[v]);
  }

  std::vector<Rational> to_io(const GridVector& x) const {
    std::vector<Rational> out;
    for (std::size_t v : variable) out.push_back(x.coords[v]);
    return out;
  }

  GridVector from_io(const std::vector<Rational>& io) const {
    if (io.size() != variable.size())
      throw IndexMismatch("expected " + std::to_string(variable.size()) + " coordinates, got " +
                          std::to_string(io.size()));
    std::vector<Rational> coords(io.size());
    for (std::size_t i = 0; i < io.size(); ++i) coords[variable[i]] = io[i];
    return GridVector::from_coords(std::move(coords));
  }

  std::string header() const {
    std::string s = "#";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : " ") + names[i];
    return s;
  }
};

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

PolytopeKind parse_kind(const std::string& s) { return s == "order" ? PolytopeKind::Order : PolytopeKind::Chain; }

void warn_markings(const MarkedPoset& M, std::ostream& err) {
  for (const auto& [lo, hi] : marking_warnings(M))
    err << "warning: marked cover " << M.poset().name(lo) << " < " << M.poset().name(hi)
        << " has decreasing marks " << to_string(M.mark(lo)) << " > " << to_string(M.mark(hi)) << "\n";
}

struct Options {
  bool json = false;
  std::string file;
  std::string polytope = "order";
  std::int64_t grid = 1;
  std::string direction = "forward";
  std::string point;
  std::string family;
  int n = 0;
  std::string weight;
  std::uint64_t seed = 1;
  int iters = 100;
  int max_unmarked = 5;
  int max_mark = 3;
  bool real_marks = false;
};

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkedPoset M = parse_marked_poset(read_file(o.file));
  warn_markings(M, err);
  const Integer c = count_points(M, parse_kind(o.polytope), o.grid);
  if (o.json) {
    out << json{{"schema", 1}, {"command", "count"}, {"polytope", o.polytope}, {"grid", o.grid},
                {"count", integer_json(c)}}.dump()
        << "\n";
  } else {
    out << to_string(c) << "\n";
  }
  return kSuccess;
}

int cmd_ehrhart(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkedPoset M = parse_marked_poset(read_file(o.file));
  warn_markings(M, err);
  const EhrhartPolynomial E = ehrhart(M, parse_kind(o.polytope));
  if (o.json) {
    out << json{{"schema", 1}, {"command", "ehrhart"}, {"polytope", o.polytope},
                {"coefficients", rationals_json(E.coefficients)}, {"polynomial", E.to_string()}}.dump()
        << "\n";
  } else {
    out << "polynomial: " << E.to_string() << "\n";
    out << "coefficients:";
    for (const auto& c : E.coefficients) out << " " << to_string(c);
    out << "\n";
  }
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkedPoset M = parse_marked_poset(read_file(o.file));
  warn_markings(M, err);
  const Coordinates coords(M);
  std::vector<std::vector<Rational>> points;
  for (const auto& x : enumerate_points(M, parse_kind(o.polytope), o.grid)) points.push_back(coords.to_io(x));
  std::sort(points.begin(), points.end());
  if (o.json) {
    json pts = json::array();
    for (const auto& p : points) pts.push_back(rationals_json(p));
    out << json{{"schema", 1}, {"command", "enumerate"}, {"polytope", o.polytope}, {"grid", o.grid},
                {"variables", coords.names}, {"points", pts}}.dump()
        << "\n";
  } else {
    out << coords.header() << "\n";
    for (const auto& p : points) out << join(p) << "\n";
  }
  return kSuccess;
}

int cmd_transfer(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkedPoset M = parse_marked_poset(read_file(o.file));
  warn_markings(M, err);
  const Coordinates coords(M);
  const GridVector input = coords.from_io(split_rationals(o.point));
  const bool forward = o.direction == "forward";
  const auto source = forward ? order_hrep(M) : chain_hrep(M);
  if (!contains(source, input))
    err << "warning: point is not in the " << (forward ? "order" : "chain") << " polytope\n";
  const GridVector image = forward ? phi_tilde(M, input) : psi_tilde(M, input);
  const auto result = coords.to_io(image);
  if (o.json) {
    out << json{{"schema", 1}, {"command", "transfer"}, {"direction", o.direction},
                {"variables", coords.names}, {"input", rationals_json(coords.to_io(input))},
                {"output", rationals_json(result)}}.dump()
        << "\n";
  } else {
    out << coords.header() << "\n" << join(result) << "\n";
  }
  return kSuccess;
}

int report_checks(const std::string& command, const std::vector<CheckResult>& checks, bool as_json,
                  std::ostream& out, json extra = json::object()) {
  const bool passed = std::none_of(checks.begin(), checks.end(),
                                   [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
  if (as_json) {
    json doc{{"schema", 1}, {"command", command}};
    for (auto& [k, v] : extra.items()) doc[k] = v;
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    doc["checks"] = arr;
    doc["passed"] = passed;
    out << doc.dump() << "\n";
  } else {
    for (const auto& c : checks) out << to_string(c.status) << " " << c.name << " (" << c.detail << ")\n";
  }
  return passed ? kSuccess : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkedPoset M = parse_marked_poset(read_file(o.file));
  warn_markings(M, err);
  return report_checks("verify", verify_marked_poset(M, o.grid), o.json, out, json{{"grid", o.grid}});
}

int cmd_lie(const Options& o, std::ostream& out, std::ostream&) {
  const auto entries = split_rationals(o.weight);
  if (static_cast<int>(entries.size()) != o.n)
    throw std::invalid_argument("--n " + std::to_string(o.n) + " does not match " +
                                std::to_string(entries.size()) + " weight entries");
  const LieType type = o.family == "so" ? LieType::B : o.family == "sp" ? LieType::C : LieType::A;
  const Weight w = make_weight(type, entries);
  const Integer dim = weyl_dim(w);

  json doc{{"schema", 1}, {"command", "lie"}, {"family", o.family}, {"n", o.n}, {"weight", rationals_json(entries)}};
  std::ostringstream text;
  bool match = false;
  if (o.family == "gt") {
    const MarkedPoset M = gt_poset(w);
    const Integer c = count_points(M, PolytopeKind::Order, 1);
    match = c == dim;
    text << serialize_marked_poset(M) << "count: " << to_string(c) << "\n";
    doc["poset"] = serialize_marked_poset(M);
    doc["count"] = integer_json(c);
  } else if (o.family == "ffl") {
    const auto H = ffl_hrep(w);
    const MarkedPoset M = gt_poset(w);
    const bool same = H.normalized() == chain_hrep(M).normalized();
    const Integer c = count_points(M, PolytopeKind::Chain, 1);
    match = same && c == dim;
    text << H.to_string() << "hrep equals chain polytope of gt poset: " << (same ? "yes" : "no") << "\n"
         << "count: " << to_string(c) << "\n";
    doc["hrep"] = H.to_string();
    doc["hrep_matches_gt_chain"] = same;
    doc["count"] = integer_json(c);
  } else if (o.family == "sp") {
    const MarkedPoset M = sp_poset(w);
    const Integer patterns = count_points(M, PolytopeKind::Order, 1);
    const Integer chain = count_points(M, PolytopeKind::Chain, 1);
    match = patterns == dim && chain == dim;
    text << serialize_marked_poset(M) << "count: " << to_string(patterns) << "\n"
         << "chain count: " << to_string(chain) << "\n";
    doc["poset"] = serialize_marked_poset(M);
    doc["count"] = integer_json(patterns);
    doc["chain_count"] = integer_json(chain);
  } else {
    const MarkedPoset M = bz_poset(w);
    const auto R = o_patterns(w);
    const auto S = s_lambda(w);
    match = R.size() == dim && S.size() == R.size();
    text << serialize_marked_poset(M) << "count: " << R.size() << "\n" << "s-lambda count: " << S.size() << "\n";
    doc["poset"] = serialize_marked_poset(M);
    doc["count"] = R.size();
    doc["s_lambda_count"] = S.size();
  }
  if (o.json) {
    doc["weyl"] = integer_json(dim);
    doc["match"] = match;
    out << doc.dump() << "\n";
  } else {
    out << text.str() << "weyl: " << to_string(dim) << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? kSuccess : kCheckFailed;
}

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream&) {
  Rng rng(o.seed);
  RandomPosetOptions opts;
  opts.max_unmarked = o.max_unmarked;
  opts.max_mark = o.max_mark;
  opts.real_marks = o.real_marks;

  json doc{{"schema", 1}, {"command", "fuzz"}, {"seed", o.seed}, {"iters", o.iters}, {"real_marks", o.real_marks}};
  int checked = 0;
  if (o.real_marks) {
    for (int i = 0; i < o.iters; ++i) {
      const MarkedPoset M = random_marked_poset(rng, opts);
      ++checked;
      const Integer order = count_points(M, PolytopeKind::Order, 1);
      const Integer chain = count_points(M, PolytopeKind::Chain, 1);
      if (order == chain) continue;
      const std::string file = serialize_marked_poset(M);
      if (o.json) {
        doc["checked"] = checked;
        doc["witness"] = {{"iteration", i}, {"poset", file}, {"order_count", integer_json(order)},
                          {"chain_count", integer_json(chain)}};
        out << doc.dump() << "\n";
      } else {
        out << "witness after " << checked << " posets: order count " << to_string(order) << " != chain count "
            << to_string(chain) << "\n"
            << file;
      }
      return kSuccess;
    }
    if (o.json) {
      doc["checked"] = checked;
      doc["witness"] = nullptr;
      out << doc.dump() << "\n";
    } else {
      out << "no witness in " << checked << " posets\n";
    }
    return kCheckFailed;
  }

  for (int i = 0; i < o.iters; ++i) {
    const MarkedPoset M = random_marked_poset(rng, opts);
    ++checked;
    for (std::int64_t m = 1; m <= 3; ++m) {
      for (const auto& check : {check_count_equality(M, m), check_bijection(M, m)}) {
        if (check.status != CheckStatus::Fail) continue;
        const std::string file = serialize_marked_poset(M);
        if (o.json) {
          doc["checked"] = checked;
          doc["failure"] = {{"iteration", i}, {"check", check.name}, {"detail", check.detail}, {"poset", file}};
          out << doc.dump() << "\n";
        } else {
          out << "FAIL " << check.name << " (" << check.detail << ") at iteration " << i << "\n" << file;
        }
        return kCheckFailed;
      }
    }
  }
  if (o.json) {
    doc["checked"] = checked;
    doc["failure"] = nullptr;
    out << doc.dump() << "\n";
  } else {
    out << "PASS " << checked << " random marked posets, grids 1/1, 1/2, 1/3\n";
  }
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Marked order and chain polytopes: lattice points, Ehrhart polynomials, transfer maps",
               "markedpoly"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine readable JSON output");

  const std::vector<std::string> kinds{"order", "chain"};
  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "Marked poset file ('-' for stdin)")->required(); };
  auto add_polytope = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--polytope", o.polytope, "order or chain")->check(CLI::IsMember(kinds));
    if (required) opt->required();
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "Count points of the (1/M)-grid")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Number of grid points");
  add_file(count);
  add_polytope(count, true);
  add_grid(count);

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial coefficients");
  add_file(ehr);
  add_polytope(ehr, true);

  auto* enumerate = app.add_subcommand("enumerate", "List grid points, one per line");
  add_file(enumerate);
  add_polytope(enumerate, true);
  add_grid(enumerate);

  auto* transfer = app.add_subcommand("transfer", "Apply the transfer map (forward) or its inverse (back)");
  add_file(transfer);
  transfer->add_option("--direction", o.direction, "forward or back")
      ->check(CLI::IsMember(std::vector<std::string>{"forward", "back"}));
  transfer->add_option("--point", o.point, "Comma separated coordinates")->required();

  auto* verify = app.add_subcommand("verify", "Check the order/chain correspondence on a file");
  add_file(verify);
  add_grid(verify);

  auto* lie = app.add_subcommand("lie", "Gelfand-Tsetlin, FFL and Berenstein-Zelevinsky instances");
  lie->add_option("FAMILY", o.family, "gt, ffl, sp or so")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"gt", "ffl", "sp", "so"}));
  lie->add_option("--n", o.n, "Rank")->required()->check(CLI::PositiveNumber);
  lie->add_option("--weight", o.weight, "Comma separated weight entries")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Random marked posets");
  fuzz->add_option("--seed", o.seed, "PRNG seed");
  fuzz->add_option("--iters", o.iters, "Number of posets")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-unmarked", o.max_unmarked, "Maximum number of unmarked elements")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-mark", o.max_mark, "Marks are drawn from [-B, B]")->check(CLI::NonNegativeNumber);
  fuzz->add_flag("--real-marks", o.real_marks, "Rational marks; search for count discrepancies");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (count->parsed()) return cmd_count(o, out, err);
    if (ehr->parsed()) return cmd_ehrhart(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (transfer->parsed()) return cmd_transfer(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (lie->parsed()) return cmd_lie(o, out, err);
    if (fuzz->parsed()) return cmd_fuzz(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

} // namespace markedpoly::cli
