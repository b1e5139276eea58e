#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "markedpoly/cli.hpp"
#include "markedpoly/errors.hpp"
#include "markedpoly/io.hpp"
#include "markedpoly/lietheory.hpp"
#include "markedpoly/polytope.hpp"
#include "markedpoly/transfer.hpp"
#include "markedpoly/verify.hpp"

namespace py = pybind11;
using namespace markedpoly;

// Rationals cross the boundary as strings "n" or "n/d"; the Python layer
// turns them into fractions.Fraction.
namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

PolytopeKind kind(const std::string& name) {
  if (name == "order") return PolytopeKind::Order;
  if (name == "chain") return PolytopeKind::Chain;
  throw py::value_error("polytope must be 'order' or 'chain'");
}

LieType lie_type(const std::string& name) {
  if (name == "A") return LieType::A;
  if (name == "B") return LieType::B;
  if (name == "C") return LieType::C;
  throw py::value_error("type must be 'A', 'B' or 'C'");
}

py::dict system(const LinearInequalitySystem& H) {
  py::list rows;
  for (const auto& r : H.rows) rows.append(py::make_tuple(strings(r.coefficients), to_string(r.bound)));
  py::dict d;
  d["variables"] = H.variables;
  d["rows"] = rows;
  d["nonnegative"] = H.nonnegative;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Marked order and chain polytopes in exact arithmetic";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<MarkedPoset>(m, "MarkedPoset")
      .def_property_readonly("dimension", &MarkedPoset::dimension)
      .def_property_readonly("variables", &MarkedPoset::variable_names)
      .def_property_readonly("elements", [](const MarkedPoset& M) { return M.poset().names(); })
      .def("serialize", &serialize_marked_poset)
      .def("__eq__", [](const MarkedPoset& a, const MarkedPoset& b) { return a == b; })
      .def("__repr__", [](const MarkedPoset& M) {
        return "<MarkedPoset with " + std::to_string(M.poset().size()) + " elements, dimension " +
               std::to_string(M.dimension()) + ">";
      });

  m.def("parse", [](const std::string& text) { return parse_marked_poset(text); }, py::arg("text"));
  m.def("order_hrep", [](const MarkedPoset& M) { return system(order_hrep(M)); });
  m.def("chain_hrep", [](const MarkedPoset& M) { return system(chain_hrep(M)); });
  m.def(
      "count", [](const MarkedPoset& M, const std::string& k, std::int64_t grid) {
        return to_string(count_points(M, kind(k), grid));
      },
      py::arg("poset"), py::arg("polytope"), py::arg("grid") = 1);
  m.def(
      "enumerate", [](const MarkedPoset& M, const std::string& k, std::int64_t grid) {
        std::vector<std::vector<std::string>> out;
        for (const auto& x : enumerate_points(M, kind(k), grid)) out.push_back(strings(x.coords));
        return out;
      },
      py::arg("poset"), py::arg("polytope"), py::arg("grid") = 1);
  m.def("ehrhart", [](const MarkedPoset& M, const std::string& k) { return strings(ehrhart(M, kind(k)).coefficients); },
        py::arg("poset"), py::arg("polytope"));
  m.def("phi_tilde", [](const MarkedPoset& M, const std::vector<std::string>& x) {
    return strings(phi_tilde(M, GridVector::from_coords(rationals(x))).coords);
  });
  m.def("psi_tilde", [](const MarkedPoset& M, const std::vector<std::string>& y) {
    return strings(psi_tilde(M, GridVector::from_coords(rationals(y))).coords);
  });
  m.def(
      "verify", [](const MarkedPoset& M, std::int64_t grid) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& c : verify_marked_poset(M, grid)) out.emplace_back(c.name, to_string(c.status), c.detail);
        return out;
      },
      py::arg("poset"), py::arg("grid") = 1);

  m.def("gt_poset", [](const std::vector<std::string>& w) { return gt_poset(make_weight(LieType::A, rationals(w))); });
  m.def("sp_poset", [](const std::vector<std::string>& w) { return sp_poset(make_weight(LieType::C, rationals(w))); });
  m.def("bz_poset", [](const std::string& t, const std::vector<std::string>& w) {
    return bz_poset(make_weight(lie_type(t), rationals(w)));
  });
  m.def("ffl_hrep", [](const std::vector<std::string>& w) { return system(ffl_hrep(make_weight(LieType::A, rationals(w)))); });
  m.def("weyl_dim", [](const std::string& t, const std::vector<std::string>& w) {
    return to_string(weyl_dim(make_weight(lie_type(t), rationals(w))));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
