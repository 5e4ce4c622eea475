#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bbsuper/charformula.hpp"
#include "bbsuper/error.hpp"
#include "bbsuper/io.hpp"
#include "bbsuper/roots.hpp"
#include "bbsuper/verma_oracle.hpp"

namespace py = pybind11;
using namespace bbsuper;
using io::json;

namespace {

// Documents cross the boundary as JSON text; big integers stay decimal strings.
OddCartanDatum datum_of(const std::string& text) { return io::datum_from_json(json::parse(text)); }

std::string validate(const std::string& datum) { return io::datum_to_json(datum_of(datum)).dump(); }

std::string roots(const std::string& datum, int H, unsigned jobs) {
  return io::root_table_to_json(solve_multiplicities(datum_of(datum), H, jobs)).dump();
}

std::string denom_check(const std::string& datum, int H) {
  const auto d = datum_of(datum);
  const auto table = solve_multiplicities(d, H);
  const auto residual = denominator_residual(d, table, H);
  return json{{"residual_zero", residual.terms().empty()}, {"roots", io::root_table_to_json(table)}}.dump();
}

std::string character(const std::string& datum, const std::string& lambda, int H, unsigned jobs) {
  const auto d = datum_of(datum);
  const auto w = io::weight_from_json(json::parse(lambda), d.rank());
  return io::character_to_json(irreducible_character(d, solve_multiplicities(d, H), w, H, jobs)).dump();
}

std::string oracle(const std::string& datum, const std::string& lambda, int H, bool symbolic,
                   unsigned jobs) {
  const auto d = datum_of(datum);
  const auto caps = OracleCaps::from_env();
  if (symbolic) return io::oracle_rows_to_json(symbolic_oracle_table(d, H, caps, jobs)).dump();
  const auto w = io::weight_from_json(json::parse(lambda), d.rank());
  return io::oracle_rows_to_json(oracle_table(d, w, H, caps, jobs)).dump();
}

std::vector<std::string> decimal(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_bbsuper, m) {
  m.doc() = "Native core of the bbsuper package";

  // Messages read "<Kind>: <detail>"; the Python layer splits off the kind.
  py::register_exception<Error>(m, "BBSuperError", PyExc_ValueError);

  m.def("validate", &validate, py::arg("datum"));
  m.def("roots", &roots, py::arg("datum"), py::arg("height"), py::arg("jobs") = 1);
  m.def("denom_check", &denom_check, py::arg("datum"), py::arg("height"));
  m.def("character", &character, py::arg("datum"), py::arg("weight"), py::arg("height"),
        py::arg("jobs") = 1);
  m.def("oracle", &oracle, py::arg("datum"), py::arg("weight"), py::arg("height"),
        py::arg("symbolic") = false, py::arg("jobs") = 1);
  m.def("euler_phi", [](int N) { return decimal(euler_phi(N)); }, py::arg("n"));
  m.def("odd_iso_coeffs", [](int N) { return decimal(odd_iso_coeffs(N)); }, py::arg("n"));
}
