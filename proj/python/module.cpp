#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/eo.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quasipoly.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/xibasis.hpp"

namespace py = pybind11;
using namespace hurwitz;

// Exact values cross the boundary as "p/q" strings and structured results as
// JSON text; the Python side turns them into Fractions and dicts.

namespace {

EOConfig eo_config(int quad_points, double radius_factor, const std::string& method) {
  EOConfig c;
  c.quad_points = quad_points;
  c.radius_factor = radius_factor;
  if (method == "nested")
    c.method = EOMethod::Nested;
  else if (method != "principal")
    fail(ErrorKind::InvalidInput, "method must be 'principal' or 'nested'");
  return c;
}

std::string report(const VerificationReport& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbifold Hurwitz numbers and the Eynard-Orantin recursion on x = z exp(-z^a)";
  py::register_exception<Error>(m, "HurwitzError", PyExc_ValueError);

  m.def(
      "hurwitz_normalized",
      [](int a, int g, std::vector<int> mu) { return to_string(hurwitz_normalized(a, g, MuTuple(std::move(mu)))); },
      py::arg("a"), py::arg("g"), py::arg("mu"));
  m.def(
      "hurwitz_raw", [](int a, int g, std::vector<int> mu) { return to_string(hurwitz_raw(a, g, MuTuple(std::move(mu)))); },
      py::arg("a"), py::arg("g"), py::arg("mu"));
  m.def(
      "count_connected_covers",
      [](int a, int g, std::vector<int> mu) { return to_string(count_connected_covers(a, g, MuTuple(std::move(mu)))); },
      py::arg("a"), py::arg("g"), py::arg("mu"));

  m.def(
      "fit_F", [](int a, int g, int n) { return fit_F(a, g, n).to_json().dump(); }, py::arg("a"), py::arg("g"),
      py::arg("n"));
  m.def(
      "extract_Q", [](int a, int g, int n) { return extract_Q(a, g, n).to_json().dump(); }, py::arg("a"),
      py::arg("g"), py::arg("n"));
  m.def(
      "check_string", [](int a, int g, int n) { return report(check_string(a, g, n)); }, py::arg("a"), py::arg("g"),
      py::arg("n"));
  m.def(
      "check_dilaton", [](int a, int g, int n) { return report(check_dilaton(a, g, n)); }, py::arg("a"),
      py::arg("g"), py::arg("n"));

  m.def("branch_points", [](int a) { return branch_points(a).branch_points; }, py::arg("a"));
  m.def(
      "omega_eval",
      [](int a, int g, const std::vector<ComplexPoint>& zs, int quad_points, double radius_factor,
         const std::string& method) {
        const EOConfig cfg = eo_config(quad_points, radius_factor, method);
        py::gil_scoped_release release;
        return omega_eval(branch_points(a), g, static_cast<int>(zs.size()), zs, cfg);
      },
      py::arg("a"), py::arg("g"), py::arg("zs"), py::arg("quad_points") = 64, py::arg("radius_factor") = 0.25,
      py::arg("method") = "principal");
  m.def(
      "omega_exact",
      [](int a, int g, const std::vector<ComplexPoint>& zs) {
        return ExactOmega(fit_F(a, g, static_cast<int>(zs.size())))(zs);
      },
      py::arg("a"), py::arg("g"), py::arg("zs"));
  m.def(
      "verify_theorem1",
      [](int a, int g, int n, int samples, double tol, std::uint64_t seed) {
        py::gil_scoped_release release;
        return report(verify_theorem1(a, g, n, samples, tol, seed));
      },
      py::arg("a"), py::arg("g"), py::arg("n"), py::arg("samples") = 5, py::arg("tol") = 1e-6, py::arg("seed") = 7);
  m.def(
      "residue_identity",
      [](int a, const std::string& kind, int r, int k) {
        ResidueKind rk;
        if (kind == "string_y")
          rk = ResidueKind::StringY;
        else if (kind == "dilaton_phi")
          rk = ResidueKind::DilatonPhi;
        else
          fail(ErrorKind::InvalidInput, "kind must be 'string_y' or 'dilaton_phi'");
        return residue_identity(branch_points(a), rk, r, k);
      },
      py::arg("a"), py::arg("kind"), py::arg("r"), py::arg("k"));
}
