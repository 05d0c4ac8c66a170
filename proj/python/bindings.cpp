#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reflective/classpoly.hpp"
#include "reflective/detvar.hpp"
#include "reflective/errors.hpp"
#include "reflective/grassmann.hpp"
#include "reflective/quadric.hpp"
#include "reflective/report.hpp"

namespace py = pybind11;
using namespace reflective;

namespace {

// Python ints cross the boundary as decimal strings so nothing is truncated.
Integer to_integer(const py::int_& x) { return Integer(py::str(py::handle(x)).cast<std::string>()); }

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

py::list to_py(const ClassPoly& f) {
  py::list out;
  for (const Integer& c : f.coeffs()) out.append(to_py(c));
  return out;
}

ClassPoly to_class(const std::vector<py::int_>& coeffs, std::size_t modulus) {
  std::vector<Integer> c;
  for (const auto& x : coeffs) c.push_back(to_integer(x));
  return ClassPoly(std::move(c), modulus);
}

std::vector<ChowInt> factors(const RingPtr& ring, const std::vector<std::vector<int>>& parts) {
  std::vector<ChowInt> out;
  for (const auto& p : parts) {
    const Partition lambda(p);
    if (!lambda.fits(ring->rows(), ring->cols())) throw invalid_input(lambda.to_string() + " does not fit the box");
    out.push_back(ChowInt::schubert(ring, lambda));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Euler obstructions and Chern-Mather classes via the projective duality involution";

  static py::exception<Error> error(m, "ReflectiveError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), kind, py::str(e.subsystem())).ptr());
    }
  });

  m.def(
      "involute",
      [](const std::vector<py::int_>& coeffs, long d) {
        if (d < 1) throw invalid_input("d must be at least 1");
        if (coeffs.size() > static_cast<std::size_t>(d + 1)) throw invalid_input("polynomial degree exceeds d");
        return to_py(involute(to_class(coeffs, static_cast<std::size_t>(d + 1)), d));
      },
      py::arg("coeffs"), py::arg("d"), "I_d(f) for f given by ascending coefficients.");

  m.def(
      "chern_B", [](long n, std::size_t N) { return to_py(chern_B(n, N)); }, py::arg("n"), py::arg("N"));

  m.def(
      "solve_json", [](const std::string& text) { return solve_report(stratification_from_json(json::parse(text))).dump(); },
      py::arg("stratification"), "Euler table report (JSON text) for a stratification (JSON text).");

  m.def(
      "q_poly", [](long n, long r) { return to_py(q_poly(n, r)); }, py::arg("n"), py::arg("r"));
  m.def(
      "csm_stratum", [](long n, long k) { return to_py(csm_stratum(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("duality_check", &duality_check, py::arg("n"), py::arg("r"));
  m.def(
      "det_strata_json", [](long n) { return to_json(det_strata(n)).dump(); }, py::arg("n"));
  m.def(
      "detvar_report_json", [](long n) { return detvar_report(n).dump(); }, py::arg("n"));

  m.def(
      "csm_quadric", [](long n, long r) { return to_py(csm_quadric(make_quadric_spec(n, r))); }, py::arg("n"),
      py::arg("rank"));
  m.def(
      "milnor_class", [](long n, long r) { return to_py(milnor_class(make_quadric_spec(n, r))); }, py::arg("n"),
      py::arg("rank"));
  m.def(
      "milnor_number",
      [](long n, long r) -> py::object {
        const QuadricSpec s = make_quadric_spec(n, r);
        if (s.smooth()) return py::none();
        return py::int_(milnor_number(s));
      },
      py::arg("n"), py::arg("rank"));
  m.def(
      "eu_values",
      [](long n, long r) {
        const EuValues v = eu_values(make_quadric_spec(n, r));
        return py::make_tuple(v.generic, v.singular ? py::object(py::int_(*v.singular)) : py::object(py::none()));
      },
      py::arg("n"), py::arg("rank"));
  m.def(
      "quadric_strata_json", [](long n, long r) { return to_json(quadric_strata(make_quadric_spec(n, r))).dump(); },
      py::arg("n"), py::arg("rank"));
  m.def(
      "quadric_report_json", [](long n, long r) { return quadric_report(make_quadric_spec(n, r)).dump(); },
      py::arg("n"), py::arg("rank"));

  m.def(
      "lr_multiply",
      [](int r, int n, const std::vector<int>& a, const std::vector<int>& b) {
        const RingPtr ring = SchubertRing::make(r, n);
        const auto f = factors(ring, {a, b});
        const ChowInt product = f[0] * f[1];
        py::dict out;
        for (std::size_t i = 0; i < ring->size(); ++i) {
          if (!is_zero(product.coeff(i))) out[py::tuple(py::cast(ring->basis(i).parts()))] = to_py(product.coeff(i));
        }
        return out;
      },
      py::arg("r"), py::arg("n"), py::arg("a"), py::arg("b"),
      "sigma_a * sigma_b on G(r, n) as {partition: coefficient}.");
  m.def(
      "integrate",
      [](int r, int n, const std::vector<std::vector<int>>& parts) {
        const RingPtr ring = SchubertRing::make(r, n);
        ChowInt product = ChowInt::one(ring);
        for (const ChowInt& f : factors(ring, parts)) product = product * f;
        return to_py(integrate(product));
      },
      py::arg("r"), py::arg("n"), py::arg("partitions"), "Degree of a product of Schubert classes on G(r, n).");
}
