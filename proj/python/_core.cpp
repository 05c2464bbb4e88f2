#include "monocurve/serialize.hpp"
#include "monocurve/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace monocurve;

namespace {

py::object to_python(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object report(const VerificationReport& r) { return to_python(to_json(r)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form Groebner bases of arithmetic-sequence monomial curves and their syzygies";

  auto param_error = py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<GcdError>(m, "GcdError", param_error.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", param_error.ptr());
  py::register_exception<NotMinimalError>(m, "NotMinimalError", param_error.ptr());

  py::class_<CurveParams>(m, "CurveParams")
      .def_property_readonly("p", &CurveParams::p)
      .def_property_readonly("m0", &CurveParams::m0)
      .def_property_readonly("d", &CurveParams::d)
      .def_property_readonly("a", &CurveParams::a)
      .def_property_readonly("b", &CurveParams::b)
      .def_property_readonly("generators", [](const CurveParams& c) {
        return std::vector<std::int64_t>(c.generators().begin(), c.generators().end());
      })
      .def("to_dict", [](const CurveParams& c) { return to_python(to_json(c)); })
      .def("__eq__", [](const CurveParams& x, const CurveParams& y) { return x == y; })
      .def("__repr__", [](const CurveParams& c) { return "CurveParams(" + c.to_string() + ")"; });

  m.def("make_params", &make_params, py::arg("m0"), py::arg("d"), py::arg("p"));

  m.def(
      "semigroup_contains",
      [](const CurveParams& c, std::int64_t x) {
        const auto r = semigroup_contains(c, x);
        return py::make_tuple(r.member, r.witness);
      },
      py::arg("params"), py::arg("x"));
  m.def(
      "min_multiple_of_mp",
      [](const CurveParams& c) {
        const auto r = min_multiple_of_mp(c);
        return py::make_tuple(r.m, r.n, r.i);
      },
      "(m, n, i) with m*m_p = n*m0 + m_i, m smallest");
  m.def(
      "min_multiple_of_m0",
      [](const CurveParams& c) {
        const auto r = min_multiple_of_m0(c);
        return py::make_tuple(r.n, r.m, r.i);
      },
      "(n, m, i) with n*m0 = m*m_p + m_i, n smallest");

  m.def("build_G_prime", [](const CurveParams& c) { return to_python(generators_to_json(c)); },
        "G' and G with serialized polynomials and leading monomials");
  m.def("build_G_hat", [](const CurveParams& c) { return to_python(syzygies_to_json(c)); },
        "The syzygies A, B, L with serialized module elements and counts");

  m.def("verify_groebner_G_prime", [](const CurveParams& c) { return report(verify_groebner_G_prime(c)); });
  m.def(
      "verify_minimality",
      [](const CurveParams& c, bool closure) { return report(verify_minimality(c, closure)); },
      py::arg("params"), py::arg("closure") = true);
  m.def(
      "verify_standard_monomials",
      [](const CurveParams& c, int bound) { return report(verify_standard_monomials(c, bound)); },
      py::arg("params"), py::arg("bound") = 6);
  m.def("verify_ideal_equality", [](const CurveParams& c) { return report(verify_ideal_equality(c)); });
  m.def("verify_cardinalities", [](const CurveParams& c) { return report(verify_cardinalities(c)); });
  m.def("verify_semigroup_relations", [](const CurveParams& c) { return report(verify_semigroup_relations(c)); });
  m.def("verify_groebner_G_hat", [](const CurveParams& c) { return report(verify_groebner_G_hat(c)); });
  m.def(
      "verify_excluded_leading_forms",
      [](const CurveParams& c, int bound) { return report(verify_excluded_leading_forms(c, bound)); },
      py::arg("params"), py::arg("bound") = 5);
  m.def(
      "verify_varpi_leading_monomial",
      [](const CurveParams& c, int samples, std::uint64_t seed) {
        return report(verify_varpi_leading_monomial(c, samples, seed));
      },
      py::arg("params"), py::arg("samples") = 1000, py::arg("seed") = 20090101);
  m.def(
      "verify_all",
      [](const CurveParams& c, int bound, int samples, std::uint64_t seed, bool syzygies, bool closure) {
        VerifyOptions o;
        o.bound = bound;
        o.samples = samples;
        o.seed = seed;
        o.syzygies = syzygies;
        o.minimality_closure = closure;
        std::optional<VerificationReport> r;
        {
          py::gil_scoped_release release;
          r = verify_all(c, o);
        }
        return report(*r);
      },
      py::arg("params"), py::arg("bound") = 6, py::arg("samples") = 1000,
      py::arg("seed") = 20090101, py::arg("syzygies") = true, py::arg("closure") = true);
}
