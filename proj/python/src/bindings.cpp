#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quadnorm/cli.hpp"
#include "quadnorm/class_group.hpp"
#include "quadnorm/norm1kit.hpp"

namespace py = pybind11;
using namespace quadnorm;

namespace {

// Group orders fit in a long inside the envelope; Python gets plain ints.
std::vector<long long> factors(const FinAbGroup& g) {
  std::vector<long long> out;
  for (const Int& n : g.invariant_factors()) out.push_back(to_ll(n));
  return out;
}

SigmaSet sigma_arg(long d, const std::optional<std::vector<long>>& primes) {
  return primes ? SigmaSet(*primes) : minimal_sigma(d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sigma-class groups, Sigma-units and norm residue checks for quadratic fields";

  py::register_exception<EnvelopeError>(m, "EnvelopeError", PyExc_ValueError);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("d", &VerificationReport::d)
      .def_property_readonly("sigma", &VerificationReport::sigma_string)
      .def_readonly("rho", &VerificationReport::rho)
      .def_readonly("e", &VerificationReport::e)
      .def_property_readonly("order_c_sigma", [](const VerificationReport& r) { return to_ll(r.order_c_sigma); })
      .def_property_readonly("order_c_fixed", [](const VerificationReport& r) { return to_ll(r.order_c_fixed); })
      .def_property_readonly("order_h_minus1", [](const VerificationReport& r) { return to_ll(r.order_h_minus1); })
      .def_property_readonly("order_w_over_n", [](const VerificationReport& r) { return to_ll(r.order_w_over_n); })
      .def_property_readonly("coker_lambda", [](const VerificationReport& r) { return to_ll(r.coker_lambda); })
      .def_property_readonly("brauer_order", [](const VerificationReport& r) { return to_ll(r.brauer_order); })
      .def_readonly("pass_n1", &VerificationReport::pass_n1)
      .def_readonly("pass_n2", &VerificationReport::pass_n2)
      .def_readonly("pass_n3", &VerificationReport::pass_n3)
      .def_readonly("pass_n4", &VerificationReport::pass_n4)
      .def_readonly("pass_n5", &VerificationReport::pass_n5)
      .def_readonly("pass_n6", &VerificationReport::pass_n6)
      .def_readonly("ms_elapsed", &VerificationReport::ms_elapsed)
      .def("passed", &VerificationReport::passed)
      .def("to_json", &VerificationReport::to_json)
      .def("to_csv", &VerificationReport::to_csv)
      .def("__repr__", [](const VerificationReport& r) {
        return "<VerificationReport d=" + std::to_string(r.d) + " sigma=" + r.sigma_string() +
               (r.passed() ? " pass>" : " FAIL>");
      });

  m.def(
      "verify_field",
      [](long d, std::optional<std::vector<long>> primes) { return verify_field(d, sigma_arg(d, primes)); },
      py::arg("d"), py::arg("sigma") = py::none(),
      "Run checks N1..N6; sigma lists the finite primes (default: the ramified ones).");
  m.def(
      "minimal_sigma", [](long d) { return minimal_sigma(d).finite_primes(); }, py::arg("d"));
  m.def(
      "class_group", [](long d) { return factors(class_group(QuadField(d)).group()); }, py::arg("d"),
      "Invariant factors of the ideal class group of Q(sqrt d).");
  m.def(
      "narrow_class_group", [](long d) { return factors(class_group(QuadField(d)).narrow_group()); }, py::arg("d"));
  m.def(
      "s_class_group",
      [](long d, std::vector<long> primes) {
        return factors(s_class_group(class_group(QuadField(d)), SigmaSet(primes)).group);
      },
      py::arg("d"), py::arg("sigma"));
  m.def(
      "fundamental_unit", [](long d) { return fundamental_unit(QuadField(d)).to_string(); }, py::arg("d"));
  m.def(
      "s_unit_generators",
      [](long d, std::optional<std::vector<long>> primes) {
        std::vector<std::string> out;
        for (const QuadElement& g : s_unit_group(QuadField(d), sigma_arg(d, primes)).generators())
          out.push_back(g.to_string());
        return out;
      },
      py::arg("d"), py::arg("sigma") = py::none(), "Torsion generator first, then the free generators.");
  m.def(
      "explain",
      [](long d, std::optional<std::vector<long>> primes) { return explain(d, sigma_arg(d, primes)); },
      py::arg("d"), py::arg("sigma") = py::none());
  m.def(
      "cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int status = cli_main(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool in-process; returns (status, stdout, stderr).");
}
