#include "nphk/classify.hpp"
#include "nphk/error.hpp"
#include "nphk/exponent.hpp"
#include "nphk/newton.hpp"
#include "nphk/oscint.hpp"
#include "nphk/parse.hpp"
#include "nphk/report.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

nphk::Order order_arg(const std::optional<int>& n) { return n ? nphk::Order(*n) : nphk::Order::infinite(); }

std::vector<nphk::Rational> rationals(const std::vector<std::string>& texts) {
  std::vector<nphk::Rational> out;
  for (const auto& t : texts) out.push_back(nphk::parse_rational(t));
  return out;
}

nphk::AmplitudeSpec amplitude(double radius, const std::string& profile, int order) {
  nphk::AmplitudeSpec a;
  a.radius = radius;
  a.order = order;
  if (profile == "product")
    a.profile = nphk::BumpProfile::Product;
  else if (profile != "radial")
    throw nphk::Error(nphk::ErrorKind::Domain, "profile must be 'radial' or 'product'");
  return a;
}

}  // namespace

PYBIND11_MODULE(_nphk, m) {
  m.doc() = "Newton polygons, heights and oscillatory integrals of bivariate phases";

  // Held for the lifetime of the interpreter.
  static py::handle error_type = py::exception<nphk::Error>(m, "NphkError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nphk::Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("kind") = nphk::to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def("parse", [](const std::string& text) { return nphk::parse_polynomial(text).to_string(); },
        "Normalized printed form of a polynomial.", py::arg("text"));

  m.def(
      "analyze_json",
      [](const std::string& text, const std::vector<std::string>& p) {
        return nphk::to_json(nphk::analyze(text, rationals(p))).dump();
      },
      py::arg("phi"), py::arg("p") = std::vector<std::string>{"1", "6/5", "4/3", "3/2", "2"});

  m.def(
      "newton_distance",
      [](const std::vector<std::pair<int, int>>& support) {
        nphk::LatticeSet s;
        for (auto [i, j] : support) s.push_back({i, j});
        return nphk::to_string(nphk::newton_distance(nphk::build_polygon(s)).d);
      },
      "Newton distance of a support given as (i, j) pairs, as an exact string.", py::arg("support"));

  m.def(
      "kp_point",
      [](const std::string& phi, const std::string& p) {
        auto kind = nphk::classify_singularity(nphk::parse_polynomial(phi));
        return nphk::to_string(nphk::kp_point(kind, nphk::parse_rational(p)));
      },
      py::arg("phi"), py::arg("p"));

  m.def(
      "verify_nla_identity", [](int m_, std::optional<int> n) { return nphk::verify_nla_identity(m_, order_arg(n)); },
      "n=None stands for n = infinity.", py::arg("m"), py::arg("n"));

  m.def(
      "knapp_exponent_nla",
      [](int m_, std::optional<int> n, const std::string& p, const std::string& k) {
        return nphk::to_string(
            nphk::knapp_exponent_nla(m_, order_arg(n), nphk::parse_rational(p), nphk::parse_rational(k)));
      },
      py::arg("m"), py::arg("n"), py::arg("p"), py::arg("k"));

  m.def(
      "eval_oscillatory",
      [](const std::string& phi, double lam, std::pair<double, double> s, double radius, const std::string& profile,
         int order) {
        auto v = nphk::eval_oscillatory(nphk::parse_polynomial(phi), amplitude(radius, profile, order), lam, s);
        return py::make_tuple(v.value, v.error_estimate);
      },
      "Returns (I(lambda, s), error estimate).", py::arg("phi"), py::arg("lam"),
      py::arg("s") = std::pair<double, double>{0.0, 0.0}, py::arg("radius") = 1.0, py::arg("profile") = "radial",
      py::arg("order") = 8);

  m.def(
      "fit_decay_json",
      [](const std::string& phi, double lmin, double lmax, double ratio, double radius) {
        auto fit = nphk::fit_decay(nphk::parse_polynomial(phi), amplitude(radius, "radial", 8),
                                   nphk::geometric_grid(lmin, lmax, ratio));
        return nphk::to_json(fit).dump();
      },
      py::arg("phi"), py::arg("lmin") = 64.0, py::arg("lmax") = 16384.0, py::arg("ratio") = 2.0,
      py::arg("radius") = 1.0);
}
