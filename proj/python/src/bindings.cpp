#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bnclass/divisor_classes.hpp"
#include "bnclass/error.hpp"
#include "bnclass/serialize.hpp"
#include "bnclass/teichmuller.hpp"
#include "bnclass/test_families.hpp"

namespace py = pybind11;
using namespace bnclass;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings are accepted too.
py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::object to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

Rational from_py(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

std::optional<Rational> from_py_opt(const py::object& x) {
  if (x.is_none()) return std::nullopt;
  return from_py(x);
}

BNData make_datum(int g, int d, const std::vector<int>& a) { return BNData{g, d, VanishingSequence(a)}; }

py::list to_py(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(to_py(q));
  return out;
}

py::dict to_py(const DownClass& c) {
  py::dict d;
  d["g"] = c.g;
  d["k"] = c.k;
  d["eta"] = to_py(c.eta);
  d["lambda"] = to_py(c.lambda);
  d["delta"] = to_py(c.delta);
  return d;
}

py::dict to_py(const UpClass& c) {
  py::dict d;
  d["g"] = c.g;
  d["k"] = c.k;
  d["eta"] = to_py(c.eta);
  d["lambda"] = to_py(c.lambda);
  d["psi"] = to_py(c.psi);
  d["delta"] = to_py(c.delta);
  return d;
}

DownClass down_from_py(const py::dict& d) {
  DownClass c = DownClass::zero(d["g"].cast<int>(), d["k"].cast<int>());
  c.eta = from_py(d["eta"]);
  c.lambda = from_py(d["lambda"]);
  const py::list delta = d["delta"];
  if (delta.size() != c.delta.size()) {
    throw Error(ErrorCode::InvalidInput, "delta has " + std::to_string(delta.size()) + " entries, expected " +
                                             std::to_string(c.delta.size()));
  }
  for (std::size_t i = 0; i < c.delta.size(); ++i) c.delta[i] = from_py(delta[i]);
  return c;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

TeichCurve make_curve(int k, int g, const py::object& chi, const py::object& lyapunov, const py::object& c_sv) {
  return TeichCurve{k, g, from_py(chi), from_py_opt(lyapunov), from_py_opt(c_sv)};
}

AmpleVector make_ample(int g, const py::sequence& values) {
  std::vector<Rational> v;
  for (const auto& x : values) v.push_back(from_py(x));
  return AmpleVector::from_list(g, v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact divisor classes of Brill-Noether incidence loci";

  static py::handle error_type = py::exception<Error>(m, "BnclassError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(std::string(error_code_name(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(error_code_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("rho", [](int g, int d, const std::vector<int>& a) { return rho(make_datum(g, d, a)); }, py::arg("g"),
        py::arg("d"), py::arg("a"));
  m.def(
      "count_special", [](int g, int d, const std::vector<int>& a) { return to_py(count_special(make_datum(g, d, a))); },
      py::arg("g"), py::arg("d"), py::arg("a"), "Number of points carrying the vanishing sequence; needs rho = -1.");
  m.def(
      "mu_nu",
      [](int g, int d, const std::vector<int>& a) {
        const MuNu mn = resolve_mu_nu(make_datum(g, d, a));
        return py::make_tuple(to_py(mn.mu), to_py(mn.nu));
      },
      py::arg("g"), py::arg("d"), py::arg("a"));
  m.def(
      "enumerate_divisorial",
      [](int g, int r_max, int d_max) {
        py::list out;
        for (const BNData& x : enumerate_divisorial(g, r_max, d_max)) {
          out.append(py::make_tuple(x.d, py::tuple(py::cast(x.a.entries()))));
        }
        return out;
      },
      py::arg("g"), py::arg("r_max"), py::arg("d_max"), "List of (d, a) with rho = -1.");

  m.def("weierstrass_class", [](int g, int k) { return to_py(weierstrass_k_class(g, k)); }, py::arg("g"),
        py::arg("k") = 1);
  m.def(
      "bn_class",
      [](int g, int d, const std::vector<int>& a, int k, const std::string& route) {
        const BNData data = make_datum(g, d, a);
        if (route == "direct") return to_py(bn_k_class_direct(data, k));
        if (route == "pushforward") return to_py(bn_k_class_pushforward(data, k));
        throw Error(ErrorCode::InvalidInput, "route must be 'direct' or 'pushforward'");
      },
      py::arg("g"), py::arg("d"), py::arg("a"), py::arg("k") = 1, py::arg("route") = "direct");
  m.def(
      "incidence_class", [](int g, int k) { return to_py(incidence_class(g, k)); }, py::arg("g"), py::arg("k"));
  m.def("stratum_h22", [] { return to_py(stratum_h22()); });
  m.def(
      "classes_equal", [](const py::dict& a, const py::dict& b) { return classes_equal(down_from_py(a), down_from_py(b)); },
      py::arg("a"), py::arg("b"), "Equality, modulo 10 lambda = delta_0 + 2 delta_1 when g = 2.");
  m.def(
      "class_text", [](const py::dict& c) { return to_text(down_from_py(c)); }, py::arg("cls"));

  m.def(
      "verify",
      [](int g, int k, int d, const std::vector<int>& a) { return json_to_py(to_json(verify_dual_path(g, k, d, a))); },
      py::arg("g"), py::arg("k"), py::arg("d"), py::arg("a"), "Dual-path verification report as a dict.");

  m.def(
      "teich_intersections",
      [](int k, int g, const py::object& chi, const py::object& lyapunov, const py::object& c_sv) {
        const IntersectionTable t = intersections(make_curve(k, g, chi, lyapunov, c_sv));
        py::dict d;
        d["lambda"] = to_py(t.lambda);
        d[k == 1 ? "delta0" : "delta"] = to_py(t.boundary);
        d["psi"] = to_py(t.psi);
        d["eta"] = to_py(t.eta);
        d["H"] = to_py(t.incidence);
        return d;
      },
      py::arg("k"), py::arg("g"), py::arg("chi"), py::arg("L") = py::none(), py::arg("c_sv") = py::none());
  m.def(
      "teich_threshold",
      [](int k, int g, const py::sequence& ample, const py::object& lyapunov, const py::object& c_sv) {
        // The threshold does not depend on chi; any negative value will do.
        return to_py(threshold_d(make_curve(k, g, py::int_(-1), lyapunov, c_sv), make_ample(g, ample)));
      },
      py::arg("k"), py::arg("g"), py::arg("ample"), py::arg("L") = py::none(), py::arg("c_sv") = py::none());
}
