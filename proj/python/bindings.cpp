#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tridet/tridet.hpp"

namespace py = pybind11;
using namespace tridet;

namespace {

ZeroTest make_zero_test(double zero_tol, bool relative) {
  return relative ? ZeroTest::relative(zero_tol == 0.0 ? kDefaultRelativeZeroTol : zero_tol)
                  : ZeroTest::absolute(zero_tol);
}

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw py::value_error("unknown family '" + name + "'");
  return *f;
}

std::vector<std::vector<double>> dense_rows(const TridiagonalMatrix& m) {
  const auto g = to_dense(m);
  std::vector<std::vector<double>> rows(g.order(), std::vector<double>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) rows[i][j] = g(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear-time determinants, LU factors and definiteness tests for tridiagonal matrices";

  py::register_exception<ZeroPivotError>(m, "ZeroPivotError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<TridiagonalMatrix>(m, "TridiagonalMatrix")
      .def(py::init(&make_matrix), py::arg("d"), py::arg("a"), py::arg("b"))
      .def_property_readonly("n", &TridiagonalMatrix::order)
      .def_property_readonly("d", [](const TridiagonalMatrix& t) {
        return std::vector<double>(t.diag().begin(), t.diag().end());
      })
      .def_property_readonly("a", [](const TridiagonalMatrix& t) {
        return std::vector<double>(t.super().begin(), t.super().end());
      })
      .def_property_readonly("b", [](const TridiagonalMatrix& t) {
        return std::vector<double>(t.sub().begin(), t.sub().end());
      })
      .def("to_dense", &dense_rows)
      .def("__repr__", [](const TridiagonalMatrix& t) {
        return "<TridiagonalMatrix n=" + std::to_string(t.order()) + ">";
      });

  py::class_<SignedLogValue>(m, "SignedLogValue")
      .def(py::init<int, double>(), py::arg("sign"), py::arg("logmag"))
      .def_property_readonly("sign", &SignedLogValue::sign)
      .def_property_readonly("logmag", &SignedLogValue::logmag)
      .def("to_scalar", &SignedLogValue::to_scalar)
      .def("__repr__", [](const SignedLogValue& v) { return "<SignedLogValue " + to_string(v) + ">"; });

  py::class_<DetResult>(m, "DetResult")
      .def_property_readonly("value", [](const DetResult& r) -> py::object {
        if (r.is_scaled()) return py::cast(r.signed_log());
        return py::float_(r.scalar());
      })
      .def_property_readonly("algorithm", [](const DetResult& r) { return std::string(to_string(r.algorithm)); })
      .def_readonly("pivot_break", &DetResult::pivot_break)
      .def_property_readonly("pivot_updates", [](const DetResult& r) { return r.steps.pivot_updates; })
      .def_property_readonly("three_term_steps", [](const DetResult& r) { return r.steps.three_term_steps; });

  m.def(
      "pivot_sequence",
      [](const TridiagonalMatrix& t, double zero_tol, bool relative) {
        auto ps = pivot_sequence(t, make_zero_test(zero_tol, relative));
        return py::make_tuple(ps.c, ps.break_index);
      },
      py::arg("m"), py::arg("zero_tol") = 0.0, py::arg("relative") = false,
      "Pivot vector c and the 1-based index of the first vanishing interior pivot (or None).");

  m.def("det_two_term", py::overload_cast<const TridiagonalMatrix&>(&det_two_term), py::arg("m"));
  m.def("det_three_term", py::overload_cast<const TridiagonalMatrix&>(&det_three_term), py::arg("m"));
  m.def(
      "det_hybrid",
      [](const TridiagonalMatrix& t, double zero_tol, bool relative) {
        return det_hybrid(t, make_zero_test(zero_tol, relative));
      },
      py::arg("m"), py::arg("zero_tol") = 0.0, py::arg("relative") = false);
  m.def(
      "det_hybrid_scaled",
      [](const TridiagonalMatrix& t, double zero_tol, bool relative) {
        return det_hybrid_scaled(t, make_zero_test(zero_tol, relative));
      },
      py::arg("m"), py::arg("zero_tol") = 0.0, py::arg("relative") = false);

  m.def(
      "det_detgtri",
      [](const TridiagonalMatrix& t) { return to_string(det_detgtri(t).value); }, py::arg("m"),
      "Exact determinant as a 'p' or 'p/q' string.");

  m.def(
      "lu_factorize",
      [](const TridiagonalMatrix& t, const std::string& convention) {
        LuConvention conv;
        if (convention == "doolittle") {
          conv = LuConvention::Doolittle;
        } else if (convention == "crout") {
          conv = LuConvention::Crout;
        } else {
          throw py::value_error("convention must be 'doolittle' or 'crout'");
        }
        const LUFactors f = lu_factorize(t, conv);
        py::dict out;
        out["convention"] = convention;
        out["l_diag"] = f.l_diag;
        out["l_sub"] = f.l_sub;
        out["u_diag"] = f.u_diag;
        out["u_super"] = f.u_super;
        return out;
      },
      py::arg("m"), py::arg("convention") = "doolittle");

  m.def(
      "is_positive_definite",
      [](const TridiagonalMatrix& t) {
        const PdVerdict v = is_positive_definite(t);
        return py::make_tuple(v.positive_definite, v.pivots, v.failing_index);
      },
      py::arg("m"));

  m.def(
      "gen_example", [](const std::string& family, std::size_t n) { return gen_example(family_arg(family), n); },
      py::arg("family"), py::arg("n"));
  m.def(
      "closed_form_det",
      [](const std::string& family, std::size_t n) { return closed_form_det(family_arg(family), n).get_str(); },
      py::arg("family"), py::arg("n"));

  m.def(
      "dense_det_float", [](const TridiagonalMatrix& t) { return dense_det_float(to_dense(t)); }, py::arg("m"));
  m.def(
      "dense_det_exact",
      [](const TridiagonalMatrix& t) {
        return to_string(dense_det_exact(to_rational(to_dense(t, kDefaultExactDenseLimit))));
      },
      py::arg("m"));

  m.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); }, py::arg("text"));
  m.def("format_matrix", &format_matrix, py::arg("m"));
}
