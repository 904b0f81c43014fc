#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qstar/classify.hpp"
#include "qstar/fractal.hpp"
#include "qstar/levelset.hpp"
#include "qstar/repsys.hpp"
#include "qstar/spec_io.hpp"
#include "qstar/verify.hpp"

namespace py = pybind11;
using namespace qstar;

namespace {

py::int_ big_int(const std::string& digits) {
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

DigitWord word_of(const std::string& s) { return DigitWord::parse(s); }

std::vector<std::string> word_strs(const std::vector<DigitWord>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const DigitWord& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_qstar, m) {
  m.doc() = "Exact Q*3 digit systems and their induced function family";

  py::class_<Rational>(m, "Rational")
      .def(py::init<long>())
      .def(py::init([](const std::string& s) { return Rational(s); }))
      .def_property_readonly("numerator", [](const Rational& r) { return big_int(r.numerator_str()); })
      .def_property_readonly("denominator",
                             [](const Rational& r) { return big_int(r.denominator_str()); })
      .def("fraction",
           [](const Rational& r) {
             return py::module_::import("fractions")
                 .attr("Fraction")(big_int(r.numerator_str()), big_int(r.denominator_str()));
           })
      .def("decimal", &Rational::decimal, py::arg("digits") = 15)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def("__abs__", &Rational::abs)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); });
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  py::class_<DigitSeq>(m, "DigitSeq")
      .def(py::init([](const std::string& prefix, const std::string& tail) {
             return DigitSeq(word_of(prefix), word_of(tail));
           }),
           py::arg("prefix"), py::arg("tail"))
      .def_property_readonly("prefix", [](const DigitSeq& s) { return s.prefix().str(); })
      .def_property_readonly("tail", [](const DigitSeq& s) { return s.tail().str(); })
      .def("at", &DigitSeq::at, py::arg("k"))
      .def("normalized", &DigitSeq::normalized)
      .def("__str__", &DigitSeq::str)
      .def("__repr__", [](const DigitSeq& s) { return "DigitSeq('" + s.str() + "')"; })
      .def(py::self == py::self);

  m.def("canonicalize", &qstar::canonicalize, py::arg("x"));
  m.def("dual_representation", &qstar::dual_representation, py::arg("x"));
  m.def("compare_lex", &qstar::compare_lex, py::arg("a"), py::arg("b"));

  py::class_<MatrixColumn>(m, "MatrixColumn")
      .def(py::init<Rational, Rational, Rational>(), py::arg("q0"), py::arg("q1"), py::arg("q2"))
      .def_property_readonly("q0", &MatrixColumn::q0)
      .def_property_readonly("q1", &MatrixColumn::q1)
      .def_property_readonly("q2", &MatrixColumn::q2)
      .def("beta", &MatrixColumn::beta, py::arg("d"));
  m.def("beta_of", &beta_of, py::arg("column"), py::arg("d"));

  py::class_<ColumnSchedule>(m, "ColumnSchedule")
      .def(py::init<std::vector<MatrixColumn>, std::vector<MatrixColumn>>(),
           py::arg("preamble"), py::arg("period"))
      .def_static("constant", &ColumnSchedule::constant, py::arg("column"))
      .def_static("uniform_thirds", &ColumnSchedule::uniform_thirds)
      .def("column_at", &ColumnSchedule::column_at, py::arg("k"),
           py::return_value_policy::copy);

  py::class_<EpsilonSchedule>(m, "EpsilonSchedule")
      .def(py::init<std::vector<Rational>, std::vector<Rational>>(), py::arg("preamble"),
           py::arg("period"))
      .def_static("constant", &EpsilonSchedule::constant, py::arg("eps"))
      .def("epsilon_at", &EpsilonSchedule::epsilon_at, py::arg("k"),
           py::return_value_policy::copy);

  py::class_<GColumn>(m, "GColumn")
      .def_static("from_epsilon", &GColumn::from_epsilon, py::arg("eps"))
      .def_readonly("g0", &GColumn::g0)
      .def_readonly("g1", &GColumn::g1)
      .def_readonly("g2", &GColumn::g2)
      .def_readonly("d0", &GColumn::d0)
      .def_readonly("d1", &GColumn::d1)
      .def_readonly("d2", &GColumn::d2);
  m.def("g_column_at", &g_column_at, py::arg("eps"), py::arg("k"));

  py::class_<FunctionSpec>(m, "FunctionSpec")
      .def(py::init<ColumnSchedule, EpsilonSchedule>(), py::arg("x_schedule"), py::arg("eps"))
      .def_readonly("x_schedule", &FunctionSpec::x_schedule)
      .def_readonly("eps", &FunctionSpec::eps)
      .def_static("from_json", &parse_spec_file, py::arg("text"))
      .def("to_json", &serialize_spec);

  m.def("value_of", &value_of, py::arg("schedule"), py::arg("x"));
  m.def(
      "cylinder_interval",
      [](const ColumnSchedule& s, const std::string& w) {
        const CylinderInterval c = cylinder_interval(s, word_of(w));
        return py::make_tuple(c.left, c.length);
      },
      py::arg("schedule"), py::arg("word"));
  m.def(
      "encode",
      [](const ColumnSchedule& s, const Rational& x, std::size_t depth) {
        const EncodeResult r = encode(s, x, depth);
        return py::make_tuple(r.word.str(), r.exact,
                              r.full ? py::cast(*r.full) : py::none().cast<py::object>());
      },
      py::arg("schedule"), py::arg("x"), py::arg("depth") = 64);

  m.def("eval_exact", &eval_exact, py::arg("spec"), py::arg("x"));
  m.def("eval_approx", &eval_approx, py::arg("spec"), py::arg("x"), py::arg("tol") = 1e-12);
  m.def(
      "increment",
      [](const FunctionSpec& f, const std::string& w) { return increment(f, word_of(w)); },
      py::arg("spec"), py::arg("word"));

  py::enum_<EndpointTag>(m, "EndpointTag")
      .value("Left", EndpointTag::Left)
      .value("Right", EndpointTag::Right);

  py::class_<CylinderRange>(m, "CylinderRange")
      .def_readonly("lo", &CylinderRange::lo)
      .def_readonly("hi", &CylinderRange::hi)
      .def_readonly("argmin_at", &CylinderRange::argmin_at)
      .def_readonly("argmax_at", &CylinderRange::argmax_at);
  m.def(
      "range_on_cylinder",
      [](const FunctionSpec& f, const std::string& w) {
        return range_on_cylinder(f, word_of(w));
      },
      py::arg("spec"), py::arg("word"));
  m.def("dual_consistency", &dual_consistency, py::arg("spec"), py::arg("x"));

  py::enum_<RegimeTag>(m, "RegimeTag")
      .value("StrictlyIncreasing", RegimeTag::StrictlyIncreasing)
      .value("CantorSingular", RegimeTag::CantorSingular)
      .value("NowhereMonotone", RegimeTag::NowhereMonotone)
      .value("Mixed", RegimeTag::Mixed);
  py::enum_<Sign>(m, "Sign")
      .value("Negative", Sign::Negative)
      .value("Zero", Sign::Zero)
      .value("Positive", Sign::Positive);

  py::class_<Regime>(m, "Regime")
      .def_readonly("tag", &Regime::tag)
      .def_readonly("per_index", &Regime::per_index);
  m.def("classify_regime", &classify_regime, py::arg("eps"));
  m.def(
      "subcylinder_signs",
      [](const FunctionSpec& f, const std::string& w) {
        return subcylinder_signs(f, word_of(w));
      },
      py::arg("spec"), py::arg("word"));
  m.def(
      "plateau_cylinders",
      [](const FunctionSpec& f, std::size_t max_rank) {
        return word_strs(plateau_cylinders(f, max_rank));
      },
      py::arg("spec"), py::arg("max_rank"));
  m.def("plateau_measure", &plateau_measure, py::arg("spec"), py::arg("max_rank"));
  m.def("derivative_ratios", &derivative_ratios, py::arg("spec"), py::arg("x"), py::arg("m"));

  py::enum_<Witness>(m, "Witness")
      .value("SignChange", Witness::SignChange)
      .value("EndpointHit", Witness::EndpointHit)
      .value("RangeOnly", Witness::RangeOnly);

  py::class_<SolutionRegion>(m, "SolutionRegion")
      .def_property_readonly("word", [](const SolutionRegion& r) { return r.word.str(); })
      .def_readonly("x_left", &SolutionRegion::x_left)
      .def_readonly("x_right", &SolutionRegion::x_right)
      .def_readonly("f_lo", &SolutionRegion::f_lo)
      .def_readonly("f_hi", &SolutionRegion::f_hi)
      .def_readonly("witness", &SolutionRegion::witness);
  m.def("preimage_regions", &preimage_regions, py::arg("spec"), py::arg("y0"), py::arg("depth"));
  m.def(
      "invert_monotone",
      [](const FunctionSpec& f, const Rational& y0, std::size_t depth) {
        return invert_monotone(f, y0, depth).str();
      },
      py::arg("spec"), py::arg("y0"), py::arg("depth"));
  m.def("root_count_lower_bound", &root_count_lower_bound, py::arg("spec"), py::arg("y0"),
        py::arg("depth"));

  py::class_<AffineMap2D>(m, "AffineMap2D")
      .def_readonly("qx", &AffineMap2D::qx)
      .def_readonly("bx", &AffineMap2D::bx)
      .def_readonly("gy", &AffineMap2D::gy)
      .def_readonly("dy", &AffineMap2D::dy);
  py::register_exception<NonConstantSchedule>(m, "NonConstantScheduleError", PyExc_ValueError);
  py::register_exception<DegenerateMap>(m, "DegenerateMapError", PyExc_ValueError);
  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  m.def("ifs_maps", &ifs_maps, py::arg("spec"));

  py::class_<GraphSample>(m, "GraphSample")
      .def_readonly("points", &GraphSample::points)
      .def_readonly("exact", &GraphSample::exact);
  m.def("graph_sample", &graph_sample, py::arg("spec"), py::arg("rank"));
  m.def("self_affine_residual", &self_affine_residual, py::arg("spec"), py::arg("sample"));

  py::class_<BoxDimension>(m, "BoxDimension")
      .def_readonly("estimate", &BoxDimension::estimate)
      .def_readonly("per_scale", &BoxDimension::per_scale);
  m.def("box_dimension", &box_dimension, py::arg("spec"), py::arg("scales"));

  m.def(
      "run_verification",
      [](const FunctionSpec& f, std::size_t rank) {
        std::ostringstream report;
        const bool ok = run_verification(f, {rank}, report);
        return py::make_tuple(ok, report.str());
      },
      py::arg("spec"), py::arg("rank") = 6);
}
