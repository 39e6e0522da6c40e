// Python bindings for the main library operations. Scalar results map to
// native Python types; structured results are returned as JSON strings
// produced by the io layer, polynomials as their exact string form.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexil/detideal.hpp"
#include "vexil/gvd.hpp"
#include "vexil/invariants.hpp"
#include "vexil/io.hpp"
#include "vexil/poison.hpp"
#include "vexil/subword.hpp"
#include "vexil/tableaux.hpp"

namespace py = pybind11;
using namespace vexil;

namespace {

SchubertMethod schubert_method(const std::string &name) {
  if (name == "tableau") return SchubertMethod::tableau;
  if (name == "pipedream") return SchubertMethod::pipedream;
  if (name == "divided-difference") return SchubertMethod::divided_difference;
  if (name == "multidegree") return SchubertMethod::multidegree;
  throw std::invalid_argument("unknown Schubert method: " + name);
}

GrothendieckMethod grothendieck_method(const std::string &name) {
  if (name == "tableau") return GrothendieckMethod::tableau;
  if (name == "interior-faces") return GrothendieckMethod::interior_faces;
  if (name == "k-polynomial") return GrothendieckMethod::k_polynomial;
  if (name == "demazure") return GrothendieckMethod::demazure;
  throw std::invalid_argument("unknown Grothendieck method: " + name);
}

TermOrder order_arg(const std::string &spec, int n) {
  if (spec == "canonical") return TermOrder::canonical();
  return order_from_flag(spec, n);
}

}  // namespace

PYBIND11_MODULE(vexil, m) {
  m.doc() = "Exact-arithmetic toolkit for matrix Schubert varieties: "
            "Schubert/Grothendieck polynomials, pipe dreams, flagged "
            "set-valued tableaux, diagonal Groebner bases, and geometric "
            "vertex decompositions.";

  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string &text) { return Poly::parse(text); }),
           py::arg("text"))
      .def("__str__", &Poly::str)
      .def("__repr__", [](const Poly &p) { return "Poly(\"" + p.str() + "\")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  m.def("perm_info", [](const std::vector<int> &w) { return perm_info_json(Perm(w)).dump(); },
        py::arg("one_line"),
        "JSON description: length, diagram, essential set, shapes, vexillary flag.");
  m.def("length", [](const std::vector<int> &w) { return Perm(w).length(); }, py::arg("one_line"));
  m.def("is_vexillary", [](const std::vector<int> &w) { return Perm(w).is_vexillary(); },
        py::arg("one_line"));

  m.def(
      "schubert",
      [](const std::vector<int> &w, const std::string &method) {
        return schubert(Perm(w), schubert_method(method)).str();
      },
      py::arg("one_line"), py::arg("method") = "divided-difference",
      "Double Schubert polynomial; methods: tableau, pipedream, divided-difference, "
      "multidegree.");
  m.def(
      "grothendieck",
      [](const std::vector<int> &w, const std::string &method) {
        return grothendieck(Perm(w), grothendieck_method(method)).str();
      },
      py::arg("one_line"), py::arg("method") = "demazure",
      "Double Grothendieck polynomial; methods: tableau, interior-faces, k-polynomial, "
      "demazure.");
  m.def(
      "schubert_from_grothendieck",
      [](const std::vector<int> &w) {
        Perm pi(w);
        return schubert_from_grothendieck(grothendieck(pi, GrothendieckMethod::demazure),
                                          pi.length())
            .str();
      },
      py::arg("one_line"),
      "Lowest-degree part of the Grothendieck polynomial after the 1-x substitution.");

  m.def(
      "diagonal_gb_verdict",
      [](const std::vector<int> &w, const std::string &order, bool with_initial) {
        Perm pi(w);
        TermOrder ord = order_arg(order, pi.n());
        auto verdict = verify_diagonal_gb(pi, ord);
        std::optional<MonomialIdeal> initial;
        if (with_initial) initial = initial_ideal(schubert_ideal(pi), ord);
        return gb_verdict_json(pi, verdict, initial).dump();
      },
      py::arg("one_line"), py::arg("order") = "diagonal", py::arg("with_initial") = false,
      "Whether the essential minors form a Groebner basis under the order; JSON verdict "
      "with a witness S-pair on refutation.");

  m.def(
      "gvd_trace",
      [](const std::vector<int> &w) { return gvd_trace_json(iterate_gvd(Perm(w))).dump(); },
      py::arg("one_line"),
      "Full geometric vertex decomposition run ending at the diagonal monomial ideal.");

  m.def(
      "poison_certificate",
      [](const std::vector<int> &w) {
        return certificate_json(sharpness_certificate(Perm(w))).dump();
      },
      py::arg("one_line"),
      "For a non-vexillary permutation: a poisoning of the essential minors using fewer "
      "crosses than the length.");
  m.def(
      "poison_minimal",
      [](const std::vector<int> &w) {
        Perm pi(w);
        return is_minimal_poisoning(cross_diagram(pi), pi).minimal;
      },
      py::arg("one_line"),
      "Whether the cross diagram is a minimal poisoning of the essential minors.");

  m.def(
      "pipedreams",
      [](const std::vector<int> &w) {
        SubwordComplex c = staircase_complex(Perm(w));
        int rows = 0, cols = 0;
        for (const Box &b : c.word.boxes) {
          rows = std::max(rows, b.row);
          cols = std::max(cols, b.col);
        }
        std::vector<std::string> out;
        for (const auto &f : facets(c)) {
          PipeDream pd;
          pd.rows = rows;
          pd.cols = cols;
          pd.crosses = f;
          out.push_back(pipedream_json(pd).dump());
        }
        return out;
      },
      py::arg("one_line"), "All reduced pipe dreams, one JSON document each.");

  m.def(
      "tableaux_latex",
      [](const std::vector<int> &w, bool set_valued) {
        std::vector<std::string> out;
        for (const auto &t : flagged_tableaux(Perm(w), set_valued)) out.push_back(tableau_latex(t));
        return out;
      },
      py::arg("one_line"), py::arg("set_valued") = false,
      "Flag-bounded (set-valued) fillings of the associated shape, vexillary input only.");
}
