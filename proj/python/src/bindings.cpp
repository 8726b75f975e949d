#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charvar/groebner.hpp"
#include "charvar/io.hpp"
#include "charvar/numeric.hpp"
#include "charvar/relations.hpp"
#include "charvar/traces.hpp"

namespace py = pybind11;
using namespace charvar;

namespace {

// {"t{1,2}": value} -> Assignment
Assignment assignment_from(const std::map<std::string, std::complex<double>>& values) {
  Assignment a;
  for (const auto& [k, v] : values) a[parse_variable(k)] = v;
  return a;
}

MonomialOrder order_from(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw std::invalid_argument("order must be 'lex' or 'grevlex'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trace coordinates for SL(2,C) character varieties";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GroebnerLimitExceeded>(m, "GroebnerLimitExceeded", PyExc_RuntimeError);

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init<std::vector<int>, int>(), py::arg("letters"), py::arg("rank"))
      .def_property_readonly("letters", &FreeWord::letters)
      .def_property_readonly("rank", &FreeWord::rank)
      .def("to_letters", &FreeWord::to_letters)
      .def("__len__", &FreeWord::size)
      .def("__repr__", &FreeWord::to_string)
      .def(py::self == py::self);

  m.def("parse_word", &parse_word, py::arg("text"), py::arg("rank"));
  m.def("free_reduce", &free_reduce);
  m.def("cyclic_reduce", &cyclic_reduce);
  m.def("invert", &invert);

  py::class_<TraceVariable>(m, "TraceVariable")
      .def(py::init([](std::vector<int> s) { return TraceVariable(std::span<const int>(s)); }))
      .def_property_readonly("indices", [](const TraceVariable& v) {
        auto s = v.indices();
        return std::vector<int>(s.begin(), s.end());
      })
      .def("__repr__", &TraceVariable::to_string)
      .def("__str__", &TraceVariable::to_string)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const TraceVariable& v) { return py::hash(py::str(v.to_string())); });

  py::class_<TracePolynomial>(m, "TracePolynomial")
      .def(py::init<>())
      .def(py::init<int>())
      .def(py::init<const TraceVariable&>())
      .def(py::init([](const std::string& s) { return parse_polynomial(s); }))
      .def("is_zero", &TracePolynomial::is_zero)
      .def("total_degree", &TracePolynomial::total_degree)
      .def("variables", &TracePolynomial::variables)
      .def("__len__", &TracePolynomial::size)
      .def("__str__", [](const TracePolynomial& p) { return p.to_string(); })
      .def("__repr__", [](const TracePolynomial& p) { return "TracePolynomial('" + p.to_string() + "')"; })
      .def("__call__", [](const TracePolynomial& p, const std::map<std::string, std::complex<double>>& values) {
        return evaluate(p, assignment_from(values));
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", &TracePolynomial::pow);

  m.def("parse_polynomial", [](const std::string& s) { return parse_polynomial(s); });
  m.def("primitive_part", [](const TracePolynomial& p) { return primitive_part(p); });

  m.def("reduce_trace", py::overload_cast<const std::vector<int>&>(&reduce_trace), py::arg("letters"),
        "Trace polynomial of the word given as signed generator indices.");
  m.def("reduce_trace", py::overload_cast<const FreeWord&>(&reduce_trace), py::arg("word"));

  m.def("generators", &generators, py::arg("rank"));
  m.def("free_relations", &free_relations, py::arg("rank"));
  m.def("type1_relations", &type1_relations, py::arg("rank"));
  m.def("type2_relations", &type2_relations, py::arg("rank"));
  m.def("psl2_generators",
        [](int rank, int max_factors) {
          std::vector<std::string> out;
          for (const auto& mono : psl2_generators(rank, max_factors)) out.push_back(mono.to_string());
          return out;
        },
        py::arg("rank"), py::arg("max_factors") = 3);

  py::class_<GroupPresentation>(m, "GroupPresentation")
      .def(py::init<int, std::vector<FreeWord>>(), py::arg("rank"), py::arg("relators"))
      .def_property_readonly("rank", &GroupPresentation::rank)
      .def_property_readonly("relators", &GroupPresentation::relators)
      .def("__repr__", &GroupPresentation::to_string);

  py::class_<CharVarietyPresentation>(m, "CharVarietyPresentation")
      .def_readonly("rank", &CharVarietyPresentation::rank)
      .def_readonly("generators", &CharVarietyPresentation::generators)
      .def_readonly("free_relations", &CharVarietyPresentation::free_relations)
      .def_readonly("cutout_relations", &CharVarietyPresentation::cutout_relations)
      .def("all_relations", &CharVarietyPresentation::all_relations);

  m.def("parse_presentation", &parse_presentation, py::arg("text"));
  m.def("parse_snappy", &parse_snappy, py::arg("text"));
  m.def("full_presentation", &full_presentation, py::arg("presentation"));
  m.def("cutout_relations", [](const GroupPresentation& g) { return cutout_relations(g).relations; });

  m.def(
      "export_ideal",
      [](const CharVarietyPresentation& p, const std::string& format, const std::vector<FreeWord>& relators) {
        return export_ideal(p, parse_format(format), relators);
      },
      py::arg("presentation"), py::arg("format") = "text", py::arg("relators") = std::vector<FreeWord>{});
  m.def("import_ideal_json", [](const std::string& text) { return import_ideal_json(text).presentation; });

  m.def(
      "groebner_basis",
      [](const std::vector<TracePolynomial>& gens, const std::string& order, std::size_t max_pairs) {
        GroebnerOptions opts;
        opts.max_pairs = max_pairs;
        return buchberger(PolynomialIdeal(gens, order_from(order)), opts).basis();
      },
      py::arg("generators"), py::arg("order") = "grevlex", py::arg("max_pairs") = GroebnerOptions{}.max_pairs);
  m.def(
      "normal_form",
      [](const TracePolynomial& f, const std::vector<TracePolynomial>& gens, const std::string& order) {
        return normal_form(f, buchberger(PolynomialIdeal(gens, order_from(order))));
      },
      py::arg("f"), py::arg("generators"), py::arg("order") = "grevlex");
  m.def(
      "radical_member",
      [](const TracePolynomial& f, const std::vector<TracePolynomial>& gens) {
        return radical_member(f, PolynomialIdeal(gens));
      },
      py::arg("f"), py::arg("generators"));
  m.def(
      "radical_equal",
      [](const std::vector<TracePolynomial>& a, const std::vector<TracePolynomial>& b) {
        return radical_equal(PolynomialIdeal(a), PolynomialIdeal(b));
      },
      py::arg("a"), py::arg("b"));

  m.def("jacobian_independence", &jacobian_independence, py::arg("rank"), py::arg("seed") = 0,
        py::arg("duplicate_last_row") = false);
  m.def(
      "check_vanishing",
      [](const std::vector<TracePolynomial>& polys, int rank, int trials, double tol, std::uint64_t seed) {
        auto r = check_vanishing(polys, rank, trials, tol, seed);
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.polynomial, f.seed, f.magnitude));
        return failures;
      },
      py::arg("polynomials"), py::arg("rank"), py::arg("trials") = 100, py::arg("tol") = 1e-8, py::arg("seed") = 0,
      "List of (polynomial index, seed, |value|) for every failing point.");
  m.def(
      "eval_word",
      [](const FreeWord& w, int rank, std::uint64_t seed) { return eval_word(w, random_point(rank, seed)); },
      py::arg("word"), py::arg("rank"), py::arg("seed"));
  m.def(
      "random_traces",
      [](int rank, std::uint64_t seed) {
        std::map<std::string, std::complex<double>> out;
        for (const auto& [v, x] : assignment_of(random_point(rank, seed))) out[v.to_string()] = x;
        return out;
      },
      py::arg("rank"), py::arg("seed"));
}
