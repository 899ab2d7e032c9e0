#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "convert.hpp"
#include "numforge/metrics.hpp"

namespace numforge::bindings {

namespace {

metrics::GroupBy group_by_from(const std::string& name) {
  if (name == "all") return metrics::GroupBy::All;
  if (name == "none") return metrics::GroupBy::None;
  if (name == "type") return metrics::GroupBy::AnswerType;
  if (name == "augmentator") return metrics::GroupBy::Augmentator;
  throw py::value_error("group_by must be all, type, augmentator, or none");
}

}  // namespace

void init_py_metrics(py::module_& m) {
  m.def("canonical_number", &metrics::canonical_number, py::arg("token"),
        "Canonical numeral string, or None for non-numeric tokens");
  m.def("normalize_answer", &metrics::normalize_answer, py::arg("text"),
        "Scoring tokens: lowercased, split, articles dropped, numerals canonical");
  m.def("score_pair", &metrics::score_pair, py::arg("pred"), py::arg("gold"),
        "(exact_match, f1) for one prediction against one gold answer");
  m.def("answer_type_name", &metrics::answer_type_name, py::arg("answer"));

  py::class_<metrics::GroupScore>(m, "GroupScore")
      .def_readonly("count", &metrics::GroupScore::count)
      .def_readonly("em_sum", &metrics::GroupScore::em_sum)
      .def_readonly("f1_sum", &metrics::GroupScore::f1_sum)
      .def("em", &metrics::GroupScore::em)
      .def("f1", &metrics::GroupScore::f1)
      .def("__repr__", [](const metrics::GroupScore& g) {
        std::ostringstream out;
        out << "GroupScore(n=" << g.count << ", em=" << g.em() << ", f1=" << g.f1() << ")";
        return out.str();
      });

  py::class_<metrics::EvalReport>(m, "EvalReport")
      .def_readonly("overall", &metrics::EvalReport::overall)
      .def_readonly("by_type", &metrics::EvalReport::by_type)
      .def_readonly("by_augmentator", &metrics::EvalReport::by_augmentator)
      .def_readonly("augmentator_diff", &metrics::EvalReport::augmentator_diff)
      .def_readonly("missing", &metrics::EvalReport::missing)
      .def("to_json", [](const metrics::EvalReport& r) { return json_to_py(r.to_json()); })
      .def("table", &metrics::EvalReport::table)
      .def("__repr__", [](const metrics::EvalReport& r) {
        std::ostringstream out;
        out << "EvalReport(n=" << r.overall.count << ", em=" << r.overall.em() << ", f1="
            << r.overall.f1() << ")";
        return out.str();
      });

  m.def("evaluate",
        [](const DropDataset& gold, const std::map<std::string, Answer>& predictions,
           const std::string& group_by) {
          return metrics::evaluate(gold, predictions, group_by_from(group_by));
        },
        py::arg("gold"), py::arg("predictions"), py::arg("group_by") = "all",
        "Scores a query_id -> Answer mapping against a gold dataset");

  m.def("parse_predictions",
        [](const std::string& text) {
          std::istringstream in(text);
          return metrics::read_predictions(in);
        },
        py::arg("text"),
        "Parses JSONL lines of {query_id, answer} into a query_id -> Answer dict");
}

}  // namespace numforge::bindings
