#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "convert.hpp"
#include "numforge/augment.hpp"

namespace numforge::bindings {

namespace {

aug::RangeMode range_mode_from(const std::string& name) {
  if (name == "add") return aug::RangeMode::Add;
  if (name == "multiply") return aug::RangeMode::Multiply;
  throw py::value_error("range mode must be 'add' or 'multiply', got '" + name + "'");
}

}  // namespace

void init_py_augment(py::module_& m) {
  py::register_exception<aug::UnknownAugmentator>(m, "UnknownAugmentator", PyExc_ValueError);

  py::class_<aug::NumberSpan>(m, "NumberSpan")
      .def_readonly("begin", &aug::NumberSpan::begin)
      .def_readonly("end", &aug::NumberSpan::end)
      .def_readonly("value", &aug::NumberSpan::value)
      .def_readonly("decimals", &aug::NumberSpan::decimals)
      .def_readonly("grouped", &aug::NumberSpan::grouped)
      .def("surface", &aug::NumberSpan::surface, py::arg("text"))
      .def("__repr__", [](const aug::NumberSpan& s) {
        return "NumberSpan(" + s.value.str() + " at " + std::to_string(s.begin) + ".." +
               std::to_string(s.end) + ")";
      });

  m.def("extract_numbers", &aug::extract_numbers, py::arg("text"),
        "Styled numerals with byte spans, ascending and non-overlapping");
  m.def("render_like", &aug::render_like, py::arg("value"), py::arg("decimals") = 0,
        py::arg("grouped") = false);

  py::class_<aug::AntonymLexicon>(m, "AntonymLexicon")
      .def(py::init<>())
      .def_static("builtin", &aug::AntonymLexicon::builtin)
      .def("add_pair", &aug::AntonymLexicon::add_pair, py::arg("a"), py::arg("b"))
      .def("load_lines", &aug::AntonymLexicon::load_lines, py::arg("text"))
      .def("antonym", &aug::AntonymLexicon::antonym, py::arg("word"))
      .def("contains", &aug::AntonymLexicon::contains, py::arg("word"))
      .def("word_count", &aug::AntonymLexicon::word_count)
      .def("__contains__",
           [](const aug::AntonymLexicon& lex, const std::string& w) { return lex.contains(w); })
      .def("__len__", &aug::AntonymLexicon::word_count);

  py::class_<aug::ComparisonParse>(m, "ComparisonParse")
      .def_readonly("comparative", &aug::ComparisonParse::comparative)
      .def_readonly("option_a", &aug::ComparisonParse::option_a)
      .def_readonly("option_b", &aug::ComparisonParse::option_b)
      .def_readonly("stem", &aug::ComparisonParse::stem)
      .def_readonly("comparative_begin", &aug::ComparisonParse::comparative_begin)
      .def("__repr__", [](const aug::ComparisonParse& p) {
        return "ComparisonParse('" + p.comparative + "', '" + p.option_a + "', '" +
               p.option_b + "')";
      });

  m.def("parse_comparison_question",
        [](const std::string& question, std::optional<aug::AntonymLexicon> lexicon) {
          return aug::parse_comparison_question(
              question, lexicon ? *lexicon : aug::AntonymLexicon::builtin());
        },
        py::arg("question"), py::arg("lexicon") = py::none());

  m.def("locate_operand", &aug::locate_operand, py::arg("passage"), py::arg("entity"),
        "The numeral correlated with an entity mention, or None");
  m.def("locate_year", &aug::locate_year, py::arg("passage"), py::arg("entity"));

  py::class_<aug::AugmentConfig>(m, "AugmentConfig")
      .def(py::init([](std::uint64_t seed, std::int64_t patch_number,
                       const std::string& range_mode, std::int64_t range_addend,
                       std::int64_t range_factor,
                       std::optional<aug::AntonymLexicon> lexicon) {
             aug::AugmentConfig cfg;
             cfg.seed = seed;
             cfg.patch_number = patch_number;
             cfg.range_mode = range_mode_from(range_mode);
             cfg.range_addend = range_addend;
             cfg.range_factor = range_factor;
             if (lexicon) cfg.lexicon = std::move(*lexicon);
             return cfg;
           }),
           py::arg("seed") = 0, py::arg("patch_number") = 63, py::arg("range_mode") = "add",
           py::arg("range_addend") = 1000, py::arg("range_factor") = 2,
           py::arg("lexicon") = py::none())
      .def_readwrite("seed", &aug::AugmentConfig::seed)
      .def_readwrite("patch_number", &aug::AugmentConfig::patch_number)
      .def_property("range_mode",
                    [](const aug::AugmentConfig& c) {
                      return c.range_mode == aug::RangeMode::Add ? "add" : "multiply";
                    },
                    [](aug::AugmentConfig& c, const std::string& v) {
                      c.range_mode = range_mode_from(v);
                    })
      .def_readwrite("range_addend", &aug::AugmentConfig::range_addend)
      .def_readwrite("range_factor", &aug::AugmentConfig::range_factor)
      .def_readwrite("lexicon", &aug::AugmentConfig::lexicon);

  py::class_<aug::AugmentedExample>(m, "AugmentedExample")
      .def_readonly("origin_query_id", &aug::AugmentedExample::origin_query_id)
      .def_readonly("augmentator", &aug::AugmentedExample::augmentator)
      .def_readonly("passage", &aug::AugmentedExample::passage)
      .def_readonly("question", &aug::AugmentedExample::question)
      .def_readonly("answer", &aug::AugmentedExample::answer)
      .def_property_readonly("query_id", &aug::AugmentedExample::query_id)
      .def("__repr__", [](const aug::AugmentedExample& e) {
        return "AugmentedExample('" + e.query_id() + "')";
      });

  m.def("augmentator_names", [] { return aug::augmentator_names(); },
        "The twelve single augmentators in canonical order");
  m.def("default_augmentator_names", &aug::default_augmentator_names,
        "The twelve plus the shipped composition");

  m.def("apply_augmentator",
        [](const std::string& name, const std::string& passage, const QAPair& qa,
           std::optional<aug::AugmentConfig> config) {
          return aug::apply_augmentator(name, passage, qa,
                                        config ? *config : aug::AugmentConfig{});
        },
        py::arg("name"), py::arg("passage"), py::arg("qa"), py::arg("config") = py::none(),
        "One augmentator or a '+'-joined pipeline; None when the pattern does not match");

  m.def("augment_dataset",
        [](const DropDataset& dataset, std::optional<std::vector<std::string>> names,
           std::optional<aug::AugmentConfig> config) {
          return aug::augment_dataset(dataset,
                                      names ? *names : aug::default_augmentator_names(),
                                      config ? *config : aug::AugmentConfig{});
        },
        py::arg("dataset"), py::arg("names") = py::none(), py::arg("config") = py::none(),
        "Returns (augmented dataset, per-augmentator counts)");
}

}  // namespace numforge::bindings
