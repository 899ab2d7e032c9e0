#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convert.hpp"
#include "numforge/ndgen.hpp"
#include "numforge/tdgen.hpp"

namespace numforge::bindings {

namespace {

nd::Kind kind_from(const std::string& name) {
  auto k = nd::kind_from_name(name);
  if (!k) throw py::value_error("unknown template kind: '" + name + "'");
  return *k;
}

nd::Split split_from(const std::string& name) {
  auto s = nd::split_from_name(name);
  if (!s) throw py::value_error("split must be 'train' or 'dev', got '" + name + "'");
  return *s;
}

td::Skill skill_from(const std::string& name) {
  auto s = td::skill_from_name(name);
  if (!s) throw py::value_error("unknown skill: '" + name + "'");
  return *s;
}

td::Vocabulary vocabulary_from(py::handle v) {
  if (py::isinstance<py::str>(v)) return td::builtin_vocabulary(v.cast<std::string>());
  return td::Vocabulary::from_json(py_to_json(v));
}

}  // namespace

void init_py_gen(py::module_& m) {
  py::register_exception<nd::NdParseError>(m, "NdParseError", PyExc_ValueError);
  py::register_exception<td::AmbiguousBinding>(m, "AmbiguousBinding", PyExc_ValueError);
  py::register_exception<td::Unsatisfiable>(m, "Unsatisfiable", PyExc_RuntimeError);

  py::class_<nd::NdExample>(m, "NdExample")
      .def_property_readonly("kind",
                             [](const nd::NdExample& e) { return nd::kind_name(e.kind); })
      .def_property_readonly("split",
                             [](const nd::NdExample& e) { return nd::split_name(e.split); })
      .def_readonly("surface", &nd::NdExample::surface)
      .def_readonly("answer", &nd::NdExample::answer)
      .def("to_json", [](const nd::NdExample& e) { return json_to_py(nd::nd_to_json(e)); })
      .def("__repr__", [](const nd::NdExample& e) {
        return "NdExample('" + e.surface + "')";
      });

  m.def("nd_kinds", [] {
    std::vector<std::string> names;
    for (nd::Kind k : nd::all_kinds()) names.push_back(nd::kind_name(k));
    return names;
  });

  py::class_<nd::NumberPool>(m, "NumberPool")
      .def(py::init<std::uint64_t, double, std::int64_t>(), py::arg("seed"),
           py::arg("dev_fraction") = 0.1, py::arg("max_value") = 20000)
      .def("split_of",
           [](const nd::NumberPool& p, std::int64_t n) {
             return nd::split_name(p.split_of(n));
           },
           py::arg("n"))
      .def_property_readonly("max_value", &nd::NumberPool::max_value)
      .def("sample",
           [](const nd::NumberPool& p, const std::string& split, Rng& rng) {
             return p.sample(split_from(split), rng);
           },
           py::arg("split"), py::arg("rng"))
      .def("sample_in_range",
           [](const nd::NumberPool& p, const std::string& split, std::int64_t lo,
              std::int64_t hi, Rng& rng) {
             return p.sample_in_range(split_from(split), lo, hi, rng);
           },
           py::arg("split"), py::arg("lo"), py::arg("hi"), py::arg("rng"));

  py::class_<nd::NdGenerator>(m, "NdGenerator")
      .def(py::init([](std::uint64_t seed, double dev_fraction, std::int64_t pool_max,
                       std::vector<std::string> words) {
             nd::NdConfig cfg;
             cfg.seed = seed;
             cfg.dev_fraction = dev_fraction;
             cfg.pool_max = pool_max;
             cfg.words = std::move(words);
             return nd::NdGenerator(std::move(cfg));
           }),
           py::arg("seed"), py::arg("dev_fraction") = 0.1, py::arg("pool_max") = 20000,
           py::arg("words") = std::vector<std::string>{})
      .def("generate",
           [](const nd::NdGenerator& g, std::uint64_t index, const std::string& split,
              std::optional<std::string> kind) {
             std::optional<nd::Kind> k;
             if (kind) k = kind_from(*kind);
             return g.generate(index, split_from(split), k);
           },
           py::arg("index"), py::arg("split") = "train", py::arg("kind") = py::none())
      .def_property_readonly("pool", &nd::NdGenerator::pool,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("words", &nd::NdGenerator::words);

  m.def("nd_oracle",
        [](const std::string& surface, const std::string& kind) {
          return nd::nd_oracle(surface, kind_from(kind));
        },
        py::arg("surface"), py::arg("kind"),
        "Independently re-parses and evaluates a surface expression");

  m.def("date_difference",
        [](const DateValue& a, const DateValue& b, const std::string& unit) {
          nd::DateUnit u;
          if (unit == "days") u = nd::DateUnit::DAYS;
          else if (unit == "months") u = nd::DateUnit::MONTHS;
          else if (unit == "years") u = nd::DateUnit::YEARS;
          else throw py::value_error("unit must be days, months, or years");
          return nd::date_difference(a, b, u);
        },
        py::arg("a"), py::arg("b"), py::arg("unit") = "days");

  m.def("sample_dirichlet_split",
        [](int k, Rng& rng) { return nd::sample_dirichlet_split(k, rng); }, py::arg("k"),
        py::arg("rng"), "k rounded percentages summing to exactly 100");

  py::class_<td::VerbEntry>(m, "VerbEntry")
      .def(py::init([](std::string base, std::string past) {
             return td::VerbEntry{std::move(base), std::move(past)};
           }),
           py::arg("base") = "", py::arg("past") = "")
      .def_readwrite("base", &td::VerbEntry::base)
      .def_readwrite("past", &td::VerbEntry::past)
      .def("__eq__", [](const td::VerbEntry& a, const td::VerbEntry& b) { return a == b; })
      .def("__repr__", [](const td::VerbEntry& v) {
        return "VerbEntry('" + v.base + "', '" + v.past + "')";
      });

  m.def("td_skills", [] {
    std::vector<std::string> names;
    for (int i = 0; i < td::kSkillCount; ++i) {
      names.push_back(td::skill_name(static_cast<td::Skill>(i)));
    }
    return names;
  });

  m.def("builtin_vocabulary",
        [](const std::string& domain) {
          return json_to_py(td::builtin_vocabulary(domain).to_json());
        },
        py::arg("domain") = "history", "The bundled vocabulary as a JSON-shaped dict");

  py::class_<td::QuestionBinding>(m, "QuestionBinding")
      .def(py::init<>())
      .def_readwrite("template_id", &td::QuestionBinding::template_id)
      .def_property("skill",
                    [](const td::QuestionBinding& b) { return td::skill_name(b.skill); },
                    [](td::QuestionBinding& b, const std::string& s) {
                      b.skill = skill_from(s);
                    })
      .def_readwrite("containers", &td::QuestionBinding::containers)
      .def_readwrite("entity", &td::QuestionBinding::entity)
      .def_readwrite("attribute", &td::QuestionBinding::attribute)
      .def_readwrite("entity2", &td::QuestionBinding::entity2)
      .def_readwrite("attribute2", &td::QuestionBinding::attribute2)
      .def_readwrite("want_max", &td::QuestionBinding::want_max)
      .def_readwrite("complement", &td::QuestionBinding::complement)
      .def_readwrite("verb", &td::QuestionBinding::verb);

  m.def("render_question", &td::render_question, py::arg("binding"));
  m.def("td_oracle", &td::td_oracle, py::arg("world"), py::arg("binding"),
        "Recomputes the answer from the world state by brute force");

  py::class_<td::TdPassage>(m, "TdPassage")
      .def_readonly("sentences", &td::TdPassage::sentences)
      .def_readonly("world", &td::TdPassage::world)
      .def_readonly("qa_pairs", &td::TdPassage::qa_pairs)
      .def_readonly("bindings", &td::TdPassage::bindings)
      .def_readonly("verb_bases", &td::TdPassage::verb_bases)
      .def_readonly("reuse_eligible", &td::TdPassage::reuse_eligible)
      .def_readonly("reuse_hits", &td::TdPassage::reuse_hits)
      .def("passage_text", &td::TdPassage::passage_text)
      .def("__repr__", [](const td::TdPassage& p) {
        return "TdPassage(" + std::to_string(p.sentences.size()) + " sentences, " +
               std::to_string(p.qa_pairs.size()) + " questions)";
      });

  py::class_<td::TdGenerator>(m, "TdGenerator")
      .def(py::init([](std::uint64_t seed, py::handle vocab, double reuse_p,
                       std::int64_t num_lo, std::int64_t num_hi, int question_quota,
                       int min_sentences, int max_sentences) {
             td::TdConfig cfg;
             cfg.seed = seed;
             cfg.vocab = vocabulary_from(vocab);
             cfg.reuse_p = reuse_p;
             cfg.num_lo = num_lo;
             cfg.num_hi = num_hi;
             cfg.question_quota = question_quota;
             cfg.min_sentences = min_sentences;
             cfg.max_sentences = max_sentences;
             return td::TdGenerator(std::move(cfg));
           }),
           py::arg("seed"), py::arg("vocab") = "history", py::arg("reuse_p") = 0.7,
           py::arg("num_lo") = 2, py::arg("num_hi") = 10000, py::arg("question_quota") = 8,
           py::arg("min_sentences") = 3, py::arg("max_sentences") = 6)
      .def("generate", &td::TdGenerator::generate, py::arg("index"));

  m.def("td_record_json",
        [](const td::TdPassage& p, std::size_t qa_index) {
          return json_to_py(td::td_record_json(p, qa_index));
        },
        py::arg("passage"), py::arg("qa_index"));
}

}  // namespace numforge::bindings
