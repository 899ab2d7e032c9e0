#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>

#include "convert.hpp"
#include "numforge/answer.hpp"
#include "numforge/date.hpp"
#include "numforge/decimal.hpp"
#include "numforge/rng.hpp"
#include "numforge/world.hpp"

namespace numforge::bindings {

py::object json_to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

ordered_json py_to_json(py::handle obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    ordered_json out = ordered_json::object();
    for (auto item : obj.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::sequence>(obj)) {
    ordered_json out = ordered_json::array();
    for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("value does not convert to JSON");
}

namespace {

Verb verb_from(const std::string& name) {
  auto v = verb_from_name(name);
  if (!v) throw py::value_error("unknown verb category: " + name);
  return *v;
}

ContainerKind container_kind_from(const std::string& name) {
  if (name == "agt") return ContainerKind::AGT;
  if (name == "env") return ContainerKind::ENV;
  throw py::value_error("container kind must be 'agt' or 'env', got '" + name + "'");
}

std::string container_kind_name(ContainerKind k) {
  return k == ContainerKind::AGT ? "agt" : "env";
}

std::string answer_kind_name(Answer::Kind k) {
  switch (k) {
    case Answer::Kind::Number: return "number";
    case Answer::Kind::Spans: return "spans";
    default: return "date";
  }
}

}  // namespace

void init_py_core(py::module_& m) {
  py::register_exception<NegativeCountError>(m, "NegativeCountError", PyExc_ValueError);

  py::class_<Decimal>(m, "Decimal")
      .def(py::init([](const std::string& text) {
             auto p = parse_number(text);
             if (!p) throw py::value_error("not a decimal: '" + text + "'");
             return p->value;
           }),
           py::arg("text"))
      .def(py::init([](std::int64_t v) { return Decimal::integer(v); }), py::arg("value"))
      .def_static("from_units", &Decimal::from_units, py::arg("units"), py::arg("scale"))
      .def_property_readonly("scale", &Decimal::scale)
      .def("is_zero", &Decimal::is_zero)
      .def("is_negative", &Decimal::is_negative)
      .def("times", &Decimal::times, py::arg("k"))
      .def("str_fixed", &Decimal::str_fixed, py::arg("decimals"))
      .def("str_grouped", &Decimal::str_grouped)
      .def("__add__", [](const Decimal& a, const Decimal& b) { return a + b; })
      .def("__sub__", [](const Decimal& a, const Decimal& b) { return a - b; })
      .def("__neg__", [](const Decimal& a) { return -a; })
      .def("__eq__", [](const Decimal& a, const Decimal& b) { return a == b; })
      .def("__lt__", [](const Decimal& a, const Decimal& b) { return a < b; })
      .def("__le__", [](const Decimal& a, const Decimal& b) { return a <= b; })
      .def("__gt__", [](const Decimal& a, const Decimal& b) { return a > b; })
      .def("__ge__", [](const Decimal& a, const Decimal& b) { return a >= b; })
      .def("__hash__", [](const Decimal& a) { return std::hash<std::int64_t>{}(a.units_at(2)); })
      .def("__str__", &Decimal::str)
      .def("__repr__", [](const Decimal& a) { return "Decimal('" + a.str() + "')"; });

  m.def("decimal_mean", [](const std::vector<Decimal>& xs) { return Decimal::mean(xs); },
        py::arg("values"), "Mean rounded half to even at two fractional digits");

  py::class_<DateValue>(m, "DateValue")
      .def(py::init([](int year, int month, int day) {
             if (!DateValue::valid(year, month, day)) {
               throw py::value_error("invalid calendar date");
             }
             return DateValue{year, month, day};
           }),
           py::arg("year"), py::arg("month"), py::arg("day"))
      .def_readonly("year", &DateValue::year)
      .def_readonly("month", &DateValue::month)
      .def_readonly("day", &DateValue::day)
      .def("serial", &DateValue::serial)
      .def("str_day_first", &DateValue::str_day_first)
      .def("str_month_first", &DateValue::str_month_first)
      .def("__eq__", [](const DateValue& a, const DateValue& b) { return a == b; })
      .def("__lt__", [](const DateValue& a, const DateValue& b) { return a < b; })
      .def("__repr__", [](const DateValue& d) {
        return "DateValue('" + d.str_day_first() + "')";
      });

  m.def("parse_date", [](const std::string& text) { return parse_date(text); },
        py::arg("text"), "Parses '05 April 112' or 'June 01, 112'; None if malformed");
  m.def("diff_days", &diff_days, py::arg("a"), py::arg("b"));
  m.def("diff_months", &diff_months, py::arg("a"), py::arg("b"));
  m.def("diff_years", &diff_years, py::arg("a"), py::arg("b"));

  py::class_<Answer>(m, "Answer")
      .def(py::init<>())
      .def_static("make_number",
                  [](py::handle v) {
                    if (py::isinstance<py::int_>(v)) {
                      return Answer::make_number(v.cast<std::int64_t>());
                    }
                    if (py::isinstance<Decimal>(v)) {
                      return Answer::make_number(v.cast<Decimal>());
                    }
                    auto p = parse_number(v.cast<std::string>());
                    if (!p) throw py::value_error("not a number");
                    Answer a;
                    a.kind = Answer::Kind::Number;
                    a.number = v.cast<std::string>();
                    return a;
                  },
                  py::arg("value"), "From an int, Decimal, or numeral string (style kept)")
      .def_static("make_span", &Answer::make_span, py::arg("text"))
      .def_static("make_spans", &Answer::make_spans, py::arg("spans"))
      .def_static("make_date",
                  [](int year, int month, int day) {
                    return Answer::make_date(DateValue{year, month, day});
                  },
                  py::arg("year"), py::arg("month"), py::arg("day"))
      .def_property_readonly("kind", [](const Answer& a) { return answer_kind_name(a.kind); })
      .def_readonly("number", &Answer::number)
      .def_readonly("spans", &Answer::spans)
      .def_readonly("date_day", &Answer::date_day)
      .def_readonly("date_month", &Answer::date_month)
      .def_readonly("date_year", &Answer::date_year)
      .def("to_json", [](const Answer& a) { return json_to_py(a.to_json()); })
      .def_static("from_json", [](py::handle j) { return Answer::from_json(py_to_json(j)); },
                  py::arg("value"))
      .def("__eq__", [](const Answer& a, const Answer& b) { return a == b; })
      .def("__repr__", [](const Answer& a) { return "Answer(" + a.to_json().dump() + ")"; });

  py::class_<QAPair>(m, "QAPair")
      .def(py::init([](std::string question, std::string query_id, Answer answer,
                       std::string skill) {
             QAPair qa;
             qa.question = std::move(question);
             qa.query_id = std::move(query_id);
             qa.answer = std::move(answer);
             qa.skill = std::move(skill);
             return qa;
           }),
           py::arg("question") = "", py::arg("query_id") = "", py::arg("answer") = Answer{},
           py::arg("skill") = "")
      .def_readwrite("question", &QAPair::question)
      .def_readwrite("query_id", &QAPair::query_id)
      .def_readwrite("answer", &QAPair::answer)
      .def_readwrite("skill", &QAPair::skill)
      .def("__eq__", [](const QAPair& a, const QAPair& b) { return a == b; })
      .def("__repr__", [](const QAPair& qa) {
        return "QAPair(query_id='" + qa.query_id + "', question='" + qa.question + "')";
      });

  py::class_<PassageEntry>(m, "PassageEntry")
      .def(py::init([](std::string passage, std::vector<QAPair> qa_pairs) {
             PassageEntry e;
             e.passage = std::move(passage);
             e.qa_pairs = std::move(qa_pairs);
             return e;
           }),
           py::arg("passage") = "", py::arg("qa_pairs") = std::vector<QAPair>{})
      .def_readwrite("passage", &PassageEntry::passage)
      .def_readwrite("qa_pairs", &PassageEntry::qa_pairs)
      .def("__eq__", [](const PassageEntry& a, const PassageEntry& b) { return a == b; });

  py::class_<DropDataset>(m, "DropDataset")
      .def(py::init<>())
      .def("add", &DropDataset::add, py::arg("passage_id"), py::arg("entry"))
      .def("find",
           [](const DropDataset& d, const std::string& id) -> std::optional<PassageEntry> {
             const PassageEntry* e = d.find(id);
             if (!e) return std::nullopt;
             return *e;
           },
           py::arg("passage_id"))
      .def_property_readonly("entries",
                             [](const DropDataset& d) { return d.entries(); })
      .def("passage_count", &DropDataset::passage_count)
      .def("qa_count", &DropDataset::qa_count)
      .def("to_json", [](const DropDataset& d) { return json_to_py(d.to_json()); })
      .def_static("from_json",
                  [](py::handle j) { return DropDataset::from_json(py_to_json(j)); },
                  py::arg("value"))
      .def("dumps", &DropDataset::dumps, py::arg("indent") = -1)
      .def_static("loads", &DropDataset::loads, py::arg("text"))
      .def("__len__", &DropDataset::passage_count);

  m.attr("ANY_ATTR") = kAnyAttr;

  py::class_<WorldEvent>(m, "WorldEvent")
      .def(py::init([](const std::string& verb, std::string container, std::string entity,
                       std::string attribute, std::int64_t amount, std::string other,
                       std::string word) {
             WorldEvent e;
             e.verb = verb_from(verb);
             e.container = std::move(container);
             e.entity = std::move(entity);
             e.attribute = std::move(attribute);
             e.amount = amount;
             e.other = std::move(other);
             e.word = std::move(word);
             return e;
           }),
           py::arg("verb"), py::arg("container"), py::arg("entity"), py::arg("attribute") = "",
           py::arg("amount") = 0, py::arg("other") = "", py::arg("word") = "")
      .def_property("verb", [](const WorldEvent& e) { return verb_name(e.verb); },
                    [](WorldEvent& e, const std::string& v) { e.verb = verb_from(v); })
      .def_readwrite("container", &WorldEvent::container)
      .def_readwrite("other", &WorldEvent::other)
      .def_readwrite("entity", &WorldEvent::entity)
      .def_readwrite("attribute", &WorldEvent::attribute)
      .def_readwrite("amount", &WorldEvent::amount)
      .def_readwrite("word", &WorldEvent::word)
      .def("__eq__", [](const WorldEvent& a, const WorldEvent& b) { return a == b; })
      .def("__repr__", [](const WorldEvent& e) {
        return "WorldEvent(" + verb_name(e.verb) + ", '" + e.container + "', '" + e.entity +
               "', " + std::to_string(e.amount) + ")";
      });

  m.def("verb_categories", [] {
    std::vector<std::string> names;
    for (int i = 0; i < 6; ++i) names.push_back(verb_name(static_cast<Verb>(i)));
    return names;
  });

  py::class_<WorldState>(m, "WorldState")
      .def(py::init<>())
      .def("register_container",
           [](WorldState& w, const std::string& name, const std::string& kind,
              const std::string& parent) {
             w.register_container(name, container_kind_from(kind), parent);
           },
           py::arg("name"), py::arg("kind"), py::arg("parent") = "")
      .def("is_registered", &WorldState::is_registered, py::arg("name"))
      .def("kind_of",
           [](const WorldState& w, const std::string& name) {
             return container_kind_name(w.kind_of(name));
           },
           py::arg("name"))
      .def("parent_of",
           [](const WorldState& w, const std::string& name) { return w.parent_of(name); },
           py::arg("name"))
      .def("apply", &WorldState::apply, py::arg("event"))
      .def("try_apply", &WorldState::try_apply, py::arg("event"))
      .def("total", &WorldState::total, py::arg("container"), py::arg("entity"),
           py::arg("attribute") = kAnyAttr)
      .def_property_readonly("events",
                             [](const WorldState& w) { return w.events(); })
      .def("keys", &WorldState::keys)
      .def("replayed", &WorldState::replayed)
      .def("counts_equal", &WorldState::counts_equal, py::arg("other"));

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &Rng::next)
      .def("below", &Rng::below, py::arg("n"))
      .def("range", &Rng::range, py::arg("lo"), py::arg("hi"))
      .def("uniform01", &Rng::uniform01)
      .def("bernoulli", &Rng::bernoulli, py::arg("p"));

  m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("tag"), py::arg("index"),
        "Stable per-record stream seed");
}

}  // namespace numforge::bindings
