#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "convert.hpp"
#include "numforge/textproc.hpp"

namespace numforge::bindings {

namespace tp = textproc;

namespace {

std::vector<tp::Token> tokens_in(const std::vector<std::string>& pieces) {
  return tp::tokens_from_rendered(pieces);
}

std::vector<std::string> tokens_out(const std::vector<tp::Token>& tokens) {
  return tp::tokens_to_rendered(tokens);
}

}  // namespace

void init_py_textproc(py::module_& m) {
  py::register_exception<tp::LengthExceeded>(m, "LengthExceeded", PyExc_ValueError);

  m.attr("MASK_TOKEN") = tp::kMaskToken;

  m.def("whitespace_tokenize",
        [](const std::string& text) { return tokens_out(tp::whitespace_tokenize(text)); },
        py::arg("text"));
  m.def("digit_tokenize",
        [](const std::vector<std::string>& pieces) {
          return tokens_out(tp::digit_tokenize(tokens_in(pieces)));
        },
        py::arg("pieces"),
        "Splits all-digit pieces into single digits; '##' marks continuations");
  m.def("detokenize",
        [](const std::vector<std::string>& pieces) { return tp::detokenize(tokens_in(pieces)); },
        py::arg("pieces"));

  py::class_<tp::ShiftResult>(m, "ShiftResult")
      .def_readonly("offset", &tp::ShiftResult::offset)
      .def_readonly("position_ids", &tp::ShiftResult::position_ids)
      .def("__repr__", [](const tp::ShiftResult& r) {
        return "ShiftResult(offset=" + std::to_string(r.offset) + ", n=" +
               std::to_string(r.position_ids.size()) + ")";
      });

  m.def("random_shift",
        [](int n_total, Rng& rng, int max_len) { return tp::random_shift(n_total, rng, max_len); },
        py::arg("n_total"), py::arg("rng"), py::arg("max_len") = 512,
        "Uniform position-id offset keeping ids below max_len");

  py::class_<tp::MaskedSample>(m, "MaskedSample")
      .def_property_readonly("tokens",
                             [](const tp::MaskedSample& s) { return tokens_out(s.tokens); })
      .def_readonly("mask_positions", &tp::MaskedSample::mask_positions)
      .def_property_readonly("originals",
                             [](const tp::MaskedSample& s) {
                               std::map<int, std::string> out;
                               for (const auto& [pos, tok] : s.originals) {
                                 out[pos] = tok.rendered();
                               }
                               return out;
                             })
      .def("restored", [](const tp::MaskedSample& s) { return tokens_out(s.restored()); })
      .def("to_json", [](const tp::MaskedSample& s) { return json_to_py(s.to_json()); })
      .def("__repr__", [](const tp::MaskedSample& s) {
        return "MaskedSample(" + std::to_string(s.tokens.size()) + " tokens, " +
               std::to_string(s.mask_positions.size()) + " masked)";
      });

  m.def("mlm_mask",
        [](const std::vector<std::string>& pieces, Rng& rng, double mask_p, int max_masks,
           int max_len) {
          tp::MlmConfig cfg;
          cfg.mask_p = mask_p;
          cfg.max_masks = max_masks;
          cfg.max_len = max_len;
          return tp::mlm_mask(tokens_in(pieces), rng, cfg);
        },
        py::arg("pieces"), py::arg("rng"), py::arg("mask_p") = 0.15,
        py::arg("max_masks") = 65, py::arg("max_len") = 512);

  m.def("mlm_filter_paragraph", &tp::mlm_filter_paragraph, py::arg("text"),
        py::arg("min_numbers") = 15,
        "True iff the paragraph holds at least min_numbers digit-bearing tokens");

  m.def("default_title_keywords", [] { return tp::default_title_keywords(); });
  m.def("title_matches_keywords",
        [](const std::string& title, std::optional<std::set<std::string>> keywords) {
          return keywords ? tp::title_matches_keywords(title, *keywords)
                          : tp::title_matches_keywords(title);
        },
        py::arg("title"), py::arg("keywords") = py::none());
}

}  // namespace numforge::bindings
