#pragma once

#include <pybind11/pybind11.h>

#include "json.hpp"

namespace numforge::bindings {

namespace py = pybind11;
using ordered_json = nlohmann::ordered_json;

// Deep conversion between json values and native python objects.
py::object json_to_py(const ordered_json& j);
ordered_json py_to_json(py::handle obj);

}  // namespace numforge::bindings
