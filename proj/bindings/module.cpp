#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace numforge::bindings {
void init_py_core(py::module_& m);
void init_py_gen(py::module_& m);
void init_py_textproc(py::module_& m);
void init_py_augment(py::module_& m);
void init_py_metrics(py::module_& m);
}  // namespace numforge::bindings

PYBIND11_MODULE(_numforge, m) {
  m.doc() = "Deterministic generator, augmentator and scorer for synthetic "
            "numerical and textual QA data";
  numforge::bindings::init_py_core(m);
  numforge::bindings::init_py_gen(m);
  numforge::bindings::init_py_textproc(m);
  numforge::bindings::init_py_augment(m);
  numforge::bindings::init_py_metrics(m);
}
