#include <pybind11/pybind11.h>
PYBIND11_MODULE(darboux_engine, m) { m.doc() = "placeholder"; }
