#include <pybind11/pybind11.h>
PYBIND11_MODULE(_tropilift, m) { m.doc() = "tropilift"; }
