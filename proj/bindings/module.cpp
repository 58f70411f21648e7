#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cofull/cache.hpp"
#include "cofull/error.hpp"
#include "cofull/session.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> run_session_text(const std::string& text, int e_max,
                                          int threads,
                                          const std::string& cache_dir) {
  if (!cache_dir.empty()) cofull::gb_cache().set_dir(cache_dir);
  cofull::RunOptions opt;
  opt.e_max = e_max;
  opt.threads = threads;
  return cofull::run_session(cofull::parse_session(text), opt);
}

std::string parse_check(const std::string& text) {
  return cofull::print_session(cofull::parse_session(text));
}

}  // namespace

PYBIND11_MODULE(_cofull, m) {
  m.doc() = "exact fullness and local cohomology workbench";

  static py::exception<cofull::Error> parse_exc(m, "ParseError");
  static py::exception<cofull::Error> pre_exc(m, "PreconditionError");
  static py::exception<cofull::Error> internal_exc(m, "InternalError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cofull::Error& e) {
      std::string msg = "[" + e.code() + "] " + e.what();
      switch (e.error_class()) {
        case cofull::ErrorClass::Parse:
          py::set_error(parse_exc, msg.c_str());
          break;
        case cofull::ErrorClass::Precondition:
          py::set_error(pre_exc, msg.c_str());
          break;
        case cofull::ErrorClass::Internal:
          py::set_error(internal_exc, msg.c_str());
          break;
      }
    }
  });

  m.def("run_session", &run_session_text, py::arg("text"), py::arg("e_max") = 1,
        py::arg("threads") = 0, py::arg("cache_dir") = std::string(),
        py::call_guard<py::gil_scoped_release>(),
        "Run a session and return one JSON report string per command.");
  m.def("parse_check", &parse_check, py::arg("text"),
        "Parse a session and return its canonical printed form.");
  m.def("set_cache_dir",
        [](const std::string& dir) { cofull::gb_cache().set_dir(dir); },
        py::arg("dir"), "Point the Groebner basis cache at a directory.");
  m.def("version", [] { return std::string("cofull 1.0.0"); });
}
