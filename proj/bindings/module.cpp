// Python bindings for the main operations: exact field arithmetic, the
// lattice model, distances, batch enumeration, and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eis/suites.hpp"

namespace py = pybind11;
using namespace eis;

namespace {

GeoContext& geo() {
  static GeoContext g;
  return g;
}

const AmbientVector& named_vector(const std::string& name) {
  auto& g = geo();
  if (name == "tau") return g.sp.tau;
  if (name == "rho") return g.sp.rho;
  if (name == "c") return g.sp.c;
  if (name == "p_inf") return g.sp.p_inf;
  if (name == "l_inf") return g.sp.l_inf;
  if (name == "tau_prime_a") return g.sp.tau_prime_a;
  if (name == "tau_prime_b") return g.sp.tau_prime_b;
  if (name == "tau_prime_q") return g.sp.tau_prime_q;
  if (name == "rho_prime") return g.sp.rho_prime;
  if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'l')) {
    int idx = std::atoi(name.c_str() + 1);
    if (idx >= 1 && idx <= 13) return name[0] == 'p' ? g.rt.p(idx) : g.rt.l(idx);
  }
  throw std::invalid_argument("unknown vector name: " + name);
}

}  // namespace

PYBIND11_MODULE(_eisverify, m) {
  m.doc() = "exact verification toolkit for the Eisenstein mirror arrangement";

  py::class_<CycElem>(m, "CycElem")
      .def(py::init([](const std::string& s) { return CycElem::parse(s); }))
      .def_static("omega", &CycElem::omega)
      .def_static("theta", &CycElem::theta)
      .def("__add__", [](const CycElem& a, const CycElem& b) { return a + b; })
      .def("__sub__", [](const CycElem& a, const CycElem& b) { return a - b; })
      .def("__mul__", [](const CycElem& a, const CycElem& b) { return a * b; })
      .def("__truediv__", [](const CycElem& a, const CycElem& b) { return a / b; })
      .def("__neg__", [](const CycElem& a) { return -a; })
      .def("__eq__", [](const CycElem& a, const CycElem& b) { return a == b; })
      .def("conj", &CycElem::conj)
      .def("is_real", &CycElem::is_real)
      .def("norm", [](const CycElem& a) { return CycElem(a.norm()).str(); })
      .def("__repr__", &CycElem::str)
      .def("__str__", &CycElem::str);

  m.def("real_sign", [](const std::string& s) { return CycElem::parse(s).re.sign(); },
        "exact sign of the real part of a field element");

  m.def("herm_pairing", [](const std::string& a, const std::string& b) {
    return herm(named_vector(a), named_vector(b)).str();
  });
  m.def("cosh_sq_dist", [](const std::string& a, const std::string& b) {
    return CycElem(cosh_sq_dist(named_vector(a), named_vector(b)).value).str();
  });
  m.def("sinh_sq_dist_to_mirror", [](const std::string& a, const std::string& root) {
    return CycElem(sinh_sq_dist_to_mirror(named_vector(a), named_vector(root)).value).str();
  });

  m.def("block_vector_counts", []() {
    auto& g = geo();
    return py::make_tuple(g.l4_norm3.size(), g.l4_norm6.size());
  });

  m.def("batch_table_counts", [](int max_batch) {
    std::vector<long> per_batch(4, 0);
    enumerate_center_table(geo(), max_batch,
                           [&](const RootVec&, int b, int) { per_batch[b]++; });
    per_batch.resize(max_batch + 1);
    return per_batch;
  });

  m.def("deflation", []() {
    auto rep = deflation_check();
    py::dict d;
    d["pass"] = rep.pass();
    d["translation"] = rep.translation;
    d["conjugate_rank"] = rep.conjugate_rank;
    return d;
  });

  m.def(
      "run_suites",
      [](const std::vector<std::string>& suites, const std::string& cache_dir, int batch_depth,
         int threads) {
        Config cfg;
        cfg.suites = suites;
        cfg.cache_dir = cache_dir;
        cfg.batch_depth = batch_depth;
        cfg.threads = threads;
        RunReport run = run_suites(cfg);
        py::module json = py::module::import("json");
        return json.attr("loads")(to_json(run).dump());
      },
      py::arg("suites"), py::arg("cache_dir") = ".eisverify-cache", py::arg("batch_depth") = 3,
      py::arg("threads") = 1);
}
