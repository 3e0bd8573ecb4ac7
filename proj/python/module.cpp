// Python bindings: thin JSON-string facade over the C++ core.

#include "symcry/geometry_model.hpp"
#include "symcry/half_quantum.hpp"
#include "symcry/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace symcry;

namespace {

CartanDatum datum_from(const std::string& cartan_json) {
    return cartan_from_json(Json::parse(cartan_json));
}

std::vector<long> build_dims(const std::string& cartan_json, long depth) {
    ModuleModel m(datum_from(cartan_json), depth);
    std::vector<long> dims;
    for (long n = 0; n <= depth; ++n) dims.push_back(m.dim_at_depth(n));
    return dims;
}

std::string crystal_graph_json(const std::string& cartan_json, long depth) {
    CartanDatum d = datum_from(cartan_json);
    ModuleModel m(d, depth);
    CrystalData c = build_crystal(m);
    return canonical_dump(graph_to_json(c.graph, d));
}

std::string crystal_graph_dot(const std::string& cartan_json, long depth) {
    CartanDatum d = datum_from(cartan_json);
    ModuleModel m(d, depth);
    CrystalData c = build_crystal(m);
    return graph_to_dot(c.graph, d);
}

std::string global_basis_json(const std::string& cartan_json, long depth, long dmax) {
    CartanDatum d = datum_from(cartan_json);
    ModuleModel m(d, depth);
    CrystalData c = build_crystal(m);
    GlobalBasisTable t = solve_global_all(m, c, dmax < 0 ? depth + 4 : dmax);
    compute_expansions(m, c, t);
    return canonical_dump(global_table_to_json(t));
}

std::map<std::string, bool> verify(const std::string& cartan_json, long depth, long dmax) {
    CartanDatum d = datum_from(cartan_json);
    ModuleModel m(d, depth);
    std::map<std::string, bool> out;
    out["relations"] = verify_relations(m).ok;
    out["adjointness"] = verify_adjointness(m).ok;
    out["divided-power"] = verify_divided_power(m).ok;
    out["highest-weight"] = highest_weight_check(m).ok;
    CrystalData c = build_crystal(m);
    out["crystal-anomalies"] = c.anomalies.ok;
    out["crystal-axioms"] = verify_crystal_axioms(m, c).ok;
    GlobalBasisTable t = solve_global_all(m, c, dmax < 0 ? depth + 4 : dmax);
    compute_expansions(m, c, t);
    out["balanced"] = verify_balanced(m, c, t).ok;
    out["estimates"] = verify_estimates(c.graph, t.expansions).ok;
    out["criterion"] = criterion_check(c.graph, t.expansions).ok;
    out["adapted"] = verify_adapted(m, c, t).ok;
    return out;
}

std::vector<long> folded_dims(const std::string& cartan_json, long depth) {
    return quotient_by_folding_ideal(depth, datum_from(cartan_json));
}

std::string qbinom_str(long n, long k) { return qbinom(n, k).str(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "theta-symmetric crystal/global-basis engine";
    m.def("build_dims", &build_dims, py::arg("cartan_json"), py::arg("depth"),
          "weight-space dimensions per depth");
    m.def("crystal_graph_json", &crystal_graph_json, py::arg("cartan_json"), py::arg("depth"));
    m.def("crystal_graph_dot", &crystal_graph_dot, py::arg("cartan_json"), py::arg("depth"));
    m.def("global_basis_json", &global_basis_json, py::arg("cartan_json"), py::arg("depth"),
          py::arg("dmax") = -1);
    m.def("verify", &verify, py::arg("cartan_json"), py::arg("depth"), py::arg("dmax") = -1,
          "run the verification suites, returning name -> ok");
    m.def("folded_dims", &folded_dims, py::arg("cartan_json"), py::arg("depth"));
    m.def("qbinom", &qbinom_str, py::arg("n"), py::arg("k"),
          "quantum binomial coefficient as a string");
}
