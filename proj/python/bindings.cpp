#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logenr/enumeration.hpp"
#include "logenr/error.hpp"

namespace py = pybind11;
using namespace logenr;

namespace {

ModelCase model_case(const std::string& name) {
    if (auto c = parse_model_case(name)) return *c;
    throw py::value_error("unknown case: " + name);
}

LocalModel local(const std::string& name) {
    for (auto m : {LocalModel::Z2, LocalModel::Z3, LocalModel::NodeReducible, LocalModel::NodeIrreducible})
        if (to_string(m) == name) return m;
    throw py::value_error("unknown local model: " + name);
}

SymMatrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> q;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw py::value_error("matrix must be square");
        auto& out = q.emplace_back();
        for (const auto& s : row) out.push_back(Rational::parse(s));
    }
    return SymMatrix::from_rows(q);
}

py::dict record_dict(const CatalogRecord& r) {
    py::dict d;
    d["case"] = std::string(to_string(r.model));
    d["t"] = r.t.labels();
    d["valid"] = r.valid;
    d["reason"] = r.reason ? py::object(py::str(std::string(to_string(*r.reason)))) : py::object(py::none());
    d["c1_sq"] = r.c1_sq.str();
    d["c2_sq"] = r.c2_sq.str();
    d["c1_c2"] = r.c1_c2.str();
    d["rho"] = r.rho;
    d["rank_delta"] = r.rank_delta;
    return d;
}

}  // namespace

PYBIND11_MODULE(_logenr, m) {
    m.doc() = "Exact enumeration of log-terminal surfaces from two singular plane models";

    py::register_exception<Error>(m, "LogenrError", PyExc_ValueError);

    m.def("det", [](const std::vector<std::vector<std::string>>& rows) { return det_exact(to_matrix(rows)).str(); },
          "Exact determinant of a square matrix of rational strings.");
    m.def("is_negative_definite",
          [](const std::vector<std::vector<std::string>>& rows) { return is_negative_definite(to_matrix(rows)); });

    m.def("extract", [](const std::string& model) {
        const LogPair p = extract_zero_discrepancy(local_model(local(model)));
        py::dict drops;
        for (const auto& b : p.boundary_ids) drops[py::str(b)] = boundary_drop(p, b).str();
        py::dict out;
        out["vertices"] = p.graph.size();
        out["circles"] = p.graph.ids_of_kind(CurveKind::Circle).size();
        out["drops"] = drops;
        return out;
    }, "Maximal discrepancy-zero extraction of a local model (z2, z3, nc-red, nc-irr).");

    m.def("graph_json", [](const std::string& c, const std::string& what) {
        const ModelCase mc = model_case(c);
        if (what == "minimal") return to_json_text(serialize(minimal_resolution_graph(mc).graph));
        if (what == "golden") return to_json_text(serialize(golden_graph(mc).graph));
        if (what == "maximal") return to_json_text(serialize(maximal_extraction(mc).graph));
        throw py::value_error("what must be minimal, golden or maximal");
    }, py::arg("case"), py::arg("what") = "golden");

    m.def("check_subset", [](const std::string& c, const std::vector<int>& t) {
        return record_dict(is_valid_surface(model_case(c), SubsetT::from_labels(t)));
    }, py::arg("case"), py::arg("t"));

    m.def("theorem_predicate", [](const std::string& c, const std::vector<int>& t) {
        return evaluate_predicate(model_case(c), SubsetT::from_labels(t)).holds;
    }, py::arg("case"), py::arg("t"));

    m.def("summary", [](const std::string& c) {
        const ModelCase mc = model_case(c);
        const CatalogSummary s = summarize(mc, enumerate_catalog(mc));
        return py::dict(py::arg("valid_raw") = s.valid_raw, py::arg("valid_mod_symmetry") = s.valid_mod_symmetry);
    }, py::arg("case"), "Brute-force counts over all 2^15 subsets (a few seconds).");

    m.def("verify", [](const std::string& c) {
        const VerificationReport r = verify_theorem(model_case(c));
        return py::dict(py::arg("oracle_valid") = r.oracle_valid, py::arg("predicate_valid") = r.predicate_valid,
                        py::arg("mismatches") = r.mismatches.size());
    }, py::arg("case"));
}
