#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kix/corpus.hpp"
#include "kix/discharge.hpp"
#include "kix/io.hpp"
#include "kix/lab.hpp"
#include "kix/reduce.hpp"
#include "kix/solver.hpp"

namespace py = pybind11;
using namespace kix;

namespace {

PlaneMultigraph graph_from_text(const std::string& text) { return parse_graph_string(text); }

py::dict report_to_dict(const ReducibilityReport& r) {
    py::dict d;
    d["lemma"] = r.lemma_id;
    d["k"] = r.k;
    d["t"] = r.t;
    d["environments"] = r.total_environments;
    d["extendable"] = r.extendable;
    d["failures"] = r.failure_count;
    d["budget_exhausted"] = r.budget_exhausted;
    d["certified"] = r.certified;
    d["wall_seconds"] = r.wall_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kix, m) {
    m.doc() = "k-intersection edge-coloring toolkit";

    py::register_exception<Error>(m, "KixError");

    py::class_<PlaneMultigraph>(m, "PlaneMultigraph")
        .def_static("build", &PlaneMultigraph::build, py::arg("vertex_count"),
                    py::arg("edges"), py::arg("rotation"))
        .def_property_readonly("vertex_count", &PlaneMultigraph::vertex_count)
        .def_property_readonly("edge_count", &PlaneMultigraph::edge_count)
        .def("degree", &PlaneMultigraph::degree)
        .def("distance", &PlaneMultigraph::distance)
        .def("face_lengths",
             [](const PlaneMultigraph& g) {
                 std::vector<int> out;
                 for (const FaceWalk& f : g.faces()) out.push_back(f.length());
                 return out;
             })
        .def("two_vertices", &PlaneMultigraph::two_vertices)
        .def("cut_edges", &PlaneMultigraph::cut_edges)
        .def("parallel_pairs", &PlaneMultigraph::parallel_pairs)
        .def("__repr__", [](const PlaneMultigraph& g) {
            std::ostringstream os;
            os << "PlaneMultigraph(V=" << g.vertex_count() << ", E=" << g.edge_count()
               << ", F=" << g.faces().size() << ")";
            return os.str();
        });

    m.def("parse_graph", &graph_from_text, py::arg("text"));
    m.def("print_graph", &print_graph);
    m.def("load_graph", &load_graph);

    m.def(
        "is_good",
        [](const PlaneMultigraph& g, const std::vector<int>& colors, int k, int t) {
            PartialColoring phi{t, colors};
            return is_good(g, phi, k, t);
        },
        py::arg("graph"), py::arg("colors"), py::arg("k"), py::arg("t"));

    m.def(
        "solve",
        [](const PlaneMultigraph& g, int k, bool force) {
            SolverOptions opts;
            opts.force = force;
            SolveResult r = chromatic_index_k_intersection(g, k, opts);
            py::dict d;
            d["optimum"] = r.optimum;
            d["witness"] = r.witness.color;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("force") = false);

    m.def(
        "exists_good_coloring",
        [](const PlaneMultigraph& g, int k, int t) -> py::object {
            ExistsResult r = exists_good_coloring(g, k, t);
            if (!r.witness) return py::none();
            return py::cast(r.witness->color);
        },
        py::arg("graph"), py::arg("k"), py::arg("t"));

    m.def(
        "color5",
        [](const PlaneMultigraph& g) {
            PartialColoring phi = color5(g);
            return phi.color;
        },
        py::arg("graph"));

    m.def(
        "find_configuration",
        [](const PlaneMultigraph& g) { return find_configuration(g).describe(); },
        py::arg("graph"));

    m.def(
        "charges",
        [](const PlaneMultigraph& g) {
            AuditReport r = audit(g);
            py::dict d;
            d["total_initial"] = r.ledger.total_initial().str();
            d["total_final"] = r.ledger.total_final().str();
            py::list negatives;
            for (const NegativeElement& n : r.negatives) {
                py::dict e;
                e["element"] = n.element;
                e["charge"] = n.charge.str();
                negatives.append(e);
            }
            d["negatives"] = negatives;
            d["configuration"] = r.configuration;
            return d;
        },
        py::arg("graph"));

    m.def(
        "check_lemma",
        [](const std::string& id, int k, int t, double budget, int threads) {
            LabOptions opts;
            opts.budget_secs = budget;
            opts.threads = threads;
            return report_to_dict(verify_reducible(lab_template(id), k, t, opts));
        },
        py::arg("lemma_id"), py::arg("k") = 2, py::arg("t") = 5, py::arg("budget") = 600.0,
        py::arg("threads") = 1);

    m.def("lemma_ids", &lab_lemma_ids);

    m.def(
        "exhaustive_corpus",
        [](int max_vertices) {
            std::vector<std::string> out;
            for (const PlaneMultigraph& g : exhaustive_corpus(max_vertices))
                out.push_back(print_graph(g));
            return out;
        },
        py::arg("max_vertices"));

    m.def(
        "random_corpus",
        [](int max_vertices, std::uint64_t seed, int count) {
            std::vector<std::string> out;
            for (const PlaneMultigraph& g : random_corpus(max_vertices, seed, count))
                out.push_back(print_graph(g));
            return out;
        },
        py::arg("max_vertices"), py::arg("seed"), py::arg("count"));
}
