#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "anncode/anngame.hpp"
#include "anncode/codes.hpp"
#include "anncode/errors.hpp"
#include "anncode/lexicode.hpp"
#include "anncode/reference_checks.hpp"
#include "anncode/solver.hpp"

namespace py = pybind11;
using namespace anncode;

namespace {

using Words = std::vector<std::uint64_t>;

py::dict summary_dict(const Code& c) {
    const CodeSummary s = summarize(c);
    py::dict d;
    d["n"] = s.length;
    d["size"] = s.size;
    d["dim"] = s.dimension ? py::cast(*s.dimension) : py::none();
    d["d"] = s.min_distance ? py::cast(*s.min_distance) : py::none();
    d["linear"] = s.linear;
    d["basis"] = s.basis;
    return d;
}

OrderingSpec ordering_from_rows(const std::vector<std::string>& rows, std::optional<int> m) {
    const Gf2Matrix w = Gf2Matrix::from_rows(rows);
    return make_ordering(w, m.value_or(w.n_cols()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Annihilation-game codes and lexicodes";

    auto base = py::register_exception<Error>(m, "AnncodeError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ScaleCapError>(m, "ScaleCapError", base.ptr());

    py::class_<GroundGraph>(m, "GroundGraph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def("add_edge", &GroundGraph::add_edge, py::arg("u"), py::arg("v"))
        .def("has_edge", &GroundGraph::has_edge)
        .def("followers", &GroundGraph::followers)
        .def("sinks", &GroundGraph::sinks)
        .def("set_label", &GroundGraph::set_label)
        .def("label", &GroundGraph::label)
        .def_property_readonly("size", &GroundGraph::size)
        .def_property_readonly("edge_count", &GroundGraph::edge_count)
        .def("__len__", &GroundGraph::size)
        .def("__eq__", [](const GroundGraph& a, const GroundGraph& b) { return a == b; })
        .def("__str__", &serialize_graph);

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
    m.def("serialize_graph", &serialize_graph);
    m.def("is_acyclic", &is_acyclic);
    m.def("disjoint_sum", &disjoint_sum);
    m.def("nim_heap", &nim_heap, py::arg("k"));
    m.def("star_into_leaf", &star_into_leaf, py::arg("k"));
    m.def("example2_graph", &example2_graph);
    m.def("gamma_t", &gamma_t, py::arg("t"));

    py::class_<SolvedAnnGame>(m, "Solution")
        .def_property_readonly("width", [](const SolvedAnnGame& s) { return s.ann.game.width(); })
        .def_property_readonly("size", [](const SolvedAnnGame& s) { return s.outcomes.size(); })
        .def("outcome", [](const SolvedAnnGame& s, Position p) {
            return std::string(1, outcome_char(s.outcomes.at(p)));
        })
        .def("gamma", [](const SolvedAnnGame& s, Position p) -> py::object {
            const auto u = static_cast<GameGraph::Node>(p);
            if (!s.gamma.is_finite(u)) return py::none();
            return py::cast(s.gamma.at(u).value());
        }, "Finite gamma value, or None for an infinite one.")
        .def("exits", [](const SolvedAnnGame& s, Position p) {
            return s.gamma.at(static_cast<GameGraph::Node>(p)).exits();
        })
        .def("counter", [](const SolvedAnnGame& s, Position p) {
            return s.gamma.counter(static_cast<GameGraph::Node>(p));
        })
        .def("followers", [](const SolvedAnnGame& s, Position p) { return s.ann.game.followers(p); })
        .def("position_of", [](const SolvedAnnGame& s, const std::vector<Vertex>& tokens) {
            return s.ann.game.position_of(tokens);
        })
        .def("p_positions", [](const SolvedAnnGame& s) {
            Words out;
            for (std::size_t p = 0; p < s.outcomes.size(); ++p) {
                if (s.outcomes[p] == Outcome::P) out.push_back(p);
            }
            return out;
        })
        .def("audit", [](const SolvedAnnGame& s) { return audit_gamma_table(s.ann.graph, s.gamma); });

    m.def("solve", &solve_anngame, py::arg("graph"), py::arg("project_sinks") = true,
          py::arg("max_coordinates") = kDefaultMaxCoordinates);
    m.def("anncode_of", [](const GroundGraph& g, bool project, int cap) {
        return anncode_of(g, project, cap).words();
    }, py::arg("graph"), py::arg("project_sinks") = true, py::arg("max_coordinates") = kDefaultMaxCoordinates);

    m.def("analyze", [](int n, const Words& words) { return summary_dict(Code(n, words)); },
          py::arg("n"), py::arg("words"));
    m.def("hamming", [](std::uint64_t a, std::uint64_t b) { return hamming(a, b); });
    m.def("span", [](const Words& basis) { return span_enumerate(basis); }, py::arg("basis"));

    m.def("ordering", [](const std::vector<std::string>& rows, std::optional<int> mm) {
        return ordering_from_rows(rows, mm).elements();
    }, py::arg("rows"), py::arg("m") = py::none(), "Ordered span; rows are given top first.");
    m.def("lexicode", [](const std::vector<std::string>& rows, int d, std::optional<int> mm,
                         const std::string& order) {
        const OrderingSpec o = ordering_from_rows(rows, mm);
        if (order == "index") return greedy(o, d).selected;
        if (order == "value") return greedy_value_ordered(o.elements(), d).selected;
        throw PreconditionError("order must be 'index' or 'value'");
    }, py::arg("rows"), py::arg("d"), py::arg("m") = py::none(), py::arg("order") = "index",
       "Greedy selection order.");
    m.def("greedy", [](const Words& seq, int d) { return greedy(seq, d).selected; },
          py::arg("sequence"), py::arg("d"));
    m.def("lexi_anncode", [](const Words& basis, int d) { return lexi_anncode(basis, d).selected; },
          py::arg("basis"), py::arg("d"));
    m.def("lexigraph_g", [](const std::vector<std::string>& rows, int d, std::optional<int> mm) {
        const Lexigraph lg = build_lexigraph(ordering_from_rows(rows, mm), d);
        return py::make_tuple(lg.vectors, lg.g);
    }, py::arg("rows"), py::arg("d"), py::arg("m") = py::none());

    m.def("reference_checks", [] {
        py::list out;
        for (const CheckResult& r : run_reference_checks()) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
    });

    m.attr("GAMMA_PRIME_BASIS") = Words(kGammaPrimeBasis.begin(), kGammaPrimeBasis.end());
    m.attr("GAMMA_PRIME_WIDTH") = kGammaPrimeWidth;
}
