#include "anncode/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "anncode/codes.hpp"
#include "anncode/errors.hpp"
#include "anncode/lexicode.hpp"
#include "anncode/reference_checks.hpp"
#include "anncode/solver.hpp"

namespace anncode::cli {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
    bool json = false;
    bool quiet = false;
    bool timing = false;
    int max_coords = kDefaultMaxCoordinates;
    int max_lexi_m = kDefaultMaxLexiDimension;
};

/// Unreadable input file; reported with the parse exit code.
class InputError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string bits(std::uint64_t v, int width) { return BitVec(width, v).to_string(); }

/// Run report: command echo, input digests, outputs and checks. Rendered as
/// JSON with --json; text commands print as they go and only use the checks.
class Report {
public:
    Report(std::string command, const GlobalOptions& opts)
        : opts_(opts), start_(std::chrono::steady_clock::now()) {
        j_["command"] = std::move(command);
        j_["inputs"] = Json::object();
        j_["outputs"] = Json::object();
        j_["checks"] = Json::array();
    }

    void input(const std::string& key, const std::string& path, const std::string& bytes) {
        j_["inputs"][key] = {{"path", path}, {"digest", "fnv1a64:" + fnv1a64(bytes)}};
    }
    void parameter(const std::string& key, Json value) { j_["inputs"][key] = std::move(value); }
    Json& outputs() { return j_["outputs"]; }

    void check(const std::string& name, bool passed, const std::string& detail = {}) {
        j_["checks"].push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
        if (!passed && !first_failure_) first_failure_ = name + (detail.empty() ? "" : ": " + detail);
    }

    bool ok() const { return !first_failure_; }

    int finish(std::ostream& out, std::ostream& err) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
                .count();
        if (opts_.json) {
            j_["ok"] = ok();
            if (opts_.timing) j_["wall_time_ms"] = ms;
            out << j_.dump(2) << '\n';
        } else if (opts_.timing) {
            out << "wall time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
        }
        if (first_failure_) {
            err << "anncode: check failed: " << *first_failure_ << '\n';
            return kCheckFailed;
        }
        return kOk;
    }

private:
    const GlobalOptions& opts_;
    std::chrono::steady_clock::time_point start_;
    Json j_;
    std::optional<std::string> first_failure_;
};

Json code_json(const Code& c) {
    const CodeSummary s = summarize(c);
    Json j;
    j["n"] = s.length;
    j["size"] = s.size;
    j["dim"] = s.dimension ? Json(*s.dimension) : Json(nullptr);
    j["d"] = s.min_distance ? Json(*s.min_distance) : Json(nullptr);
    j["linear"] = s.linear;
    j["basis"] = Json::array();
    for (std::uint64_t b : s.basis) j["basis"].push_back(bits(b, s.length));
    return j;
}

void print_code(std::ostream& out, const Code& c, const GlobalOptions& opts) {
    const CodeSummary s = summarize(c);
    if (!opts.quiet) {
        out << "code: n = " << s.length << ", size = " << s.size << ", dim = "
            << (s.dimension ? std::to_string(*s.dimension) : "-") << ", d = "
            << (s.min_distance ? std::to_string(*s.min_distance) : "undefined")
            << ", linear = " << (s.linear ? "yes" : "no") << '\n';
    }
    for (std::uint64_t w : c.words()) out << "  " << bits(w, c.length()) << "  " << w << '\n';
}

void print_sequence(std::ostream& out, const std::string& label,
                    const std::vector<std::uint64_t>& v) {
    out << label << ':';
    for (std::uint64_t x : v) out << ' ' << x;
    out << '\n';
}

Json greedy_json(const GreedyResult& r, int width) {
    Json j;
    j["order"] = r.ordering;
    j["d"] = r.d;
    j["selected"] = r.selected;
    j["selected_bits"] = Json::array();
    for (std::uint64_t v : r.selected) j["selected_bits"].push_back(bits(v, width));
    return j;
}

void report_greedy(Report& rep, const GreedyResult& r, int width, std::ostream& out,
                   const GlobalOptions& opts) {
    const Code code(width, r.selected);
    const auto d = min_distance(code);
    rep.check("pairwise_distance", !d || *d >= r.d,
              "min distance " + (d ? std::to_string(*d) : std::string("undefined")) + ", d = " +
                  std::to_string(r.d));
    rep.outputs()["greedy"] = greedy_json(r, width);
    rep.outputs()["code"] = code_json(code);
    if (!opts.json) {
        print_sequence(out, "selection order", r.selected);
        print_code(out, code, opts);
    }
}

// ---------------------------------------------------------------------------

int cmd_lexicode_gen(const GlobalOptions& opts, const std::string& path, int d,
                     std::optional<int> m, const std::string& order, std::ostream& out,
                     std::ostream& err) {
    Report rep("lexicode gen", opts);
    const std::string text = read_file(path);
    rep.input("matrix", path, text);
    const Gf2Matrix w = parse_matrix(text);
    const int dim = m.value_or(w.n_cols());
    if (dim > opts.max_lexi_m) throw ScaleCapError("lexicode dimension m", dim, opts.max_lexi_m);
    const OrderingSpec ordering = make_ordering(w, dim);
    rep.parameter("d", d);
    rep.parameter("m", dim);
    rep.parameter("order", order);

    const GreedyResult r =
        order == "value" ? greedy_value_ordered(ordering.elements(), d) : greedy(ordering, d);
    rep.outputs()["rows"] = ordering.rows();
    if (!opts.json && !opts.quiet) {
        out << "ordering: " << order << ", m = " << dim << ", rows";
        for (int i : ordering.rows()) out << ' ' << i;
        out << ", d = " << d << '\n';
    }
    report_greedy(rep, r, ordering.width(), out, opts);
    return rep.finish(out, err);
}

int cmd_lexi_anncode(const GlobalOptions& opts, const std::string& path, int d, std::ostream& out,
                     std::ostream& err) {
    Report rep("lexi-anncode", opts);
    const std::string text = read_file(path);
    rep.input("basis", path, text);
    rep.parameter("d", d);
    const VectorList basis = parse_vector_list(text);
    if (static_cast<int>(basis.vectors.size()) > opts.max_lexi_m) {
        throw ScaleCapError("lexi-anncode basis size", static_cast<int>(basis.vectors.size()),
                            opts.max_lexi_m);
    }
    const GreedyResult r = lexi_anncode(basis.vectors, d);
    if (!opts.json && !opts.quiet) {
        out << "basis: " << basis.vectors.size() << " vectors of width " << basis.width
            << ", d = " << d << '\n';
    }
    report_greedy(rep, r, basis.width, out, opts);
    return rep.finish(out, err);
}

void gamma_summary(Report& rep, const SolvedAnnGame& s, std::ostream& out, const GlobalOptions& opts) {
    const CosetReport cr = verify_theorem2(s.gamma, s.ann.game.width());
    std::size_t infinite = 0;
    for (std::size_t p = 0; p < s.gamma.size(); ++p) {
        infinite += s.gamma.is_finite(static_cast<GameGraph::Node>(p)) ? 0 : 1;
    }
    const auto audit = audit_gamma_table(s.ann.graph, s.gamma, 1);
    const auto cross = cross_check_outcomes(s.outcomes, s.gamma, 1);
    rep.check("gamma_audit", audit.empty(), audit.empty() ? "" : audit.front());
    rep.check("outcome_cross_check", cross.empty(), cross.empty() ? "" : cross.front());
    rep.check("coset_structure", cr.ok(), cr.ok() ? "" : cr.failures.front());

    Json& g = rep.outputs()["gamma"];
    g["t"] = cr.t;
    g["m"] = cr.m;
    g["dim_vf"] = cr.dim_vf;
    g["class_sizes"] = cr.class_sizes;
    g["infinite_positions"] = infinite;
    if (!opts.json) {
        out << "gamma: t = " << cr.t << ", max finite = " << ((1u << cr.t) - 1) << ", dim V_0 = " << cr.m
            << ", dim V^f = " << cr.dim_vf << ", infinite positions = " << infinite << '\n';
        out << "class sizes:";
        for (std::size_t c : cr.class_sizes) out << ' ' << c;
        out << '\n';
    }
}

int cmd_anncode_gen(const GlobalOptions& opts, const std::string& path, bool project, bool gamma,
                    std::ostream& out, std::ostream& err) {
    Report rep("anncode gen", opts);
    const std::string text = read_file(path);
    rep.input("graph", path, text);
    rep.parameter("project_sinks", project);
    const GroundGraph g = parse_graph(text);
    const SolvedAnnGame s = gamma ? solve_anngame(g, project, opts.max_coords)
                                  : SolvedAnnGame{build_anngraph(g, project, opts.max_coords), {}, {}};
    const auto outcomes = gamma ? s.outcomes : classify_pnd(s.ann.graph);
    std::vector<std::uint64_t> words;
    for (std::size_t p = 0; p < outcomes.size(); ++p) {
        if (outcomes[p] == Outcome::P) words.push_back(p);
    }
    const Code code(s.ann.game.width(), words);
    rep.check("linear", is_linear(code));
    rep.outputs()["p_positions"] = code.words();
    rep.outputs()["code"] = code_json(code);
    if (!opts.json) print_code(out, code, opts);
    if (gamma) gamma_summary(rep, s, out, opts);
    return rep.finish(out, err);
}

Json gamma_json(const GammaValue& v) {
    if (v.is_finite()) return Json{{"finite", v.value()}};
    return Json{{"infinite", v.exits()}};
}

int cmd_solve(const GlobalOptions& opts, const std::string& path, std::optional<std::string> position,
              bool decimal, bool gamma, bool project, std::ostream& out, std::ostream& err) {
    Report rep("solve", opts);
    const std::string text = read_file(path);
    rep.input("graph", path, text);
    const GroundGraph g = parse_graph(text);
    const bool want_gamma = gamma || opts.json;
    const SolvedAnnGame s = want_gamma
                                ? solve_anngame(g, project, opts.max_coords)
                                : SolvedAnnGame{build_anngraph(g, project, opts.max_coords), {}, {}};
    const auto outcomes = want_gamma ? s.outcomes : classify_pnd(s.ann.graph);
    const int width = s.ann.game.width();

    auto describe = [&](Position p) {
        Json j;
        j["position"] = bits(p, width);
        j["decimal"] = p;
        j["outcome"] = std::string(1, outcome_char(outcomes[p]));
        if (want_gamma) {
            j["gamma"] = gamma_json(s.gamma.at(static_cast<GameGraph::Node>(p)));
            j["counter"] = s.gamma.counter(static_cast<GameGraph::Node>(p));
        }
        const MoveAdvice mv = best_move(s.ann.graph, static_cast<GameGraph::Node>(p), outcomes);
        switch (mv.kind) {
            case MoveAdvice::Kind::move: j["best_move"] = bits(mv.to, width); break;
            case MoveAdvice::Kind::resign: j["best_move"] = "resign"; break;
            case MoveAdvice::Kind::no_move: j["best_move"] = "none"; break;
        }
        return j;
    };
    auto print_line = [&](const Json& j) {
        out << j["position"].get<std::string>() << "  " << j["decimal"].get<std::uint64_t>() << "  "
            << j["outcome"].get<std::string>();
        if (want_gamma && gamma) {
            const GammaValue v = s.gamma.at(static_cast<GameGraph::Node>(j["decimal"].get<std::uint64_t>()));
            out << "  gamma " << v.to_string() << "  counter " << j["counter"].get<std::uint32_t>();
        }
        out << "  move " << j["best_move"].get<std::string>() << '\n';
    };

    if (position) {
        Position p = 0;
        if (decimal) {
            std::size_t used = 0;
            try {
                p = std::stoull(*position, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != position->size()) {
                throw ParseError(1, "invalid decimal position '" + *position + "'");
            }
        } else {
            if (static_cast<int>(position->size()) > width) {
                throw PreconditionError("position has " + std::to_string(position->size()) +
                                        " bits, the game has " + std::to_string(width) +
                                        " coordinates");
            }
            try {
                p = BitVec::from_string(*position).value();
            } catch (const PreconditionError& e) {
                throw ParseError(1, e.what());
            }
        }
        if (p >= outcomes.size()) {
            throw PreconditionError("position " + std::to_string(p) + " outside the " +
                                    std::to_string(width) + "-coordinate game");
        }
        rep.parameter("position", *position);
        const Json j = describe(p);
        rep.outputs() = j;
        if (!opts.json) print_line(j);
    } else {
        Json all = Json::array();
        for (Position p = 0; p < outcomes.size(); ++p) {
            Json j = describe(p);
            if (!opts.json) print_line(j);
            if (opts.json) all.push_back(std::move(j));
        }
        if (opts.json) rep.outputs()["positions"] = std::move(all);
    }
    if (want_gamma) {
        const auto audit = audit_gamma_table(s.ann.graph, s.gamma, 1);
        rep.check("gamma_audit", audit.empty(), audit.empty() ? "" : audit.front());
    }
    return rep.finish(out, err);
}

int cmd_analyze(const GlobalOptions& opts, const std::string& path, std::ostream& out,
                std::ostream& err) {
    Report rep("analyze", opts);
    const std::string text = read_file(path);
    rep.input("code", path, text);
    const Code code = parse_code(text);
    rep.outputs() = code_json(code);
    if (!opts.json) {
        print_code(out, code, opts);
        if (!opts.quiet) {
            out << "basis:";
            for (std::uint64_t b : basis_of(code.words())) out << ' ' << bits(b, code.length());
            out << '\n';
        }
    }
    return rep.finish(out, err);
}

int cmd_family(const GlobalOptions& opts, const std::string& kind, int param, std::ostream& out,
               std::ostream& err) {
    Report rep("family " + kind, opts);
    GroundGraph g;
    if (kind == "gamma-t") {
        g = gamma_t(param);
    } else if (kind == "nim-heap") {
        g = nim_heap(param);
    } else if (kind == "star") {
        g = star_into_leaf(param);
    } else {
        g = example2_graph();
    }
    if (kind != "example2") rep.parameter("parameter", param);
    const std::string text = serialize_graph(g);
    rep.outputs()["vertices"] = g.size();
    rep.outputs()["edges"] = g.edge_count();
    rep.outputs()["graph"] = text;
    if (!opts.json) out << text;
    return rep.finish(out, err);
}

int cmd_reference(const GlobalOptions& opts, const ReferenceBuilders& builders, std::ostream& out,
                  std::ostream& err) {
    Report rep("paper examples", opts);
    for (const CheckResult& r : run_reference_checks(builders)) {
        rep.check(r.name, r.passed, r.detail);
        if (!opts.json && (!opts.quiet || !r.passed)) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        }
    }
    return rep.finish(out, err);
}

}  // namespace

int run_paper_examples(const ReferenceBuilders& builders, bool json, bool quiet, std::ostream& out,
                       std::ostream& err) {
    GlobalOptions opts;
    opts.json = json;
    opts.quiet = quiet;
    return cmd_reference(opts, builders, out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary codes from annihilation games and lexicodes", "anncode"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "Machine-readable JSON output");
    app.add_flag("--quiet", opts.quiet, "Print only the essential results");
    app.add_flag("--timing", opts.timing, "Report wall time (breaks byte-identical output)");
    app.add_option("--max-coords", opts.max_coords, "Cap on anngraph coordinate vertices")
        ->capture_default_str()
        ->check(CLI::Range(1, 30));
    app.add_option("--max-lexi-m", opts.max_lexi_m, "Cap on lexicode / lexigraph dimension")
        ->capture_default_str()
        ->check(CLI::Range(1, 26));

    std::string matrix_path, basis_path, graph_path, code_path, order = "index";
    int d = 1;
    std::optional<int> m;
    bool no_project = false, gamma = false, decimal = false;
    std::optional<std::string> position;
    int family_param = 0;

    auto* lex = app.add_subcommand("lexicode", "Lexicodes from a matrix ordering");
    lex->require_subcommand(1);
    auto* lex_gen = lex->add_subcommand("gen", "Run the greedy algorithm over a matrix ordering");
    lex_gen->add_option("--matrix", matrix_path, "Matrix file")->required();
    lex_gen->add_option("--d", d, "Minimum distance")->required()->check(CLI::PositiveNumber);
    lex_gen->add_option("--m", m, "Ordering dimension (default: number of columns)");
    lex_gen->add_option("--order", order, "Scan order")->check(CLI::IsMember({"index", "value"}));

    auto* lexi = app.add_subcommand("lexi-anncode", "Greedy code over the span of a basis");
    lexi->add_option("--basis", basis_path, "Basis file (one vector per line)")->required();
    lexi->add_option("--d", d, "Minimum distance")->required()->check(CLI::PositiveNumber);

    auto* ann = app.add_subcommand("anncode", "Anncodes of annihilation games");
    ann->require_subcommand(1);
    auto* ann_gen = ann->add_subcommand("gen", "P-positions of the game on a groundgraph");
    ann_gen->add_option("--graph", graph_path, "Graph file")->required();
    ann_gen->add_flag("--no-project-sinks", no_project, "Keep sinks as coordinates");
    ann_gen->add_flag("--gamma", gamma, "Also solve gamma and report the coset structure");

    auto* solve = app.add_subcommand("solve", "Outcome and gamma of positions");
    solve->add_option("--graph", graph_path, "Graph file")->required();
    solve->add_option("--position", position, "Position, binary MSB-first (or decimal)");
    solve->add_flag("--decimal", decimal, "Read --position as a decimal number");
    solve->add_flag("--gamma", gamma, "Show gamma values and counters");
    solve->add_flag("--no-project-sinks", no_project, "Keep sinks as coordinates");

    auto* analyze = app.add_subcommand("analyze", "Code analytics");
    analyze->add_option("--code", code_path, "Code file")->required();

    auto* family = app.add_subcommand("family", "Print a built-in groundgraph");
    family->require_subcommand(1);
    auto* fam_gamma = family->add_subcommand("gamma-t", "The Gamma_t family");
    fam_gamma->add_option("--t", family_param, "t >= 1")->required()->check(CLI::Range(1, 16));
    auto* fam_nim = family->add_subcommand("nim-heap", "Nim heap with a leaf");
    fam_nim->add_option("--size", family_param, "Heap size")->required()->check(CLI::Range(1, 63));
    auto* fam_star = family->add_subcommand("star", "k vertices pointing into one leaf");
    fam_star->add_option("--k", family_param, "Number of vertices")->required()->check(CLI::Range(1, 63));
    auto* fam_ex2 = family->add_subcommand("example2", "The 5-vertex cyclic example");

    auto* paper = app.add_subcommand("paper", "Published worked examples");
    paper->require_subcommand(1);
    auto* paper_ex = paper->add_subcommand("examples", "Run the worked-example regression checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "anncode: error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*lex_gen) return cmd_lexicode_gen(opts, matrix_path, d, m, order, out, err);
        if (*lexi) return cmd_lexi_anncode(opts, basis_path, d, out, err);
        if (*ann_gen) return cmd_anncode_gen(opts, graph_path, !no_project, gamma, out, err);
        if (*solve) return cmd_solve(opts, graph_path, position, decimal, gamma, !no_project, out, err);
        if (*analyze) return cmd_analyze(opts, code_path, out, err);
        if (*fam_gamma) return cmd_family(opts, "gamma-t", family_param, out, err);
        if (*fam_nim) return cmd_family(opts, "nim-heap", family_param, out, err);
        if (*fam_star) return cmd_family(opts, "star", family_param, out, err);
        if (*fam_ex2) return cmd_family(opts, "example2", 0, out, err);
        if (*paper_ex) return cmd_reference(opts, ReferenceBuilders{}, out, err);
    } catch (const ParseError& e) {
        err << "anncode: parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InputError& e) {
        err << "anncode: error: " << e.what() << '\n';
        return kParseError;
    } catch (const ScaleCapError& e) {
        err << "anncode: scale cap exceeded: " << e.what() << '\n';
        return kScaleCap;
    } catch (const std::exception& e) {
        err << "anncode: precondition failed: " << e.what() << '\n';
        return kPrecondition;
    }
    err << "anncode: error: no command given\n";
    return kParseError;
}

}  // namespace anncode::cli
