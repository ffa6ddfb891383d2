#include "anncode/reference_checks.hpp"

#include <sstream>

#include "anncode/codes.hpp"
#include "anncode/errors.hpp"
#include "anncode/lexicode.hpp"
#include "anncode/solver.hpp"

namespace anncode {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

/// Collects the first failed expectation of a check.
class Expect {
public:
    explicit Expect(std::string name) { result_.name = std::move(name); }

    bool operator()(bool ok, const std::string& what) {
        if (!ok && failed_.empty()) failed_ = what;
        return ok;
    }
    template <typename A, typename B>
    bool equal(const A& got, const B& want, const std::string& what) {
        return (*this)(got == want, what);
    }

    CheckResult finish(std::string summary) {
        result_.passed = failed_.empty();
        result_.detail = result_.passed ? std::move(summary) : failed_;
        return result_;
    }

private:
    CheckResult result_;
    std::string failed_;
};

template <typename F>
CheckResult guarded(const std::string& name, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return CheckResult{name, false, std::string("exception: ") + e.what()};
    }
}

std::vector<std::uint64_t> p_set(const SolvedAnnGame& s) {
    std::vector<std::uint64_t> out;
    for (std::size_t p = 0; p < s.outcomes.size(); ++p) {
        if (s.outcomes[p] == Outcome::P) out.push_back(p);
    }
    return out;
}

void expect_code(Expect& ex, const Code& c, const std::vector<std::uint64_t>& words, int d, int dim) {
    ex.equal(c.words(), words, "code " + join(c.words()) + " != " + join(words));
    ex(is_linear(c), "code is not linear");
    ex.equal(min_distance(c), std::optional<int>(d), "minimum distance differs");
    ex.equal(summarize(c).dimension, std::optional<int>(dim), "dimension differs");
}

void expect_audits(Expect& ex, const SolvedAnnGame& s) {
    auto audit = audit_gamma_table(s.ann.graph, s.gamma, 1);
    ex(audit.empty(), audit.empty() ? "" : audit.front());
    auto cross = cross_check_outcomes(s.outcomes, s.gamma, 1);
    ex(cross.empty(), cross.empty() ? "" : cross.front());
}

/// gamma(u ^ v) = gamma(u) ^ gamma(v) over all finite pairs.
bool homomorphic_on_pairs(const GammaTable& table) {
    const std::size_t n = table.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (!table.is_finite(static_cast<GameGraph::Node>(u))) continue;
        for (std::size_t v = u; v < n; ++v) {
            if (!table.is_finite(static_cast<GameGraph::Node>(v))) continue;
            const auto w = static_cast<GameGraph::Node>(u ^ v);
            if (table.raw(w) != (table.raw(static_cast<GameGraph::Node>(u)) ^
                                 table.raw(static_cast<GameGraph::Node>(v)))) {
                return false;
            }
        }
    }
    return true;
}

CheckResult check_example1(const ReferenceBuilders& b) {
    Expect ex("example1");
    const Code c = anncode_of(b.star_into_leaf(4));
    expect_code(ex, c, {0, 3, 5, 6, 9, 10, 12, 15}, 2, 3);
    return ex.finish("P = " + join(c.words()) + ", d = 2, dim 3");
}

CheckResult check_example2(const ReferenceBuilders& b) {
    Expect ex("example2");
    const SolvedAnnGame s = solve_anngame(b.example2());
    const Code c(s.ann.game.width(), p_set(s));
    expect_code(ex, c, {0, 7, 11, 12}, 2, 2);
    if (s.outcomes.size() >= 4) {
        ex(s.outcomes[1] == Outcome::D && s.outcomes[2] == Outcome::D,
           "singletons {z0}, {z1} are not draws");
        // From {z0, z1} every move annihilates the pair.
        ex(s.ann.game.followers(3) == std::vector<Position>{0}, "moves from {z0,z1} do not annihilate");
    }
    expect_audits(ex, s);
    return ex.finish("P = " + join(c.words()) + ", {z0},{z1} are D");
}

CheckResult check_example3(const ReferenceBuilders& b) {
    Expect ex("example3");
    const GroundGraph g = b.nim_heap(5);
    const Code c = anncode_of(g);
    expect_code(ex, c, {0, 7, 25, 30}, 3, 2);
    const AnnGraph ann = build_anngraph(g);
    if (ex(is_acyclic(g), "nim heap groundgraph is cyclic")) {
        const auto gv = grundy_acyclic(ann.graph);
        std::vector<std::uint64_t> zeros;
        for (std::size_t p = 0; p < gv.size(); ++p) {
            if (gv[p] == 0) zeros.push_back(p);
        }
        ex.equal(zeros, c.words(), "g zero-set " + join(zeros) + " differs from P-set");
    }
    return ex.finish("P = " + join(c.words()) + " = g zero-set, d = 3");
}

CheckResult check_table1() {
    Expect ex("table1");
    const OrderingSpec o = make_ordering(example4_matrix(), 4);
    const std::vector<std::uint64_t> order{0, 1, 3, 2, 6, 7, 5, 4, 12, 13, 15, 14, 10, 11, 9, 8};
    ex.equal(o.elements(), order, "ordering " + join(o.elements()));
    const GreedyResult r = greedy(o, 2);
    ex.equal(r.selected, std::vector<std::uint64_t>{0, 3, 6, 5, 12, 15, 10, 9},
             "selection " + join(r.selected));
    return ex.finish("selected " + join(r.selected));
}

CheckResult check_example4_lexigraph(const ReferenceBuilders& b) {
    Expect ex("example4_lexigraph");
    const OrderingSpec o = make_ordering(example4_matrix(), 4);
    const Lexigraph lg = build_lexigraph(o, 2);
    const auto zeros = zero_set(lg);
    ex.equal(zeros, anncode_of(b.star_into_leaf(4)).words(),
             "lexigraph zero-set " + join(zeros) + " differs from the star anncode");
    std::vector<std::int32_t> values(lg.g.begin(), lg.g.end());
    const CosetReport rep = verify_theorem2(4, lg.vectors, values, 2);
    ex(rep.ok(), rep.ok() ? "" : rep.failures.front());
    ex(rep.m == 3 && rep.t == 1, "expected m = 3, t = 1");
    ex(rep.class_sizes == std::vector<std::size_t>{8, 8}, "expected |V_0| = |V_1| = 8");
    return ex.finish("m = 3, t = 1, cosets of size 8");
}

CheckResult check_example5() {
    Expect ex("example5");
    const GreedyResult r = greedy(make_ordering(example5_matrix(), 4), 2);
    ex.equal(r.selected, std::vector<std::uint64_t>{0, 7, 12, 11}, "selection " + join(r.selected));
    return ex.finish("selected " + join(r.selected));
}

CheckResult check_example6(const ReferenceBuilders& b) {
    Expect ex("example6");
    const GreedyResult r = greedy(make_ordering(example6_matrix(), 5), 3);
    const Code lex(5, r.selected);
    ex.equal(lex.words(), std::vector<std::uint64_t>{0, 7, 25, 30}, "lexicode " + join(lex.words()));
    ex.equal(lex, anncode_of(b.nim_heap(5)), "lexicode differs from the nim heap anncode");
    return ex.finish("lexicode " + join(lex.words()));
}

CheckResult check_gamma_prime() {
    Expect ex("gamma_prime");
    const Code c(kGammaPrimeWidth, span_enumerate(kGammaPrimeBasis));
    const CodeSummary s = summarize(c);
    ex.equal(c.size(), std::size_t{16}, "span size");
    ex.equal(s.dimension, std::optional<int>(4), "dimension");
    ex.equal(s.min_distance, std::optional<int>(4), "minimum distance");
    // Independent of the linear shortcut: full pairwise scan.
    int pairwise = 64;
    for (std::uint64_t a : c.words()) {
        for (std::uint64_t bw : c.words()) {
            if (a != bw) pairwise = std::min(pairwise, hamming(a, bw));
        }
    }
    ex.equal(pairwise, 4, "pairwise minimum distance");
    return ex.finish("16 words, dim 4, d = 4");
}

CheckResult check_sum(const ReferenceBuilders& b) {
    Expect ex("sum_dimension");
    ex.equal(gamma_t_closed_form(5).m, 26, "m(Gamma_5)");
    ex.equal(gamma_t_closed_form(5).m + static_cast<int>(kGammaPrimeBasis.size()), 30,
             "m(Gamma_5) + dim Gamma'");
    const GroundGraph g2 = b.gamma_t(2);
    const SolvedAnnGame one = solve_anngame(g2);
    const SolvedAnnGame sum = solve_anngame(disjoint_sum(g2, g2));
    const int w = one.ann.game.width();
    ex.equal(sum.ann.game.width(), 2 * w, "sum width");
    for (std::size_t u = 0; u < one.gamma.size(); ++u) {
        for (std::size_t v = 0; v < one.gamma.size(); ++v) {
            const auto gu = one.gamma.raw(static_cast<GameGraph::Node>(u));
            const auto gv = one.gamma.raw(static_cast<GameGraph::Node>(v));
            if (gu < 0 || gv < 0) continue;
            const auto s = sum.gamma.raw(static_cast<GameGraph::Node>(u | (v << w)));
            if (!ex(s == (gu ^ gv), "sum gamma at (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is " + std::to_string(s))) {
                break;
            }
        }
    }
    expect_audits(ex, sum);
    return ex.finish("26 + 4 = 30; Gamma_2 + Gamma_2 gamma is the XOR of components");
}

CheckResult check_union_subspace(const ReferenceBuilders& b) {
    Expect ex("union_subspace");
    for (int t : {2, 3}) {
        const SolvedAnnGame s = solve_anngame(b.gamma_t(t));
        const CosetReport rep = verify_theorem2(s.gamma, s.ann.game.width());
        for (int k = 0; k <= rep.t; ++k) {
            ex(union_subspace_check(s.gamma, k),
               "Gamma_" + std::to_string(t) + ": union of V_i, i < 2^" + std::to_string(k) +
                   " is not a subspace");
        }
    }
    return ex.finish("all k <= t on Gamma_2, Gamma_3");
}

CheckResult check_homomorphism(const ReferenceBuilders& b) {
    Expect ex("homomorphism");
    const std::vector<std::pair<std::string, GroundGraph>> graphs = {
        {"star(4)", b.star_into_leaf(4)}, {"example2", b.example2()},
        {"nim_heap(5)", b.nim_heap(5)},   {"Gamma_2", b.gamma_t(2)},
        {"Gamma_3", b.gamma_t(3)},
    };
    for (const auto& [name, g] : graphs) {
        const SolvedAnnGame s = solve_anngame(g);
        ex(homomorphic_on_pairs(s.gamma), name + ": gamma is not XOR-additive on V^f");
        const CosetReport rep = verify_theorem2(s.gamma, s.ann.game.width());
        ex(rep.ok(), name + ": " + (rep.ok() ? "" : rep.failures.front()));
    }
    return ex.finish("gamma is a homomorphism on V^f for 5 groundgraphs");
}

}  // namespace

Gf2Matrix example4_matrix() { return Gf2Matrix::from_rows({"1000", "1100", "0110", "0011"}); }

Gf2Matrix example5_matrix() { return Gf2Matrix::from_rows({"1000", "1010", "0110", "0111"}); }

Gf2Matrix example6_matrix() {
    return Gf2Matrix::from_rows({"10000", "11000", "01100", "00110", "00011"});
}

CheckResult check_gamma_t(int t, const ReferenceBuilders& b) {
    const std::string name = "gamma_t_" + std::to_string(t);
    return guarded(name, [&] {
        Expect ex(name);
        const SolvedAnnGame s = solve_anngame(b.gamma_t(t));
        const GammaTable& gt = s.gamma;
        const int J = 1 << (t - 1);
        ex.equal(s.ann.game.width(), 2 * J, "position width");
        for (const GammaTPairFact& f : gamma_t_pair_facts(t)) {
            const auto got = gt.raw(static_cast<GameGraph::Node>(f.position));
            if (!ex(got == static_cast<std::int32_t>(f.gamma),
                    "gamma(" + f.description + ") = " + std::to_string(got) + ", expected " +
                        std::to_string(f.gamma))) {
                break;
            }
        }
        for (int i = 1; i <= J; ++i) {
            ex(!gt.is_finite(static_cast<GameGraph::Node>(Position{1} << gamma_t_x(t, i))) &&
                   !gt.is_finite(static_cast<GameGraph::Node>(Position{1} << gamma_t_y(t, i))),
               "single-token positions must be infinite");
        }
        std::size_t finite = 0;
        std::int32_t max_gamma = -1;
        for (std::size_t p = 0; p < gt.size(); ++p) {
            const bool fin = gt.is_finite(static_cast<GameGraph::Node>(p));
            if (!ex(fin == (weight(p) % 2 == 0), "V^f differs from even-weight positions at " +
                                                     std::to_string(p))) {
                break;
            }
            if (fin) {
                ++finite;
                max_gamma = std::max(max_gamma, gt.raw(static_cast<GameGraph::Node>(p)));
            }
        }
        const GammaTClosedForm cf = gamma_t_closed_form(t);
        ex.equal(finite, std::size_t{1} << (2 * J - 1), "|V^f|");
        ex.equal(max_gamma, static_cast<std::int32_t>(cf.max_gamma), "max finite gamma");
        const Position top = (Position{1} << gamma_t_y(t, J - 1)) | (Position{1} << gamma_t_y(t, J));
        ex.equal(gt.raw(static_cast<GameGraph::Node>(top)), static_cast<std::int32_t>(cf.max_gamma),
                 "gamma(y_{J-1} + y_J)");
        const CosetReport rep = verify_theorem2(gt, s.ann.game.width());
        ex(rep.ok(), rep.ok() ? "" : rep.failures.front());
        ex.equal(rep.m, cf.m, "dim V_0");
        ex.equal(rep.dim_vf, cf.dim_vf, "dim V^f");
        expect_audits(ex, s);
        return ex.finish("facts (i)-(v) hold, max gamma " + std::to_string(cf.max_gamma) +
                         ", dim V_0 = " + std::to_string(cf.m));
    });
}

std::vector<CheckResult> run_reference_checks(const ReferenceBuilders& b) {
    std::vector<CheckResult> out;
    out.push_back(guarded("example1", [&] { return check_example1(b); }));
    out.push_back(guarded("example2", [&] { return check_example2(b); }));
    out.push_back(guarded("example3", [&] { return check_example3(b); }));
    out.push_back(guarded("table1", [&] { return check_table1(); }));
    out.push_back(guarded("example4_lexigraph", [&] { return check_example4_lexigraph(b); }));
    out.push_back(guarded("example5", [&] { return check_example5(); }));
    out.push_back(guarded("example6", [&] { return check_example6(b); }));
    for (int t : {2, 3, 4}) out.push_back(check_gamma_t(t, b));
    out.push_back(guarded("gamma_prime", [&] { return check_gamma_prime(); }));
    out.push_back(guarded("sum_dimension", [&] { return check_sum(b); }));
    out.push_back(guarded("union_subspace", [&] { return check_union_subspace(b); }));
    out.push_back(guarded("homomorphism", [&] { return check_homomorphism(b); }));
    return out;
}

}  // namespace anncode
