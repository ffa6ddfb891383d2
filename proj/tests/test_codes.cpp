#include <doctest.h>

#include <algorithm>
#include <set>

#include "anncode/codes.hpp"
#include "anncode/errors.hpp"
#include "support.hpp"

using namespace anncode;

namespace {

int brute_min_distance(const std::vector<std::uint64_t>& words) {
    int best = 1 << 30;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            best = std::min(best, weight(words[i] ^ words[j]));
        }
    }
    return best;
}

std::vector<std::uint64_t> gamma_zero_set(const GammaTable& t) {
    std::vector<std::uint64_t> out;
    for (std::size_t p = 0; p < t.size(); ++p) {
        if (t.raw(static_cast<GameGraph::Node>(p)) == 0) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("code basics") {
    const Code c(4, {6, 0, 3, 5, 3});
    CHECK(c.words() == std::vector<std::uint64_t>{0, 3, 5, 6});
    CHECK(c.contains(5));
    CHECK(!c.contains(7));
    CHECK(c.bitvecs().front() == BitVec(4, 0));
    CHECK_THROWS_AS(Code(3, {8}), PreconditionError);
}

TEST_CASE("linearity and minimum distance") {
    CHECK(is_linear(Code(4, {0, 3, 5, 6})));
    CHECK(!is_linear(Code(4, {0, 3, 5})));
    CHECK(!is_linear(Code(4, {3, 5, 6})));
    CHECK(min_distance(Code(4, {0, 3, 5, 6})) == 2);
    // not closed: the nonzero-weight shortcut would give 1
    CHECK(min_distance(Code(2, {1, 2})) == 2);
    CHECK(!min_distance(Code(4, {5})).has_value());
    CHECK(!min_distance(Code(4, {})).has_value());

    testsupport::Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = testsupport::uniform(rng, 2, 10);
        std::vector<std::uint64_t> gens(static_cast<std::size_t>(testsupport::uniform(rng, 0, 4)));
        for (auto& g : gens) g = rng() & low_mask(n);
        const auto span = testsupport::naive_span(gens);
        const Code linear(n, {span.begin(), span.end()});
        CHECK(is_linear(linear));
        if (linear.size() >= 2) CHECK(min_distance(linear) == brute_min_distance(linear.words()));

        std::vector<std::uint64_t> junk(static_cast<std::size_t>(testsupport::uniform(rng, 2, 9)));
        for (auto& w : junk) w = rng() & low_mask(n);
        const Code any(n, junk);
        if (any.size() >= 2) CHECK(min_distance(any) == brute_min_distance(any.words()));
    }
}

TEST_CASE("summarize") {
    const CodeSummary s = summarize(Code(5, {0, 7, 25, 30}));
    CHECK(s.length == 5);
    CHECK(s.size == 4);
    CHECK(s.linear);
    CHECK(s.dimension == 2);
    CHECK(s.min_distance == 3);
    CHECK(s.basis.size() == 2);
    const CodeSummary nl = summarize(Code(3, {1, 2}));
    CHECK(!nl.linear);
    CHECK(!nl.dimension.has_value());
}

TEST_CASE("code files") {
    const Code c = parse_code("# example\n0000\n0011 # a word\n\n0101\n0110\n");
    CHECK(c == Code(4, {0, 3, 5, 6}));
    CHECK(parse_code(serialize_code(c)) == c);
    try {
        parse_code("000\n0011\n");
        FAIL("mixed widths accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_code("0120\n"), ParseError);

    const VectorList v = parse_vector_list("110\n001\n110\n");
    CHECK(v.width == 3);
    CHECK(v.vectors == std::vector<std::uint64_t>{6, 1, 6});
}

TEST_CASE("anncodes of the worked examples") {
    CHECK(anncode_of(star_into_leaf(4)).words() == std::vector<std::uint64_t>{0, 3, 5, 6, 9, 10, 12, 15});
    CHECK(anncode_of(example2_graph()).words() == std::vector<std::uint64_t>{0, 7, 11, 12});
    CHECK(anncode_of(nim_heap(5)).words() == std::vector<std::uint64_t>{0, 7, 25, 30});
}

TEST_CASE("anncode equals the gamma zero set and is linear") {
    testsupport::Rng rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const GroundGraph g = testsupport::random_graph(rng, testsupport::uniform(rng, 1, 10), 0.2);
        const SolvedAnnGame s = solve_anngame(g);
        const Code c = anncode_of(g);
        CHECK(c.words() == gamma_zero_set(s.gamma));
        CHECK(is_linear(c));
        if (g.sinks().empty()) {
            for (auto w : c.words()) CHECK(weight(w) % 2 == 0);
        }
    }
}

TEST_CASE("coset structure") {
    const SolvedAnnGame s = solve_anngame(gamma_t(3));
    const CosetReport r = verify_theorem2(s.gamma, 8);
    CHECK(r.ok());
    CHECK(r.t == 3);
    CHECK(r.m == 4);
    CHECK(r.dim_vf == 7);
    CHECK(r.class_sizes == std::vector<std::size_t>(8, 16));
    CHECK(r.kernel_basis.size() == 4);

    // classes of unequal size and a non-subspace kernel are both reported
    const std::vector<std::uint64_t> vecs{0, 1, 2, 3};
    const std::vector<std::int32_t> bad{0, 1, 0, 2};
    const CosetReport b = verify_theorem2(2, vecs, bad);
    CHECK(!b.ok());
    const std::vector<std::int32_t> wrong_d{0, 1, 2, 3};
    CHECK(verify_theorem2(2, vecs, wrong_d).ok());
    const CosetReport tb = verify_theorem2(2, vecs, wrong_d, 2);
    REQUIRE(!tb.ok());
    CHECK(tb.failures.front().rfind("t_bound", 0) == 0);
}

TEST_CASE("union subspaces") {
    const SolvedAnnGame s = solve_anngame(gamma_t(2));
    for (int k = 0; k <= 2; ++k) CHECK(union_subspace_check(s.gamma, k));
    std::size_t below2 = 0;
    for (auto v : s.gamma.raw_values()) below2 += (v == 0 || v == 1) ? 1 : 0;
    CHECK(below2 == 4);

    const std::vector<std::uint64_t> vecs{0, 1, 2, 3};
    const std::vector<std::int32_t> vals{0, 1, 1, 2};
    CHECK(!union_subspace_check(vecs, vals, 1));
    CHECK(union_subspace_check(vecs, vals, 0));
}

TEST_CASE("gamma_t closed forms") {
    CHECK(gamma_t_closed_form(5).m == 26);
    CHECK(gamma_t_closed_form(5).m + static_cast<int>(kGammaPrimeBasis.size()) == 30);
    CHECK(gamma_t_closed_form(2).m == 1);
    CHECK(gamma_t_closed_form(2).max_gamma == 3);
    CHECK(gamma_t_closed_form(3).m == 4);
    CHECK(gamma_t_closed_form(3).dim_vf == 7);
    CHECK_THROWS_AS(gamma_t_closed_form(1), PreconditionError);

    for (int t = 2; t <= 3; ++t) {
        const SolvedAnnGame s = solve_anngame(gamma_t(t));
        const auto facts = gamma_t_pair_facts(t);
        const int J = 1 << (t - 1);
        CHECK(facts.size() == static_cast<std::size_t>(J * (J - 1) / 2 * 2 + J * J));
        for (const auto& f : facts) {
            CHECK_MESSAGE(s.gamma.at(static_cast<GameGraph::Node>(f.position)) == GammaValue::finite(f.gamma),
                          f.description);
        }
        CHECK(min_distance(anncode_of(gamma_t(t))) == 2);
    }
}

TEST_CASE("gamma prime basis code") {
    const auto words = span_enumerate(kGammaPrimeBasis);
    const Code c(kGammaPrimeWidth, words);
    CHECK(c.size() == 16);
    CHECK(is_linear(c));
    CHECK(summarize(c).dimension == 4);
    CHECK(min_distance(c) == 4);
}

TEST_CASE("ball volume") {
    CHECK(ball_volume(4, 1) == 0);
    CHECK(ball_volume(4, 2) == 4);
    CHECK(ball_volume(5, 3) == 15);
    CHECK(ball_volume(8, 4) == 8 + 28 + 56);
    CHECK(ball_volume(3, 10) == 7);
    CHECK(ball_volume(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

}  // TEST_SUITE
