#include <doctest.h>

#include <algorithm>

#include "anncode/anngame.hpp"
#include "anncode/errors.hpp"
#include "anncode/solver.hpp"
#include "support.hpp"

using namespace anncode;

namespace {

std::vector<Vertex> coordinate_vertices(const AnnGame& g) {
    std::vector<Vertex> out;
    for (int i = 0; i < g.width(); ++i) out.push_back(g.vertex_of(i));
    return out;
}

}  // namespace

TEST_SUITE("anngame") {

TEST_CASE("coordinates skip projected sinks") {
    const AnnGame star(star_into_leaf(4));
    CHECK(star.width() == 4);
    CHECK(!star.coordinate_of(0).has_value());
    CHECK(star.coordinate_of(1) == 0);
    CHECK(star.vertex_of(3) == 4);
    CHECK(star.position_of({1, 2}) == 0b0011);
    CHECK(star.position_of({1, 1, 3}) == 0b0100);  // two tokens on z0 annihilate
    CHECK(star.position_of({0, 4}) == 0b1000);     // the sink is not a coordinate

    const AnnGame full(star_into_leaf(4), false);
    CHECK(full.width() == 5);
    CHECK(full.coordinate_of(0) == 0);
    CHECK(full.position_of({0, 4}) == 0b10001);
}

TEST_CASE("move masks and followers") {
    const AnnGame ex2(example2_graph());
    CHECK(ex2.width() == 4);
    // vertex 1 moves to vertex 2: flip coordinates 0 and 1
    CHECK(ex2.move_masks(0) == std::vector<Position>{0b0011});
    // vertex 3 moves into the projected sink: clear its own bit
    CHECK(ex2.move_masks(2) == std::vector<Position>{0b0100});
    CHECK(ex2.followers(0).empty());
    CHECK(ex2.followers(0b0011) == std::vector<Position>{0});
    CHECK(ex2.followers(0b0001) == std::vector<Position>{0b0010});
    CHECK_THROWS_AS(ex2.followers(0b10000), PreconditionError);
}

TEST_CASE("followers match token-level simulation") {
    testsupport::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testsupport::uniform(rng, 1, 9);
        const GroundGraph g = testsupport::random_graph(rng, n, 0.25);
        for (bool project : {true, false}) {
            const AnnGame game(g, project);
            const auto coords = coordinate_vertices(game);
            for (Position p = 0; p < (Position{1} << game.width()); ++p) {
                CHECK(game.followers(p) == testsupport::naive_ann_followers(g, coords, p));
            }
        }
    }
}

TEST_CASE("anngraph matches the game and its reverse adjacency is the transpose") {
    testsupport::Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const GroundGraph g = testsupport::random_graph(rng, testsupport::uniform(rng, 1, 8), 0.3);
        const AnnGraph ag = build_anngraph(g);
        const GameGraph& G = ag.graph;
        REQUIRE(G.size() == (std::size_t{1} << ag.game.width()));
        std::vector<std::vector<GameGraph::Node>> rev(G.size());
        for (GameGraph::Node u = 0; u < G.size(); ++u) {
            const auto f = G.followers(u);
            const auto expect = ag.game.followers(u);
            CHECK(std::equal(f.begin(), f.end(), expect.begin(), expect.end()));
            for (auto v : f) rev[v].push_back(u);
        }
        std::size_t edges = 0;
        for (GameGraph::Node v = 0; v < G.size(); ++v) {
            const auto a = G.ancestors(v);
            CHECK(std::equal(a.begin(), a.end(), rev[v].begin(), rev[v].end()));
            edges += a.size();
        }
        CHECK(edges == G.edge_count());
    }
}

TEST_CASE("sink projection does not change outcomes") {
    testsupport::Rng rng(47);
    int with_sinks = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const GroundGraph g = testsupport::random_graph(rng, testsupport::uniform(rng, 2, 9), 0.2);
        with_sinks += g.sinks().empty() ? 0 : 1;
        const AnnGraph proj = build_anngraph(g, true);
        const AnnGraph full = build_anngraph(g, false);
        const auto po = classify_pnd(proj.graph);
        const auto fo = classify_pnd(full.graph);
        for (Position p = 0; p < fo.size(); ++p) {
            std::vector<Vertex> tokens;
            for (int i = 0; i < full.game.width(); ++i) {
                if ((p >> i) & 1u) tokens.push_back(full.game.vertex_of(i));
            }
            CHECK(fo[p] == po[proj.game.position_of(tokens)]);
        }
    }
    CHECK(with_sinks > 10);
}

TEST_CASE("scale cap") {
    try {
        build_anngraph(gamma_t(4), true, 12);
        FAIL("cap not enforced");
    } catch (const ScaleCapError& e) {
        CHECK(e.required() == 16);
        CHECK(e.limit() == 12);
    }
    CHECK_NOTHROW(build_anngraph(nim_heap(5), true, 5));
    CHECK_THROWS_AS(build_anngraph(nim_heap(5), false, 5), ScaleCapError);
}

TEST_CASE("single token game is the ground graph") {
    const GroundGraph g = example2_graph();
    const GameGraph s = single_token_game(g);
    REQUIRE(s.size() == g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        const auto f = s.followers(u);
        CHECK(std::vector<Vertex>(f.begin(), f.end()) == g.followers(u));
    }
}

TEST_CASE("game graph construction") {
    const GameGraph g = GameGraph::from_edges(3, {{2, 0}, {2, 1}, {2, 0}, {1, 0}});
    CHECK(g.edge_count() == 3);
    CHECK(g.ancestors(0).size() == 2);
    CHECK_THROWS_AS(GameGraph::from_csr({0, 2, 2}, {1, 0}), PreconditionError);  // unsorted
    CHECK_THROWS_AS(GameGraph::from_csr({0, 1, 1}, {5}), PreconditionError);     // out of range
    CHECK_THROWS_AS(GameGraph::from_csr({0, 2}, {0}), PreconditionError);        // bad offsets
}

}  // TEST_SUITE
