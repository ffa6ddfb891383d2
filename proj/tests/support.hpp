#pragma once

// Shared generators and brute-force oracles for the test binaries. Oracles
// here are deliberately naive and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "anncode/game_graph.hpp"
#include "anncode/gf2.hpp"
#include "anncode/groundgraph.hpp"
#include "anncode/solver.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random digraph on n vertices; each ordered pair u != v is an edge with
/// probability p. Self loops are never generated.
inline anncode::GroundGraph random_graph(Rng& rng, int n, double p) {
    anncode::GroundGraph g(static_cast<std::size_t>(n));
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Random DAG: edges only from higher to lower vertex numbers.
inline anncode::GroundGraph random_dag(Rng& rng, int n, double p) {
    anncode::GroundGraph g(static_cast<std::size_t>(n));
    std::bernoulli_distribution coin(p);
    for (int u = 1; u < n; ++u) {
        for (int v = 0; v < u; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline anncode::GameGraph to_game_graph(const anncode::GroundGraph& g) {
    std::vector<std::vector<anncode::GameGraph::Node>> f(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.followers(static_cast<anncode::Vertex>(u))) f[u].push_back(v);
    }
    return anncode::GameGraph::from_followers(std::move(f));
}

/// Gaussian elimination over dense rows of bools.
inline int naive_rank(std::vector<std::uint64_t> vs, int width) {
    std::vector<std::vector<bool>> rows;
    for (auto v : vs) {
        std::vector<bool> r(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i) r[static_cast<std::size_t>(i)] = (v >> i) & 1u;
        rows.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) {
                for (int c = 0; c < width; ++c) {
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] !=
                        rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// Closure of a set of vectors under XOR, by repeated pairing.
inline std::set<std::uint64_t> naive_span(const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> s{0};
    for (auto g : gens) {
        std::set<std::uint64_t> next = s;
        for (auto x : s) next.insert(x ^ g);
        s = std::move(next);
    }
    return s;
}

/// Random invertible n x n matrix (rejection sampling).
inline anncode::Gf2Matrix random_invertible(Rng& rng, int n) {
    for (;;) {
        anncode::Gf2Matrix w(n, n);
        for (int r = 1; r <= n; ++r) {
            for (int c = 1; c <= n; ++c) w.set(r, c, uniform(rng, 0, 1) == 1);
        }
        std::vector<std::uint64_t> rows;
        for (int r = 1; r <= n; ++r) rows.push_back(w.row_bits(r));
        if (naive_rank(rows, n) == n) return w;
    }
}

/// Random n x n matrix whose first m right-counted columns are independent.
inline anncode::Gf2Matrix random_rank_m(Rng& rng, int n, int m) {
    for (;;) {
        anncode::Gf2Matrix w(n, n);
        for (int r = 1; r <= n; ++r) {
            for (int c = 1; c <= n; ++c) w.set(r, c, uniform(rng, 0, 1) == 1);
        }
        std::vector<std::uint64_t> cols;
        for (int c = 1; c <= m; ++c) cols.push_back(w.column_bits(c));
        if (naive_rank(cols, n) == m) return w;
    }
}

/// P/N/D by iterating the defining rules to a fixed point.
inline std::vector<anncode::Outcome> naive_pnd(const std::vector<std::vector<std::uint32_t>>& f) {
    using anncode::Outcome;
    const std::size_t n = f.size();
    std::vector<int> lab(n, -1);  // 0 = P, 1 = N
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t u = 0; u < n; ++u) {
            if (lab[u] != -1) continue;
            bool any_p = false, all_n = true;
            for (auto v : f[u]) {
                any_p = any_p || lab[v] == 0;
                all_n = all_n && lab[v] == 1;
            }
            if (any_p) {
                lab[u] = 1;
                changed = true;
            } else if (all_n) {
                lab[u] = 0;
                changed = true;
            }
        }
    }
    std::vector<Outcome> out(n);
    for (std::size_t u = 0; u < n; ++u) {
        out[u] = lab[u] == 0 ? Outcome::P : lab[u] == 1 ? Outcome::N : Outcome::D;
    }
    return out;
}

inline std::vector<std::vector<std::uint32_t>> follower_lists(const anncode::GameGraph& g) {
    std::vector<std::vector<std::uint32_t>> f(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.followers(static_cast<anncode::GameGraph::Node>(u))) f[u].push_back(v);
    }
    return f;
}

/// Sprague-Grundy by memoised recursion (acyclic graphs only).
inline std::vector<std::uint32_t> naive_grundy(const std::vector<std::vector<std::uint32_t>>& f) {
    std::vector<long> memo(f.size(), -1);
    std::function<std::uint32_t(std::uint32_t)> g = [&](std::uint32_t u) -> std::uint32_t {
        if (memo[u] >= 0) return static_cast<std::uint32_t>(memo[u]);
        std::set<std::uint32_t> seen;
        for (auto v : f[u]) seen.insert(g(v));
        std::uint32_t k = 0;
        while (seen.count(k)) ++k;
        memo[u] = k;
        return k;
    };
    std::vector<std::uint32_t> out(f.size());
    for (std::uint32_t u = 0; u < f.size(); ++u) out[u] = g(u);
    return out;
}

/// Anngame followers computed from token lists: move one token along one
/// ground edge, then cancel tokens pairwise per vertex.
inline std::vector<std::uint64_t> naive_ann_followers(const anncode::GroundGraph& g,
                                                      const std::vector<anncode::Vertex>& coord_vertex,
                                                      std::uint64_t pos) {
    std::map<anncode::Vertex, int> coord_of;
    for (std::size_t i = 0; i < coord_vertex.size(); ++i) coord_of[coord_vertex[i]] = static_cast<int>(i);
    std::vector<anncode::Vertex> tokens;
    for (std::size_t i = 0; i < coord_vertex.size(); ++i) {
        if ((pos >> i) & 1u) tokens.push_back(coord_vertex[i]);
    }
    std::set<std::uint64_t> out;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        for (auto v : g.followers(tokens[t])) {
            std::map<anncode::Vertex, int> count;
            for (std::size_t s = 0; s < tokens.size(); ++s) count[s == t ? v : tokens[s]]++;
            std::uint64_t p = 0;
            for (auto [vert, c] : count) {
                auto it = coord_of.find(vert);
                if (c % 2 == 1 && it != coord_of.end()) p |= std::uint64_t{1} << it->second;
            }
            out.insert(p);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace testsupport
