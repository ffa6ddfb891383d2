#include "anncode/game_graph.hpp"

#include <algorithm>

#include "anncode/errors.hpp"

namespace anncode {

GameGraph GameGraph::from_followers(std::vector<std::vector<Node>> followers) {
    GameGraph g;
    g.fwd_offset_.reserve(followers.size() + 1);
    g.fwd_offset_.push_back(0);
    for (auto& f : followers) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        g.fwd_.insert(g.fwd_.end(), f.begin(), f.end());
        g.fwd_offset_.push_back(g.fwd_.size());
    }
    g.build_reverse();
    return g;
}

GameGraph GameGraph::from_csr(std::vector<std::size_t> offsets, std::vector<Node> targets) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != targets.size()) {
        throw PreconditionError("malformed CSR offsets");
    }
    GameGraph g;
    g.fwd_offset_ = std::move(offsets);
    g.fwd_ = std::move(targets);
    const std::size_t n = g.size();
    for (std::size_t u = 0; u < n; ++u) {
        auto f = g.followers(static_cast<Node>(u));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] >= n || (i > 0 && f[i - 1] >= f[i])) {
                throw PreconditionError("CSR follower lists must be sorted, unique and in range");
            }
        }
    }
    g.build_reverse();
    return g;
}

GameGraph GameGraph::from_edges(std::size_t n, std::vector<std::pair<Node, Node>> edges) {
    std::vector<std::vector<Node>> f(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
        f[u].push_back(v);
    }
    return from_followers(std::move(f));
}

void GameGraph::build_reverse() {
    const std::size_t n = size();
    rev_offset_.assign(n + 1, 0);
    for (Node v : fwd_) ++rev_offset_[v + 1];
    for (std::size_t i = 0; i < n; ++i) rev_offset_[i + 1] += rev_offset_[i];
    rev_.assign(fwd_.size(), 0);
    std::vector<std::size_t> cursor(rev_offset_.begin(), rev_offset_.end() - 1);
    // Sources visited in ascending order keep each ancestor list sorted.
    for (Node u = 0; u < n; ++u) {
        for (Node v : followers(u)) rev_[cursor[v]++] = u;
    }
}

}  // namespace anncode
