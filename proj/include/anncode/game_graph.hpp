#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace anncode {

/// Explicit digraph in compressed sparse row form with its transpose.
/// Follower lists are sorted and duplicate-free.
class GameGraph {
public:
    using Node = std::uint32_t;

    GameGraph() = default;

    /// Builds from per-node follower lists (duplicates are removed).
    static GameGraph from_followers(std::vector<std::vector<Node>> followers);
    /// Builds from CSR arrays; each follower range must be sorted and unique.
    static GameGraph from_csr(std::vector<std::size_t> offsets, std::vector<Node> targets);
    /// Builds from an edge list over `n` nodes.
    static GameGraph from_edges(std::size_t n, std::vector<std::pair<Node, Node>> edges);

    std::size_t size() const noexcept { return fwd_offset_.empty() ? 0 : fwd_offset_.size() - 1; }
    std::size_t edge_count() const noexcept { return fwd_.size(); }

    std::span<const Node> followers(Node u) const {
        return {fwd_.data() + fwd_offset_[u], fwd_.data() + fwd_offset_[u + 1]};
    }
    std::span<const Node> ancestors(Node u) const {
        return {rev_.data() + rev_offset_[u], rev_.data() + rev_offset_[u + 1]};
    }

private:
    void build_reverse();

    std::vector<std::size_t> fwd_offset_;
    std::vector<Node> fwd_;
    std::vector<std::size_t> rev_offset_;
    std::vector<Node> rev_;
};

}  // namespace anncode
