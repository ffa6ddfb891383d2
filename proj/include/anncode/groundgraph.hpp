#pragma once

// Finite digraphs on which annihilation games are played, plus builders for
// the standard example graphs and the Gamma_t family.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anncode {

using Vertex = std::uint32_t;

class GroundGraph {
public:
    GroundGraph() = default;
    explicit GroundGraph(std::size_t n);

    std::size_t size() const noexcept { return out_.size(); }

    /// Adds u -> v; repeated edges are ignored. Self-loops are allowed.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    /// Sorted follower set F(u).
    const std::vector<Vertex>& followers(Vertex u) const;
    std::size_t edge_count() const noexcept;

    bool is_sink(Vertex u) const { return followers(u).empty(); }
    std::vector<Vertex> sinks() const;

    void set_label(Vertex u, std::string label);
    /// Empty when no label was assigned.
    const std::string& label(Vertex u) const;

    friend bool operator==(const GroundGraph&, const GroundGraph&) = default;

private:
    void check_vertex(Vertex u) const;

    std::vector<std::vector<Vertex>> out_;
    std::vector<std::string> labels_;
};

/// Graph text format:
///   vertices <n>
///   <u> -> <v>
///   label <u> <name>
/// with 0-based indices and '#' comments.
GroundGraph parse_graph(std::string_view text);
std::string serialize_graph(const GroundGraph& g);

/// True iff the graph has no directed cycle; a self-loop is a cycle.
bool is_acyclic(const GroundGraph& g);

/// Vertex-disjoint union; the second graph's vertices are shifted by g1.size().
GroundGraph disjoint_sum(const GroundGraph& g1, const GroundGraph& g2);

/// Leaf 0 plus z_0..z_{k-1} at vertices 1..k, with z_j -> z_i for i < j and
/// z_j -> leaf for every j.
GroundGraph nim_heap(int k);

/// Leaf 0 plus z_0..z_{k-1} at vertices 1..k, each with the single edge z_i -> leaf.
GroundGraph star_into_leaf(int k);

/// Leaf 0 and z_0..z_3 at vertices 1..4: z_0 <-> z_1, z_2 -> leaf, z_3 -> leaf.
GroundGraph example2_graph();

/// Gamma_t with J = 2^(t-1): x_i at vertex i-1 and y_i at vertex J+i-1 (1 <= i <= J).
/// F(x_i) = {y_i}; F(y_k) = {y_i : i < k} u {x_j : j != k}.
GroundGraph gamma_t(int t);

/// Vertex index of x_i / y_i in gamma_t(t).
Vertex gamma_t_x(int t, int i);
Vertex gamma_t_y(int t, int i);

}  // namespace anncode
