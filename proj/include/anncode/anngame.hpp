#pragma once

// Annihilation games: positions are GF(2) vectors over the coordinate
// vertices of a groundgraph, and a move slides one token along an edge,
// flipping the occupancy of both endpoints.

#include <cstdint>
#include <optional>
#include <vector>

#include "anncode/game_graph.hpp"
#include "anncode/gf2.hpp"
#include "anncode/groundgraph.hpp"

namespace anncode {

using Position = std::uint64_t;

inline constexpr int kDefaultMaxCoordinates = 24;

/// Implicit annihilation graph. Holds the coordinate map and one XOR mask per
/// groundgraph edge; followers are generated on demand.
///
/// With sink projection, sinks are not coordinates: a token can never leave a
/// sink, so moving onto one simply removes the moving token.
class AnnGame {
public:
    explicit AnnGame(GroundGraph ground, bool project_sinks = true);

    const GroundGraph& ground() const noexcept { return ground_; }
    bool projects_sinks() const noexcept { return project_sinks_; }

    /// Number of coordinate vertices, i.e. the position width.
    int width() const noexcept { return static_cast<int>(coord_vertex_.size()); }
    std::optional<int> coordinate_of(Vertex v) const;
    Vertex vertex_of(int coordinate) const;

    /// Distinct followers of `pos`, ascending.
    std::vector<Position> followers(Position pos) const;

    /// XOR masks of the moves available to a token on `coordinate`.
    const std::vector<Position>& move_masks(int coordinate) const;

    /// Encodes a token placement; multiple tokens on one vertex reduce mod 2,
    /// tokens on projected sinks are dropped.
    Position position_of(const std::vector<Vertex>& tokens) const;

private:
    GroundGraph ground_;
    bool project_sinks_;
    std::vector<Vertex> coord_vertex_;
    std::vector<int> vertex_coord_;  // -1 for projected sinks
    std::vector<std::vector<Position>> masks_;
};

/// Fully materialized annihilation graph over all 2^width positions; node
/// index equals the position's integer encoding.
struct AnnGraph {
    AnnGame game;
    GameGraph graph;
};

/// Throws ScaleCapError when the position width exceeds `max_coordinates`.
AnnGraph build_anngraph(const GroundGraph& ground, bool project_sinks = true,
                        int max_coordinates = kDefaultMaxCoordinates);

/// The single-token game on `ground`: node = vertex holding the token.
GameGraph single_token_game(const GroundGraph& ground);

}  // namespace anncode
