#include "anncode/anngame.hpp"

#include <algorithm>
#include <bit>

#include "anncode/errors.hpp"

namespace anncode {

AnnGame::AnnGame(GroundGraph ground, bool project_sinks)
    : ground_(std::move(ground)), project_sinks_(project_sinks) {
    vertex_coord_.assign(ground_.size(), -1);
    for (Vertex v = 0; v < ground_.size(); ++v) {
        if (project_sinks_ && ground_.is_sink(v)) continue;
        vertex_coord_[v] = static_cast<int>(coord_vertex_.size());
        coord_vertex_.push_back(v);
    }
    if (coord_vertex_.size() > static_cast<std::size_t>(kMaxWidth)) {
        throw ScaleCapError("annihilation game position width", static_cast<int>(coord_vertex_.size()),
                            kMaxWidth);
    }
    masks_.resize(coord_vertex_.size());
    for (std::size_t c = 0; c < coord_vertex_.size(); ++c) {
        const Position self = Position{1} << c;
        for (Vertex v : ground_.followers(coord_vertex_[c])) {
            const int cv = vertex_coord_[v];
            masks_[c].push_back(cv < 0 ? self : self ^ (Position{1} << cv));
        }
    }
}

std::optional<int> AnnGame::coordinate_of(Vertex v) const {
    if (v >= vertex_coord_.size()) throw PreconditionError("vertex out of range");
    const int c = vertex_coord_[v];
    if (c < 0) return std::nullopt;
    return c;
}

Vertex AnnGame::vertex_of(int coordinate) const {
    if (coordinate < 0 || coordinate >= width()) throw PreconditionError("coordinate out of range");
    return coord_vertex_[static_cast<std::size_t>(coordinate)];
}

const std::vector<Position>& AnnGame::move_masks(int coordinate) const {
    if (coordinate < 0 || coordinate >= width()) throw PreconditionError("coordinate out of range");
    return masks_[static_cast<std::size_t>(coordinate)];
}

std::vector<Position> AnnGame::followers(Position pos) const {
    if ((pos & ~low_mask(width())) != 0) throw PreconditionError("position wider than the game");
    std::vector<Position> out;
    for (Position rest = pos; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest);
        for (Position m : masks_[static_cast<std::size_t>(c)]) out.push_back(pos ^ m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Position AnnGame::position_of(const std::vector<Vertex>& tokens) const {
    Position p = 0;
    for (Vertex v : tokens) {
        if (auto c = coordinate_of(v)) p ^= Position{1} << *c;
    }
    return p;
}

AnnGraph build_anngraph(const GroundGraph& ground, bool project_sinks, int max_coordinates) {
    AnnGame game(ground, project_sinks);
    if (game.width() > max_coordinates) {
        throw ScaleCapError("explicit annihilation graph coordinate vertices", game.width(),
                            max_coordinates);
    }
    const std::size_t n = std::size_t{1} << game.width();
    std::vector<std::size_t> offsets;
    std::vector<GameGraph::Node> targets;
    offsets.reserve(n + 1);
    offsets.push_back(0);
    for (Position p = 0; p < n; ++p) {
        for (Position q : game.followers(p)) targets.push_back(static_cast<GameGraph::Node>(q));
        offsets.push_back(targets.size());
    }
    GameGraph graph = GameGraph::from_csr(std::move(offsets), std::move(targets));
    return AnnGraph{std::move(game), std::move(graph)};
}

GameGraph single_token_game(const GroundGraph& ground) {
    std::vector<std::vector<GameGraph::Node>> f(ground.size());
    for (Vertex u = 0; u < ground.size(); ++u) {
        f[u].assign(ground.followers(u).begin(), ground.followers(u).end());
    }
    return GameGraph::from_followers(std::move(f));
}

}  // namespace anncode
