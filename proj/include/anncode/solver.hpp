#pragma once

// Outcome classes, the Sprague-Grundy function on acyclic graphs and the
// generalized Sprague-Grundy function gamma on arbitrary finite digraphs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anncode/game_graph.hpp"

namespace anncode {

enum class Outcome : std::uint8_t { P, N, D };

char outcome_char(Outcome o) noexcept;

/// Finite(k) or Infinite(K), where K lists the finite values of the followers.
class GammaValue {
public:
    static GammaValue finite(std::uint32_t k) { return GammaValue(true, k, {}); }
    static GammaValue infinite(std::vector<std::uint32_t> exits);

    bool is_finite() const noexcept { return finite_; }
    /// Throws PreconditionError for infinite values.
    std::uint32_t value() const;
    /// Sorted exit set K; empty for finite values.
    const std::vector<std::uint32_t>& exits() const noexcept { return exits_; }

    std::string to_string() const;

    friend bool operator==(const GammaValue&, const GammaValue&) = default;

private:
    GammaValue(bool finite, std::uint32_t k, std::vector<std::uint32_t> exits)
        : finite_(finite), k_(k), exits_(std::move(exits)) {}

    bool finite_;
    std::uint32_t k_;
    std::vector<std::uint32_t> exits_;
};

/// Gamma values plus the counter function witnessing the finite ones.
class GammaTable {
public:
    static constexpr std::int32_t kInfinite = -1;

    GammaTable() = default;
    GammaTable(std::vector<std::int32_t> values, std::vector<std::uint32_t> counters,
               std::vector<std::size_t> exit_offsets, std::vector<std::uint32_t> exit_values);

    std::size_t size() const noexcept { return values_.size(); }
    bool is_finite(GameGraph::Node u) const { return values_.at(u) != kInfinite; }
    /// Raw value; kInfinite for infinite positions.
    std::int32_t raw(GameGraph::Node u) const { return values_.at(u); }
    /// Assignment order of a finite value (1-based); 0 for infinite positions.
    std::uint32_t counter(GameGraph::Node u) const { return counters_.at(u); }
    std::span<const std::uint32_t> exits(GameGraph::Node u) const;
    GammaValue at(GameGraph::Node u) const;

    const std::vector<std::int32_t>& raw_values() const noexcept { return values_; }

private:
    std::vector<std::int32_t> values_;
    std::vector<std::uint32_t> counters_;
    std::vector<std::size_t> exit_offsets_;
    std::vector<std::uint32_t> exit_values_;
};

/// Backward induction: nodes without followers are P, a node is N iff some
/// follower is P, P iff every follower is N; everything unresolved is D.
std::vector<Outcome> classify_pnd(const GameGraph& g);

/// g(u) = mex g(F(u)). Throws PreconditionError when the graph has a cycle.
std::vector<std::uint32_t> grundy_acyclic(const GameGraph& g);

/// Generalized Sprague-Grundy function, computed in stages k = 0, 1, ...
/// Within stage k an unlabeled node receives k when no follower holds k and
/// every unlabeled or infinite follower already has a follower holding k;
/// at the end of the stage, unlabeled nodes with no follower holding k become
/// infinite. Ties go to the smallest node index; counters record the order.
GammaTable gamma_solve(const GameGraph& g);

struct MoveAdvice {
    enum class Kind { move, resign, no_move };
    Kind kind;
    GameGraph::Node to = 0;
};

/// N: a move to a P follower. D: a move to a D follower. P: resign, or
/// no_move when there are no followers. Ties go to the highest-numbered follower.
MoveAdvice best_move(const GameGraph& g, GameGraph::Node pos, std::span<const Outcome> outcomes);

/// XOR of finite values. Throws PreconditionError if any component is infinite.
GammaValue sum_gamma(std::span<const GammaValue> values);

/// Structural audit of a gamma table against its graph. Returns one message
/// per violated clause (empty when the table is consistent):
///   A1  no finite node has a follower with the same finite value
///   B1  a node valued k has followers valued j < k with smaller counters
///   B2  every infinite follower of a node valued k has a follower valued k
///       with counter below the node's
///   B3  the same for finite followers valued above k
///   C   an infinite node has an infinite follower whose exits miss the
///       node's mex
///   K   stored exit sets equal the finite follower values
std::vector<std::string> audit_gamma_table(const GameGraph& g, const GammaTable& table,
                                           std::size_t max_messages = 16);

/// P <-> Finite(0); N <-> Finite(k > 0) or Infinite(K) with 0 in K;
/// D <-> Infinite(K) with 0 not in K.
std::vector<std::string> cross_check_outcomes(std::span<const Outcome> outcomes,
                                              const GammaTable& table,
                                              std::size_t max_messages = 16);

}  // namespace anncode
