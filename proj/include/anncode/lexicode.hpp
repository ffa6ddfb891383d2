#pragma once

// Matrix-defined lexicographic orderings, the greedy code construction and
// lexigraphs (vectors joined to earlier vectors at distance below d).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anncode/game_graph.hpp"
#include "anncode/gf2.hpp"

namespace anncode {

inline constexpr int kDefaultMaxLexiDimension = 20;

/// Ordering k -> A_k of an m-dimensional column space of W.
///
/// A_k is the XOR of the right-counted columns j in 1..m of W with bit j-1 of
/// k set; vectors have width W.n_rows(). `rows` lists the rows (counted from
/// the bottom) of an invertible m x m submatrix on columns 1..m.
class OrderingSpec {
public:
    const Gf2Matrix& matrix() const noexcept { return w_; }
    int m() const noexcept { return m_; }
    int width() const noexcept { return w_.n_rows(); }
    std::size_t size() const noexcept { return std::size_t{1} << m_; }
    const std::vector<int>& rows() const noexcept { return rows_; }
    /// Column j (1-based from the right) as a vector.
    std::uint64_t column(int j) const { return columns_.at(static_cast<std::size_t>(j - 1)); }

    std::uint64_t element(std::uint64_t k) const;
    /// A_0 .. A_{2^m - 1}.
    std::vector<std::uint64_t> elements() const;

private:
    friend OrderingSpec make_ordering(const Gf2Matrix& w, int m);

    Gf2Matrix w_;
    int m_ = 0;
    std::vector<int> rows_;
    std::vector<std::uint64_t> columns_;
};

/// Throws PreconditionError when columns 1..m of W are dependent or m is out
/// of range. Rows are picked bottom-up, keeping those that raise the rank of
/// their restriction to columns 1..m.
OrderingSpec make_ordering(const Gf2Matrix& w, int m);
OrderingSpec make_ordering(const Gf2Matrix& w);

struct GreedyResult {
    std::vector<std::uint64_t> selected;  // selection order
    int d = 1;
    std::string ordering;  // "index" or "value"
};

/// Scans `sequence` in order and keeps each element at distance >= d from
/// everything kept so far. The first element is always kept.
GreedyResult greedy(std::span<const std::uint64_t> sequence, int d);
GreedyResult greedy(const OrderingSpec& ordering, int d);

/// Same scan over the elements sorted by integer value.
GreedyResult greedy_value_ordered(std::span<const std::uint64_t> elements, int d);

/// Greedy over span_enumerate(basis).
GreedyResult lexi_anncode(std::span<const std::uint64_t> basis, int d);

enum class EdgeOrder { index, value };

/// Acyclic graph on the ordered vectors: node k is A_k, and k -> j whenever
/// A_j precedes A_k (by index or by value) and H(A_j, A_k) < d.
struct Lexigraph {
    std::vector<std::uint64_t> vectors;  // node -> vector
    GameGraph graph;
    std::vector<std::uint32_t> g;  // Sprague-Grundy values
    int d = 1;
    EdgeOrder order = EdgeOrder::index;
};

/// Throws ScaleCapError when m exceeds `max_dimension`.
Lexigraph build_lexigraph(const OrderingSpec& ordering, int d, EdgeOrder order = EdgeOrder::index,
                          int max_dimension = kDefaultMaxLexiDimension);

/// Vectors of the lexigraph's g-zero-set, ascending.
std::vector<std::uint64_t> zero_set(const Lexigraph& lg);

}  // namespace anncode
