#include "anncode/lexicode.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "anncode/errors.hpp"

namespace anncode {

std::uint64_t OrderingSpec::element(std::uint64_t k) const {
    if (k >= size()) throw PreconditionError("ordering index out of range");
    std::uint64_t v = 0;
    for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
        v ^= columns_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return v;
}

std::vector<std::uint64_t> OrderingSpec::elements() const {
    return span_enumerate(columns_);
}

OrderingSpec make_ordering(const Gf2Matrix& w, int m) {
    if (m < 0 || m > w.n_cols() || m > w.n_rows()) {
        throw PreconditionError("make_ordering: m = " + std::to_string(m) +
                                " outside [0, min(rows, cols)]");
    }
    OrderingSpec spec;
    spec.w_ = w;
    spec.m_ = m;
    for (int j = 1; j <= m; ++j) spec.columns_.push_back(w.column_bits(j));
    if (rank(spec.columns_) != m) {
        throw PreconditionError("make_ordering: columns 1.." + std::to_string(m) +
                                " are linearly dependent");
    }
    XorBasis picked;
    const std::uint64_t restrict = low_mask(m);
    for (int i = 1; i <= w.n_rows() && picked.rank() < m; ++i) {
        if (picked.insert(w.row_bits(i) & restrict)) spec.rows_.push_back(i);
    }
    return spec;
}

OrderingSpec make_ordering(const Gf2Matrix& w) { return make_ordering(w, w.n_cols()); }

GreedyResult greedy(std::span<const std::uint64_t> sequence, int d) {
    if (d < 1) throw PreconditionError("greedy: d must be positive");
    GreedyResult r;
    r.d = d;
    r.ordering = "index";
    for (std::uint64_t candidate : sequence) {
        bool far = true;
        // Newest first: rejections usually come from recent neighbours.
        for (auto it = r.selected.rbegin(); it != r.selected.rend(); ++it) {
            if (hamming(*it, candidate) < d) {
                far = false;
                break;
            }
        }
        if (far) r.selected.push_back(candidate);
    }
    return r;
}

GreedyResult greedy(const OrderingSpec& ordering, int d) { return greedy(ordering.elements(), d); }

GreedyResult greedy_value_ordered(std::span<const std::uint64_t> elements, int d) {
    std::vector<std::uint64_t> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    GreedyResult r = greedy(sorted, d);
    r.ordering = "value";
    return r;
}

GreedyResult lexi_anncode(std::span<const std::uint64_t> basis, int d) {
    return greedy(span_enumerate(basis), d);
}

Lexigraph build_lexigraph(const OrderingSpec& ordering, int d, EdgeOrder order, int max_dimension) {
    if (d < 1) throw PreconditionError("build_lexigraph: d must be positive");
    if (ordering.m() > max_dimension) {
        throw ScaleCapError("lexigraph dimension", ordering.m(), max_dimension);
    }
    Lexigraph lg;
    lg.d = d;
    lg.order = order;
    lg.vectors = ordering.elements();
    const std::size_t n = lg.vectors.size();

    std::unordered_map<std::uint64_t, GameGraph::Node> index;
    index.reserve(n);
    for (std::size_t k = 0; k < n; ++k) index.emplace(lg.vectors[k], static_cast<GameGraph::Node>(k));

    // Differences of adjacent vertices are the nonzero span elements of weight < d.
    std::vector<std::uint64_t> near;
    for (std::uint64_t v : lg.vectors) {
        if (v != 0 && weight(v) < d) near.push_back(v);
    }

    auto precedes = [&](GameGraph::Node j, GameGraph::Node k) {
        return order == EdgeOrder::index ? j < k : lg.vectors[j] < lg.vectors[k];
    };
    std::vector<std::size_t> offsets{0};
    std::vector<GameGraph::Node> targets;
    std::vector<GameGraph::Node> row;
    offsets.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        row.clear();
        for (std::uint64_t e : near) {
            const GameGraph::Node j = index.at(lg.vectors[k] ^ e);
            if (precedes(j, static_cast<GameGraph::Node>(k))) row.push_back(j);
        }
        std::sort(row.begin(), row.end());
        targets.insert(targets.end(), row.begin(), row.end());
        offsets.push_back(targets.size());
    }
    lg.graph = GameGraph::from_csr(std::move(offsets), std::move(targets));

    // Every edge points to an earlier node in the chosen order, so one pass in
    // that order sees each follower before its ancestors.
    std::vector<GameGraph::Node> visit(n);
    std::iota(visit.begin(), visit.end(), GameGraph::Node{0});
    if (order == EdgeOrder::value) {
        std::sort(visit.begin(), visit.end(),
                  [&](GameGraph::Node a, GameGraph::Node b) { return lg.vectors[a] < lg.vectors[b]; });
    }
    lg.g.assign(n, 0);
    std::vector<std::uint32_t> scratch;
    for (GameGraph::Node k : visit) {
        scratch.clear();
        for (GameGraph::Node j : lg.graph.followers(k)) scratch.push_back(lg.g[j]);
        lg.g[k] = mex(scratch);
    }
    return lg;
}

std::vector<std::uint64_t> zero_set(const Lexigraph& lg) {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < lg.g.size(); ++k) {
        if (lg.g[k] == 0) out.push_back(lg.vectors[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace anncode
