#include "anncode/solver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "anncode/errors.hpp"
#include "anncode/gf2.hpp"

namespace anncode {

using Node = GameGraph::Node;

char outcome_char(Outcome o) noexcept {
    switch (o) {
        case Outcome::P: return 'P';
        case Outcome::N: return 'N';
        case Outcome::D: return 'D';
    }
    return '?';
}

GammaValue GammaValue::infinite(std::vector<std::uint32_t> exits) {
    std::sort(exits.begin(), exits.end());
    exits.erase(std::unique(exits.begin(), exits.end()), exits.end());
    return GammaValue(false, 0, std::move(exits));
}

std::uint32_t GammaValue::value() const {
    if (!finite_) throw PreconditionError("gamma value is infinite");
    return k_;
}

std::string GammaValue::to_string() const {
    if (finite_) return std::to_string(k_);
    std::string s = "inf(";
    for (std::size_t i = 0; i < exits_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(exits_[i]);
    }
    return s + ')';
}

GammaTable::GammaTable(std::vector<std::int32_t> values, std::vector<std::uint32_t> counters,
                       std::vector<std::size_t> exit_offsets,
                       std::vector<std::uint32_t> exit_values)
    : values_(std::move(values)),
      counters_(std::move(counters)),
      exit_offsets_(std::move(exit_offsets)),
      exit_values_(std::move(exit_values)) {
    if (counters_.size() != values_.size() || exit_offsets_.size() != values_.size() + 1) {
        throw PreconditionError("GammaTable: inconsistent array sizes");
    }
}

std::span<const std::uint32_t> GammaTable::exits(Node u) const {
    if (u >= values_.size()) throw PreconditionError("GammaTable: node out of range");
    return {exit_values_.data() + exit_offsets_[u], exit_values_.data() + exit_offsets_[u + 1]};
}

GammaValue GammaTable::at(Node u) const {
    if (is_finite(u)) return GammaValue::finite(static_cast<std::uint32_t>(values_[u]));
    auto k = exits(u);
    return GammaValue::infinite({k.begin(), k.end()});
}

// ---------------------------------------------------------------------------

std::vector<Outcome> classify_pnd(const GameGraph& g) {
    const std::size_t n = g.size();
    std::vector<Outcome> out(n, Outcome::D);
    std::vector<bool> resolved(n, false);
    std::vector<std::size_t> unresolved_followers(n);
    std::vector<Node> queue;
    queue.reserve(n);
    for (Node u = 0; u < n; ++u) {
        unresolved_followers[u] = g.followers(u).size();
        if (unresolved_followers[u] == 0) {
            out[u] = Outcome::P;
            resolved[u] = true;
            queue.push_back(u);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Node v = queue[head];
        for (Node p : g.ancestors(v)) {
            if (resolved[p]) continue;
            if (out[v] == Outcome::P) {
                out[p] = Outcome::N;
                resolved[p] = true;
                queue.push_back(p);
            } else if (--unresolved_followers[p] == 0) {
                out[p] = Outcome::P;
                resolved[p] = true;
                queue.push_back(p);
            }
        }
    }
    return out;
}

std::vector<std::uint32_t> grundy_acyclic(const GameGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint32_t> value(n, 0);
    std::vector<std::size_t> pending(n);
    std::vector<Node> ready;
    for (Node u = 0; u < n; ++u) {
        pending[u] = g.followers(u).size();
        if (pending[u] == 0) ready.push_back(u);
    }
    std::size_t done = 0;
    std::vector<std::uint32_t> scratch;
    while (!ready.empty()) {
        const Node v = ready.back();
        ready.pop_back();
        scratch.clear();
        for (Node w : g.followers(v)) scratch.push_back(value[w]);
        value[v] = mex(scratch);
        ++done;
        for (Node p : g.ancestors(v)) {
            if (--pending[p] == 0) ready.push_back(p);
        }
    }
    if (done != n) throw PreconditionError("grundy_acyclic: graph has a cycle");
    return value;
}

GammaTable gamma_solve(const GameGraph& g) {
    constexpr std::int32_t kUnlabeled = -2;
    constexpr std::int32_t kInf = GammaTable::kInfinite;
    const std::size_t n = g.size();

    std::vector<std::int32_t> label(n, kUnlabeled);
    std::vector<std::uint32_t> counter(n, 0);
    std::uint32_t next_counter = 0;
    std::size_t unlabeled = n;

    // Per-stage state:
    //   has_k[v]   v already has a follower labeled with the current value
    //   blocked[u] same flag, consulted for unlabeled u (cannot take k)
    //   missing[u] unlabeled-or-infinite followers of u without has_k
    std::vector<char> has_k(n);
    std::vector<std::size_t> missing(n);
    std::priority_queue<Node, std::vector<Node>, std::greater<>> eligible;

    const auto open = [&](Node v) { return label[v] == kUnlabeled || label[v] == kInf; };

    for (std::int32_t k = 0; unlabeled > 0; ++k) {
        std::fill(has_k.begin(), has_k.end(), 0);
        for (Node u = 0; u < n; ++u) {
            if (label[u] != kUnlabeled) continue;
            std::size_t m = 0;
            for (Node v : g.followers(u)) m += open(v) ? 1 : 0;
            missing[u] = m;
            if (m == 0) eligible.push(u);
        }
        while (!eligible.empty()) {
            const Node u = eligible.top();
            eligible.pop();
            if (label[u] != kUnlabeled || has_k[u] || missing[u] != 0) continue;
            label[u] = k;
            counter[u] = ++next_counter;
            --unlabeled;
            for (Node p : g.ancestors(u)) {
                if (has_k[p]) continue;
                has_k[p] = 1;
                if (!open(p)) continue;
                for (Node q : g.ancestors(p)) {
                    if (label[q] == kUnlabeled && --missing[q] == 0 && !has_k[q]) eligible.push(q);
                }
            }
        }
        for (Node u = 0; u < n; ++u) {
            if (label[u] == kUnlabeled && !has_k[u]) {
                label[u] = kInf;
                --unlabeled;
            }
        }
    }

    std::vector<std::size_t> exit_offsets(n + 1, 0);
    std::vector<std::uint32_t> exit_values;
    std::vector<std::uint32_t> scratch;
    for (Node u = 0; u < n; ++u) {
        if (label[u] == kInf) {
            scratch.clear();
            for (Node v : g.followers(u)) {
                if (label[v] >= 0) scratch.push_back(static_cast<std::uint32_t>(label[v]));
            }
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            exit_values.insert(exit_values.end(), scratch.begin(), scratch.end());
        }
        exit_offsets[u + 1] = exit_values.size();
    }
    return GammaTable(std::move(label), std::move(counter), std::move(exit_offsets),
                      std::move(exit_values));
}

MoveAdvice best_move(const GameGraph& g, Node pos, std::span<const Outcome> outcomes) {
    if (pos >= g.size() || outcomes.size() != g.size()) {
        throw PreconditionError("best_move: position or outcome table out of range");
    }
    const auto f = g.followers(pos);
    if (f.empty()) return {MoveAdvice::Kind::no_move, 0};
    Outcome want;
    switch (outcomes[pos]) {
        case Outcome::P: return {MoveAdvice::Kind::resign, 0};
        case Outcome::N: want = Outcome::P; break;
        default: want = Outcome::D; break;
    }
    // highest-numbered candidate first
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        if (outcomes[*it] == want) return {MoveAdvice::Kind::move, *it};
    }
    throw PreconditionError("best_move: outcome table is inconsistent with the graph");
}

GammaValue sum_gamma(std::span<const GammaValue> values) {
    std::uint32_t acc = 0;
    for (const GammaValue& v : values) {
        if (!v.is_finite()) {
            throw PreconditionError("infinite component; sum value out of scope");
        }
        acc ^= v.value();
    }
    return GammaValue::finite(acc);
}

// ---------------------------------------------------------------------------

namespace {

class Findings {
public:
    explicit Findings(std::size_t limit) : limit_(limit) {}

    void add(const std::string& clause, Node u, const std::string& detail) {
        if (out_.size() < limit_) {
            out_.push_back(clause + " violated at " + std::to_string(u) + ": " + detail);
        }
    }
    std::vector<std::string> take() { return std::move(out_); }

private:
    std::size_t limit_;
    std::vector<std::string> out_;
};

}  // namespace

std::vector<std::string> audit_gamma_table(const GameGraph& g, const GammaTable& table,
                                           std::size_t max_messages) {
    Findings found(max_messages);
    const std::size_t n = g.size();
    if (table.size() != n) return {"table size " + std::to_string(table.size()) +
                                   " does not match graph size " + std::to_string(n)};

    std::vector<std::uint32_t> finite_vals;
    for (Node u = 0; u < n; ++u) {
        const auto f = g.followers(u);
        finite_vals.clear();
        for (Node v : f) {
            if (table.is_finite(v)) finite_vals.push_back(static_cast<std::uint32_t>(table.raw(v)));
        }
        std::sort(finite_vals.begin(), finite_vals.end());
        finite_vals.erase(std::unique(finite_vals.begin(), finite_vals.end()), finite_vals.end());

        if (!table.is_finite(u)) {
            auto k = table.exits(u);
            if (!std::equal(k.begin(), k.end(), finite_vals.begin(), finite_vals.end())) {
                found.add("K", u, "exit set differs from finite follower values");
            }
            const std::uint32_t m = mex(finite_vals);
            bool justified = false;
            for (Node v : f) {
                if (table.is_finite(v)) continue;
                auto kv = table.exits(v);
                if (!std::binary_search(kv.begin(), kv.end(), m)) {
                    justified = true;
                    break;
                }
            }
            if (!justified) {
                found.add("C", u, "no infinite follower lacks an exit to " + std::to_string(m));
            }
            continue;
        }

        const auto k = static_cast<std::uint32_t>(table.raw(u));
        const std::uint32_t cu = table.counter(u);
        if (cu == 0) found.add("B1", u, "finite value without a counter");

        std::vector<char> seen_below(k, 0);
        for (Node v : f) {
            if (!table.is_finite(v)) continue;
            const auto j = static_cast<std::uint32_t>(table.raw(v));
            if (j == k) found.add("A1", u, "follower " + std::to_string(v) + " has the same value");
            if (j < k && table.counter(v) < cu) seen_below[j] = 1;
        }
        for (std::uint32_t j = 0; j < k; ++j) {
            if (!seen_below[j]) {
                found.add("B1", u, "no earlier-counted follower with value " + std::to_string(j));
                break;
            }
        }

        for (Node v : f) {
            const bool inf = !table.is_finite(v);
            if (!inf && static_cast<std::uint32_t>(table.raw(v)) <= k) continue;
            bool witnessed = false;
            for (Node w : g.followers(v)) {
                if (table.raw(w) == static_cast<std::int32_t>(k) && table.counter(w) < cu) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                found.add(inf ? "B2" : "B3", u,
                          "follower " + std::to_string(v) + " has no return to " +
                              std::to_string(k) + " with a smaller counter");
            }
        }
    }
    return found.take();
}

std::vector<std::string> cross_check_outcomes(std::span<const Outcome> outcomes,
                                              const GammaTable& table, std::size_t max_messages) {
    Findings found(max_messages);
    if (outcomes.size() != table.size()) return {"outcome and gamma tables differ in size"};
    for (Node u = 0; u < outcomes.size(); ++u) {
        Outcome expected;
        if (table.is_finite(u)) {
            expected = table.raw(u) == 0 ? Outcome::P : Outcome::N;
        } else {
            auto k = table.exits(u);
            expected = std::binary_search(k.begin(), k.end(), 0u) ? Outcome::N : Outcome::D;
        }
        if (outcomes[u] != expected) {
            std::ostringstream os;
            os << "outcome " << outcome_char(outcomes[u]) << " but gamma "
               << table.at(u).to_string() << " implies " << outcome_char(expected);
            found.add("outcome", u, os.str());
        }
    }
    return found.take();
}

}  // namespace anncode
