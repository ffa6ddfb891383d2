#include "anncode/codes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <unordered_map>

#include "anncode/errors.hpp"

namespace anncode {

Code::Code(int length, std::vector<std::uint64_t> words) : length_(length), words_(std::move(words)) {
    if (length < 0 || length > kMaxWidth) {
        throw PreconditionError("code length " + std::to_string(length) + " outside [0, 64]");
    }
    for (std::uint64_t w : words_) {
        if ((w & ~low_mask(length)) != 0) {
            throw PreconditionError("codeword " + std::to_string(w) + " wider than length " +
                                    std::to_string(length));
        }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(std::uint64_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<BitVec> Code::bitvecs() const {
    std::vector<BitVec> out;
    out.reserve(words_.size());
    for (std::uint64_t w : words_) out.emplace_back(length_, w);
    return out;
}

bool is_linear(const Code& c) {
    if (c.size() == 0 || !c.contains(0)) return false;
    // A set holding 2^r distinct vectors of rank r is its own span.
    const int r = rank(c.words());
    return r < 63 && c.size() == (std::size_t{1} << r);
}

std::optional<int> min_distance(const Code& c) {
    const auto& w = c.words();
    if (w.size() < 2) return std::nullopt;
    int best = std::numeric_limits<int>::max();
    if (is_linear(c)) {
        for (std::uint64_t x : w) {
            if (x != 0) best = std::min(best, weight(x));
        }
        return best;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, hamming(w[i], w[j]));
    }
    return best;
}

CodeSummary summarize(const Code& c) {
    CodeSummary s;
    s.length = c.length();
    s.size = c.size();
    s.linear = is_linear(c);
    s.basis = basis_of(c.words());
    if (s.linear) s.dimension = static_cast<int>(s.basis.size());
    s.min_distance = min_distance(c);
    return s;
}

VectorList parse_vector_list(std::string_view text) {
    std::vector<std::uint64_t> words;
    int length = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::string digits;
        for (char ch : line) {
            if (ch == '0' || ch == '1') {
                digits.push_back(ch);
            } else if (ch != ' ' && ch != '\t' && ch != '\r') {
                throw ParseError(line_no, "unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (digits.empty()) continue;
        if (digits.size() > static_cast<std::size_t>(kMaxWidth)) {
            throw ParseError(line_no, "codeword longer than 64 bits");
        }
        if (length < 0) length = static_cast<int>(digits.size());
        if (static_cast<int>(digits.size()) != length) {
            throw ParseError(line_no, "codeword has length " + std::to_string(digits.size()) +
                                          ", expected " + std::to_string(length));
        }
        words.push_back(BitVec::from_string(digits).value());
    }
    if (length < 0) throw ParseError(line_no, "no vectors");
    return VectorList{length, std::move(words)};
}

Code parse_code(std::string_view text) {
    VectorList list = parse_vector_list(text);
    return Code(list.width, std::move(list.vectors));
}

std::string serialize_code(const Code& c) {
    std::string out;
    for (std::uint64_t w : c.words()) {
        out += BitVec(c.length(), w).to_string();
        out += '\n';
    }
    return out;
}

Code anncode_of(const GroundGraph& ground, bool project_sinks, int max_coordinates) {
    const AnnGraph ann = build_anngraph(ground, project_sinks, max_coordinates);
    const auto outcomes = classify_pnd(ann.graph);
    std::vector<std::uint64_t> words;
    for (std::size_t p = 0; p < outcomes.size(); ++p) {
        if (outcomes[p] == Outcome::P) words.push_back(p);
    }
    return Code(ann.game.width(), std::move(words));
}

SolvedAnnGame solve_anngame(const GroundGraph& ground, bool project_sinks, int max_coordinates) {
    AnnGraph ann = build_anngraph(ground, project_sinks, max_coordinates);
    auto outcomes = classify_pnd(ann.graph);
    auto gamma = gamma_solve(ann.graph);
    return SolvedAnnGame{std::move(ann), std::move(outcomes), std::move(gamma)};
}

// ---------------------------------------------------------------------------

std::uint64_t ball_volume(int n, int d) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, i), built incrementally
    for (int i = 1; i <= d - 1 && i <= n; ++i) {
        const auto num = static_cast<unsigned __int128>(binom) * static_cast<unsigned>(n - i + 1);
        const auto next = num / static_cast<unsigned>(i);
        if (next > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        binom = static_cast<std::uint64_t>(next);
        if (total > std::numeric_limits<std::uint64_t>::max() - binom) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total += binom;
    }
    return total;
}

namespace {

/// Maps a vector back to its value; identity-indexed tables skip the hash.
class ValueLookup {
public:
    ValueLookup(std::span<const std::uint64_t> vectors, std::span<const std::int32_t> values)
        : values_(values) {
        identity_ = true;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i] != i) {
                identity_ = false;
                break;
            }
        }
        if (!identity_) {
            index_.reserve(vectors.size());
            for (std::size_t i = 0; i < vectors.size(); ++i) {
                if (!index_.emplace(vectors[i], i).second) {
                    throw PreconditionError("verify_theorem2: vectors are not distinct");
                }
            }
        }
    }

    /// Value at vector v; nullopt when v is not a node.
    std::optional<std::int32_t> operator()(std::uint64_t v) const {
        if (identity_) {
            if (v >= values_.size()) return std::nullopt;
            return values_[v];
        }
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return values_[it->second];
    }

private:
    std::span<const std::int32_t> values_;
    bool identity_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace

CosetReport verify_theorem2(int n, std::span<const std::uint64_t> vectors,
                            std::span<const std::int32_t> values, std::optional<int> d) {
    if (vectors.size() != values.size()) {
        throw PreconditionError("verify_theorem2: vectors and values differ in length");
    }
    CosetReport r;
    const ValueLookup value_of(vectors, values);
    auto fail = [&r](const std::string& clause, const std::string& detail) {
        r.failures.push_back(clause + ": " + detail);
    };

    std::int32_t max_value = -1;
    std::size_t finite_count = 0;
    for (std::int32_t v : values) {
        if (v < 0) continue;
        ++finite_count;
        max_value = std::max(max_value, v);
    }
    if (finite_count == 0) {
        fail("onto", "no finite values");
        return r;
    }
    r.t = std::bit_width(static_cast<std::uint32_t>(max_value));
    const std::size_t n_classes = std::size_t{1} << r.t;
    r.class_sizes.assign(n_classes, 0);
    for (std::int32_t v : values) {
        if (v >= 0) ++r.class_sizes[static_cast<std::size_t>(v)];
    }
    for (std::size_t i = 0; i < n_classes; ++i) {
        if (r.class_sizes[i] == 0) {
            fail("onto", "value " + std::to_string(i) + " is never taken");
            break;
        }
    }

    XorBasis vf_span;
    XorBasis kernel_span;
    std::vector<std::uint64_t> vf_basis;
    for (std::size_t u = 0; u < values.size(); ++u) {
        if (values[u] < 0) continue;
        if (vf_span.insert(vectors[u])) vf_basis.push_back(vectors[u]);
        if (values[u] == 0 && kernel_span.insert(vectors[u])) r.kernel_basis.push_back(vectors[u]);
    }
    r.dim_vf = vf_span.rank();
    r.m = kernel_span.rank();
    if (r.dim_vf >= 63 || finite_count != (std::size_t{1} << r.dim_vf)) {
        fail("vf_subspace", std::to_string(finite_count) + " finite vectors span dimension " +
                                std::to_string(r.dim_vf));
    }
    if (r.m >= 63 || r.class_sizes[0] != (std::size_t{1} << r.m)) {
        fail("kernel", std::to_string(r.class_sizes[0]) + " kernel vectors span dimension " +
                           std::to_string(r.m));
    }

    bool hom_ok = true;
    for (std::size_t u = 0; u < values.size() && hom_ok; ++u) {
        if (values[u] < 0) continue;
        for (std::uint64_t b : vf_basis) {
            const auto vb = value_of(b);
            const auto vub = value_of(vectors[u] ^ b);
            if (!vub || *vub < 0 || *vub != (values[u] ^ *vb)) {
                fail("homomorphism", "value(" + std::to_string(vectors[u]) + " ^ " +
                                         std::to_string(b) + ") is not value(u) ^ value(b)");
                hom_ok = false;
                break;
            }
        }
    }

    std::vector<std::uint64_t> kernel;
    std::vector<std::optional<std::uint64_t>> representative(n_classes);
    for (std::size_t u = 0; u < values.size(); ++u) {
        if (values[u] < 0) continue;
        if (values[u] == 0) kernel.push_back(vectors[u]);
        auto& rep = representative[static_cast<std::size_t>(values[u])];
        if (!rep) rep = vectors[u];
    }
    for (std::size_t i = 0; i < n_classes; ++i) {
        if (!representative[i]) continue;
        bool ok = r.class_sizes[i] == kernel.size();
        for (std::size_t j = 0; ok && j < kernel.size(); ++j) {
            const auto v = value_of(*representative[i] ^ kernel[j]);
            ok = v && *v == static_cast<std::int32_t>(i);
        }
        if (!ok) {
            fail("cosets", "V_" + std::to_string(i) + " is not a coset of V_0");
            break;
        }
    }

    if (!std::all_of(r.class_sizes.begin(), r.class_sizes.end(),
                     [&](std::size_t s) { return s == r.class_sizes[0]; })) {
        fail("equal_sizes", "value classes differ in size");
    }
    if (r.dim_vf != r.m + r.t) {
        fail("dimension", "dim V^f = " + std::to_string(r.dim_vf) + " but m + t = " +
                              std::to_string(r.m + r.t));
    }
    if (d) {
        const std::uint64_t bound = ball_volume(n, *d);
        if ((std::uint64_t{1} << r.t) - 1 > bound) {
            fail("t_bound", "2^t - 1 = " + std::to_string((1u << r.t) - 1) + " exceeds " +
                                std::to_string(bound));
        }
    }
    return r;
}

CosetReport verify_theorem2(const GammaTable& table, int width) {
    if (table.size() != (std::size_t{1} << width)) {
        throw PreconditionError("verify_theorem2: table does not cover 2^width positions");
    }
    std::vector<std::uint64_t> vectors(table.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) vectors[i] = i;
    return verify_theorem2(width, vectors, table.raw_values());
}

bool union_subspace_check(std::span<const std::uint64_t> vectors,
                          std::span<const std::int32_t> values, int k) {
    if (vectors.size() != values.size() || k < 0 || k > 30) {
        throw PreconditionError("union_subspace_check: bad arguments");
    }
    const std::int32_t limit = std::int32_t{1} << k;
    XorBasis span;
    std::size_t count = 0;
    for (std::size_t u = 0; u < values.size(); ++u) {
        if (values[u] >= 0 && values[u] < limit) {
            ++count;
            span.insert(vectors[u]);
        }
    }
    return count > 0 && span.rank() < 63 && count == (std::size_t{1} << span.rank());
}

bool union_subspace_check(const GammaTable& table, int k) {
    std::vector<std::uint64_t> vectors(table.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) vectors[i] = i;
    return union_subspace_check(vectors, table.raw_values(), k);
}

GammaTClosedForm gamma_t_closed_form(int t) {
    if (t < 2 || t > 16) throw PreconditionError("gamma_t_closed_form: t must be in [2, 16]");
    const int J = 1 << (t - 1);
    return GammaTClosedForm{(std::uint32_t{1} << t) - 1, 2 * J - 1, (1 << t) - t - 1};
}

std::vector<GammaTPairFact> gamma_t_pair_facts(int t) {
    if (t < 2 || t > 5) throw PreconditionError("gamma_t_pair_facts: t must be in [2, 5]");
    const int J = 1 << (t - 1);
    auto bit = [](Vertex v) { return Position{1} << v; };
    auto name = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
    std::vector<GammaTPairFact> facts;
    for (int i = 1; i <= J; ++i) {
        for (int j = i + 1; j <= J; ++j) {
            facts.push_back({bit(gamma_t_x(t, i)) | bit(gamma_t_x(t, j)), 0,
                             name('x', i) + "+" + name('x', j)});
        }
    }
    for (int i = 1; i <= J; ++i) {
        for (int j = 1; j <= J; ++j) {
            facts.push_back({bit(gamma_t_x(t, i)) | bit(gamma_t_y(t, j)),
                             static_cast<std::uint32_t>(j), name('x', i) + "+" + name('y', j)});
        }
    }
    for (int i = 1; i <= J; ++i) {
        for (int j = i + 1; j <= J; ++j) {
            facts.push_back({bit(gamma_t_y(t, i)) | bit(gamma_t_y(t, j)),
                             static_cast<std::uint32_t>(i ^ j), name('y', i) + "+" + name('y', j)});
        }
    }
    return facts;
}

}  // namespace anncode
