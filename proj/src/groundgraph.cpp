#include "anncode/groundgraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "anncode/errors.hpp"

namespace anncode {

namespace {

const std::string kNoLabel;

constexpr int kMaxGammaT = 16;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::uint64_t parse_index(std::string_view tok, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

GroundGraph::GroundGraph(std::size_t n) : out_(n), labels_(n) {}

void GroundGraph::check_vertex(Vertex u) const {
    if (u >= out_.size()) {
        throw PreconditionError("vertex " + std::to_string(u) + " out of range (n = " +
                                std::to_string(out_.size()) + ")");
    }
}

void GroundGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto& f = out_[u];
    auto it = std::lower_bound(f.begin(), f.end(), v);
    if (it == f.end() || *it != v) f.insert(it, v);
}

bool GroundGraph::has_edge(Vertex u, Vertex v) const {
    const auto& f = followers(u);
    return std::binary_search(f.begin(), f.end(), v);
}

const std::vector<Vertex>& GroundGraph::followers(Vertex u) const {
    check_vertex(u);
    return out_[u];
}

std::size_t GroundGraph::edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& f : out_) e += f.size();
    return e;
}

std::vector<Vertex> GroundGraph::sinks() const {
    std::vector<Vertex> s;
    for (Vertex u = 0; u < out_.size(); ++u) {
        if (out_[u].empty()) s.push_back(u);
    }
    return s;
}

void GroundGraph::set_label(Vertex u, std::string label) {
    check_vertex(u);
    labels_[u] = std::move(label);
}

const std::string& GroundGraph::label(Vertex u) const {
    check_vertex(u);
    return labels_[u].empty() ? kNoLabel : labels_[u];
}

// ---------------------------------------------------------------------------

GroundGraph parse_graph(std::string_view text) {
    GroundGraph g;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;

        if (tok[0] == "vertices") {
            if (have_header) throw ParseError(line_no, "duplicate 'vertices' header");
            if (tok.size() != 2) throw ParseError(line_no, "expected 'vertices <n>'");
            auto n = parse_index(tok[1], line_no);
            if (n > (std::uint64_t{1} << 24)) throw ParseError(line_no, "vertex count too large");
            g = GroundGraph(static_cast<std::size_t>(n));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "missing 'vertices <n>' header");

        if (tok[0] == "label") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'label <u> <name>'");
            auto u = parse_index(tok[1], line_no);
            if (u >= g.size()) {
                throw ParseError(line_no, "vertex " + std::to_string(u) + " out of range");
            }
            g.set_label(static_cast<Vertex>(u), std::string(tok[2]));
            continue;
        }
        if (tok.size() == 3 && tok[1] == "->") {
            auto u = parse_index(tok[0], line_no);
            auto v = parse_index(tok[2], line_no);
            if (u >= g.size() || v >= g.size()) {
                throw ParseError(line_no, "edge endpoint out of range (n = " +
                                              std::to_string(g.size()) + ")");
            }
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            continue;
        }
        throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
    if (!have_header) throw ParseError(line_no, "missing 'vertices <n>' header");
    return g;
}

std::string serialize_graph(const GroundGraph& g) {
    std::ostringstream os;
    os << "vertices " << g.size() << '\n';
    for (Vertex u = 0; u < g.size(); ++u) {
        if (!g.label(u).empty()) os << "label " << u << ' ' << g.label(u) << '\n';
    }
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.followers(u)) os << u << " -> " << v << '\n';
    }
    return os.str();
}

bool is_acyclic(const GroundGraph& g) {
    // Kahn: repeatedly strip vertices with no remaining followers.
    const std::size_t n = g.size();
    std::vector<std::size_t> remaining(n);
    std::vector<std::vector<Vertex>> rev(n);
    std::vector<Vertex> ready;
    for (Vertex u = 0; u < n; ++u) {
        remaining[u] = g.followers(u).size();
        for (Vertex v : g.followers(u)) rev[v].push_back(u);
        if (remaining[u] == 0) ready.push_back(u);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex u : rev[v]) {
            if (--remaining[u] == 0) ready.push_back(u);
        }
    }
    return removed == n;
}

GroundGraph disjoint_sum(const GroundGraph& g1, const GroundGraph& g2) {
    const auto shift = static_cast<Vertex>(g1.size());
    GroundGraph s(g1.size() + g2.size());
    for (Vertex u = 0; u < g1.size(); ++u) {
        s.set_label(u, g1.label(u));
        for (Vertex v : g1.followers(u)) s.add_edge(u, v);
    }
    for (Vertex u = 0; u < g2.size(); ++u) {
        s.set_label(u + shift, g2.label(u));
        for (Vertex v : g2.followers(u)) s.add_edge(u + shift, v + shift);
    }
    return s;
}

GroundGraph nim_heap(int k) {
    if (k < 1) throw PreconditionError("nim_heap: size must be positive");
    GroundGraph g(static_cast<std::size_t>(k) + 1);
    g.set_label(0, "leaf");
    for (int j = 0; j < k; ++j) {
        const auto zj = static_cast<Vertex>(j + 1);
        g.set_label(zj, "z" + std::to_string(j));
        g.add_edge(zj, 0);
        for (int i = 0; i < j; ++i) g.add_edge(zj, static_cast<Vertex>(i + 1));
    }
    return g;
}

GroundGraph star_into_leaf(int k) {
    if (k < 1) throw PreconditionError("star_into_leaf: k must be positive");
    GroundGraph g(static_cast<std::size_t>(k) + 1);
    g.set_label(0, "leaf");
    for (int i = 0; i < k; ++i) {
        g.set_label(static_cast<Vertex>(i + 1), "z" + std::to_string(i));
        g.add_edge(static_cast<Vertex>(i + 1), 0);
    }
    return g;
}

GroundGraph example2_graph() {
    GroundGraph g(5);
    g.set_label(0, "leaf");
    for (Vertex i = 0; i < 4; ++i) g.set_label(i + 1, "z" + std::to_string(i));
    g.add_edge(1, 2);
    g.add_edge(2, 1);
    g.add_edge(3, 0);
    g.add_edge(4, 0);
    return g;
}

Vertex gamma_t_x(int t, int i) {
    const int J = 1 << (t - 1);
    if (i < 1 || i > J) throw PreconditionError("gamma_t: x index out of range");
    return static_cast<Vertex>(i - 1);
}

Vertex gamma_t_y(int t, int i) {
    const int J = 1 << (t - 1);
    if (i < 1 || i > J) throw PreconditionError("gamma_t: y index out of range");
    return static_cast<Vertex>(J + i - 1);
}

GroundGraph gamma_t(int t) {
    if (t < 1 || t > kMaxGammaT) {
        throw PreconditionError("gamma_t: t must be in [1, " + std::to_string(kMaxGammaT) + "]");
    }
    const int J = 1 << (t - 1);
    GroundGraph g(static_cast<std::size_t>(2 * J));
    for (int i = 1; i <= J; ++i) {
        g.set_label(gamma_t_x(t, i), "x" + std::to_string(i));
        g.set_label(gamma_t_y(t, i), "y" + std::to_string(i));
        g.add_edge(gamma_t_x(t, i), gamma_t_y(t, i));
    }
    for (int k = 1; k <= J; ++k) {
        for (int i = 1; i < k; ++i) g.add_edge(gamma_t_y(t, k), gamma_t_y(t, i));
        for (int j = 1; j <= J; ++j) {
            if (j != k) g.add_edge(gamma_t_y(t, k), gamma_t_x(t, j));
        }
    }
    return g;
}

}  // namespace anncode
