#include "anncode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "anncode/errors.hpp"

namespace anncode {

namespace {

constexpr int kMaxSpanRank = 26;

void check_width(int width) {
    if (width < 0 || width > kMaxWidth) {
        throw PreconditionError("vector width " + std::to_string(width) + " outside [0, 64]");
    }
}

}  // namespace

BitVec::BitVec(int width, std::uint64_t value) : width_(width), bits_(value) {
    check_width(width);
    if ((value & ~low_mask(width)) != 0) {
        throw PreconditionError("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(width) + " bits");
    }
}

BitVec BitVec::unit(int width, int coordinate) {
    if (coordinate < 0 || coordinate >= width) {
        throw PreconditionError("coordinate " + std::to_string(coordinate) + " outside width " +
                                std::to_string(width));
    }
    return BitVec(width, std::uint64_t{1} << coordinate);
}

BitVec BitVec::from_string(std::string_view binary) {
    check_width(static_cast<int>(binary.size()));
    std::uint64_t v = 0;
    for (char ch : binary) {
        if (ch != '0' && ch != '1') {
            throw PreconditionError("invalid binary digit '" + std::string(1, ch) + "'");
        }
        v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return BitVec(static_cast<int>(binary.size()), v);
}

std::string BitVec::to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
        if (test(i)) s[static_cast<std::size_t>(width_ - 1 - i)] = '1';
    }
    return s;
}

BitVec operator^(BitVec a, BitVec b) {
    if (a.width_ != b.width_) {
        throw PreconditionError("xor of vectors with widths " + std::to_string(a.width_) +
                                " and " + std::to_string(b.width_));
    }
    BitVec r;
    r.width_ = a.width_;
    r.bits_ = a.bits_ ^ b.bits_;
    return r;
}

int weight(std::uint64_t bits) noexcept { return std::popcount(bits); }

int weight(BitVec a) noexcept { return std::popcount(a.value()); }

int hamming(BitVec a, BitVec b) {
    if (a.width() != b.width()) {
        throw PreconditionError("hamming distance of vectors with widths " +
                                std::to_string(a.width()) + " and " + std::to_string(b.width()));
    }
    return weight(a.value() ^ b.value());
}

std::uint32_t mex(std::span<const std::uint32_t> values) {
    // Any value >= size cannot affect the answer.
    std::vector<bool> seen(values.size() + 1, false);
    for (std::uint32_t v : values) {
        if (v < seen.size()) seen[v] = true;
    }
    std::uint32_t m = 0;
    while (seen[m]) ++m;
    return m;
}

// ---------------------------------------------------------------------------

std::uint64_t XorBasis::reduce(std::uint64_t v) const noexcept {
    while (v != 0) {
        int top = 63 - std::countl_zero(v);
        if (pivot_[top] == 0) return v;
        v ^= pivot_[top];
    }
    return 0;
}

bool XorBasis::insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    pivot_[63 - std::countl_zero(v)] = v;
    ++rank_;
    return true;
}

bool XorBasis::contains(std::uint64_t v) const noexcept { return reduce(v) == 0; }

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(int n_rows, int n_cols) : n_rows_(n_rows), n_cols_(n_cols) {
    if (n_rows < 1 || n_cols < 1 || n_rows > kMaxWidth || n_cols > kMaxWidth) {
        throw PreconditionError("matrix shape " + std::to_string(n_rows) + "x" +
                                std::to_string(n_cols) + " outside [1, 64]");
    }
    rows_.assign(static_cast<std::size_t>(n_rows), 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows_top_first) {
    if (rows_top_first.empty()) throw PreconditionError("matrix has no rows");
    const int n_rows = static_cast<int>(rows_top_first.size());
    const int n_cols = static_cast<int>(rows_top_first.front().size());
    Gf2Matrix m(n_rows, n_cols);
    for (int r = 0; r < n_rows; ++r) {
        const std::string& line = rows_top_first[static_cast<std::size_t>(r)];
        if (static_cast<int>(line.size()) != n_cols) {
            throw PreconditionError("ragged matrix rows");
        }
        const int row = n_rows - r;
        for (int c = 0; c < n_cols; ++c) {
            char ch = line[static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1') {
                throw PreconditionError("invalid matrix entry '" + std::string(1, ch) + "'");
            }
            m.set(row, n_cols - c, ch == '1');
        }
    }
    return m;
}

void Gf2Matrix::check_index(int row, int col) const {
    if (row < 1 || row > n_rows_ || col < 1 || col > n_cols_) {
        throw PreconditionError("matrix index (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") out of range");
    }
}

bool Gf2Matrix::at(int row, int col) const {
    check_index(row, col);
    return (rows_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1u;
}

void Gf2Matrix::set(int row, int col, bool value) {
    check_index(row, col);
    std::uint64_t& r = rows_[static_cast<std::size_t>(row - 1)];
    const std::uint64_t bit = std::uint64_t{1} << (col - 1);
    r = value ? (r | bit) : (r & ~bit);
}

std::uint64_t Gf2Matrix::row_bits(int row) const {
    check_index(row, 1);
    return rows_[static_cast<std::size_t>(row - 1)];
}

std::uint64_t Gf2Matrix::column_bits(int col) const {
    check_index(1, col);
    std::uint64_t v = 0;
    for (int i = 1; i <= n_rows_; ++i) {
        if ((rows_[static_cast<std::size_t>(i - 1)] >> (col - 1)) & 1u) {
            v |= std::uint64_t{1} << (i - 1);
        }
    }
    return v;
}

Gf2Matrix parse_matrix(std::string_view text) {
    std::vector<std::string> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::string row;
        for (char ch : line) {
            if (ch == '0' || ch == '1') {
                row.push_back(ch);
            } else if (ch != ' ' && ch != '\t' && ch != '\r') {
                throw ParseError(line_no, "unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(line_no, "row has " + std::to_string(row.size()) +
                                          " entries, expected " +
                                          std::to_string(rows.front().size()));
        }
        if (row.size() > static_cast<std::size_t>(kMaxWidth)) {
            throw ParseError(line_no, "more than 64 columns");
        }
        rows.push_back(std::move(row));
        if (rows.size() > static_cast<std::size_t>(kMaxWidth)) {
            throw ParseError(line_no, "more than 64 rows");
        }
    }
    if (rows.empty()) throw ParseError(line_no, "matrix has no rows");
    return Gf2Matrix::from_rows(rows);
}

std::string serialize_matrix(const Gf2Matrix& m) {
    std::string out;
    for (int row = m.n_rows(); row >= 1; --row) {
        for (int col = m.n_cols(); col >= 1; --col) out.push_back(m.at(row, col) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

int rank(std::span<const std::uint64_t> vectors) {
    XorBasis b;
    for (std::uint64_t v : vectors) b.insert(v);
    return b.rank();
}

int rank(const Gf2Matrix& m) {
    std::vector<std::uint64_t> cols;
    cols.reserve(static_cast<std::size_t>(m.n_cols()));
    for (int j = 1; j <= m.n_cols(); ++j) cols.push_back(m.column_bits(j));
    return rank(cols);
}

std::vector<std::uint64_t> basis_of(std::span<const std::uint64_t> words) {
    std::vector<std::uint64_t> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    XorBasis b;
    std::vector<std::uint64_t> out;
    for (std::uint64_t w : sorted) {
        if (b.insert(w)) out.push_back(w);
    }
    return out;
}

std::vector<BitVec> basis_of(std::span<const BitVec> words) {
    if (words.empty()) return {};
    const int width = words.front().width();
    std::vector<std::uint64_t> raw;
    raw.reserve(words.size());
    for (const BitVec& w : words) {
        if (w.width() != width) throw PreconditionError("basis_of: mixed vector widths");
        raw.push_back(w.value());
    }
    std::vector<BitVec> out;
    for (std::uint64_t v : basis_of(raw)) out.emplace_back(width, v);
    return out;
}

std::vector<std::uint64_t> span_enumerate(std::span<const std::uint64_t> basis) {
    if (basis.size() > static_cast<std::size_t>(kMaxSpanRank)) {
        throw PreconditionError("span of " + std::to_string(basis.size()) +
                                " vectors is too large to enumerate");
    }
    if (rank(basis) != static_cast<int>(basis.size())) {
        throw PreconditionError("span_enumerate: basis is linearly dependent");
    }
    std::vector<std::uint64_t> out(std::size_t{1} << basis.size());
    // Each element extends an earlier one by its highest set index bit.
    for (std::size_t k = 1; k < out.size(); ++k) {
        const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(k));
        out[k] = out[k ^ (std::size_t{1} << top)] ^ basis[static_cast<std::size_t>(top)];
    }
    return out;
}

std::vector<BitVec> span_enumerate(std::span<const BitVec> basis, int width) {
    std::vector<std::uint64_t> raw;
    raw.reserve(basis.size());
    for (const BitVec& b : basis) {
        if (b.width() != width) throw PreconditionError("span_enumerate: width mismatch");
        raw.push_back(b.value());
    }
    std::vector<BitVec> out;
    for (std::uint64_t v : span_enumerate(raw)) out.emplace_back(width, v);
    return out;
}

}  // namespace anncode
