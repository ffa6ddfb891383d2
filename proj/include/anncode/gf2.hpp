#pragma once

// Vectors and matrices over GF(2), packed into 64-bit words.
//
// Coordinate 0 is the least significant bit. Printed binary strings are
// MSB-first, so the unit vector at coordinate 0 of width 4 prints as "0001".

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anncode {

inline constexpr int kMaxWidth = 64;

/// Mask with the low `width` bits set.
constexpr std::uint64_t low_mask(int width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

class BitVec {
public:
    BitVec() = default;
    BitVec(int width, std::uint64_t value);

    static BitVec zero(int width) { return BitVec(width, 0); }
    static BitVec unit(int width, int coordinate);
    /// Parses an MSB-first string of '0'/'1'; the width is the string length.
    static BitVec from_string(std::string_view binary);

    int width() const noexcept { return width_; }
    std::uint64_t value() const noexcept { return bits_; }
    bool test(int coordinate) const noexcept { return (bits_ >> coordinate) & 1u; }

    /// MSB-first rendering, e.g. "0011".
    std::string to_string() const;

    friend BitVec operator^(BitVec a, BitVec b);
    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.width_ <=> b.width_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    int width_ = 0;
    std::uint64_t bits_ = 0;
};

int weight(std::uint64_t bits) noexcept;
int weight(BitVec a) noexcept;

/// Throws PreconditionError when the widths differ.
int hamming(BitVec a, BitVec b);

inline int hamming(std::uint64_t a, std::uint64_t b) noexcept { return weight(a ^ b); }

/// Least nonnegative integer not in `values` (duplicates allowed).
std::uint32_t mex(std::span<const std::uint32_t> values);

/// Incremental GF(2) basis kept in reduced form, one pivot per leading bit.
class XorBasis {
public:
    /// Returns true when `v` was independent of the current span.
    bool insert(std::uint64_t v);
    bool contains(std::uint64_t v) const noexcept;
    /// Reduces `v` against the pivots; zero iff `v` is in the span.
    std::uint64_t reduce(std::uint64_t v) const noexcept;
    int rank() const noexcept { return rank_; }

private:
    std::uint64_t pivot_[64] = {};
    int rank_ = 0;
};

/// Dense matrix over GF(2).
///
/// Indexing follows the row-from-bottom / column-from-right convention:
/// row 1 is the bottom row and column 1 the rightmost column. Row i is stored
/// with column j at bit j-1; column j read as a vector has row i at bit i-1,
/// which makes the top row its most significant bit.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int n_rows, int n_cols);

    static Gf2Matrix identity(int n);
    /// Rows given top row first, leftmost character = column n_cols.
    static Gf2Matrix from_rows(const std::vector<std::string>& rows_top_first);

    int n_rows() const noexcept { return n_rows_; }
    int n_cols() const noexcept { return n_cols_; }

    bool at(int row, int col) const;
    void set(int row, int col, bool value);

    std::uint64_t row_bits(int row) const;
    std::uint64_t column_bits(int col) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    void check_index(int row, int col) const;

    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<std::uint64_t> rows_;  // rows_[i - 1] is row i (from the bottom)
};

/// Parses the matrix text format: one row per line of '0'/'1', top row first,
/// blank lines and '#' comments ignored. All rows must have equal length.
Gf2Matrix parse_matrix(std::string_view text);
std::string serialize_matrix(const Gf2Matrix& m);

int rank(const Gf2Matrix& m);
int rank(std::span<const std::uint64_t> vectors);

/// Maximal independent subset, scanning candidates in ascending integer order.
std::vector<std::uint64_t> basis_of(std::span<const std::uint64_t> words);
std::vector<BitVec> basis_of(std::span<const BitVec> words);

/// Element k is the XOR of basis[j] over the set bits j of k.
/// Throws PreconditionError when the basis is dependent or too large.
std::vector<std::uint64_t> span_enumerate(std::span<const std::uint64_t> basis);
std::vector<BitVec> span_enumerate(std::span<const BitVec> basis, int width);

}  // namespace anncode
