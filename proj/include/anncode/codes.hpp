#pragma once

// Binary codes: distance and linearity analytics, anncode extraction, and
// the coset structure of (generalized) Sprague-Grundy value tables.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anncode/anngame.hpp"
#include "anncode/gf2.hpp"
#include "anncode/groundgraph.hpp"
#include "anncode/solver.hpp"

namespace anncode {

/// A set of codewords of common length n, kept sorted and duplicate-free.
class Code {
public:
    Code() = default;
    Code(int length, std::vector<std::uint64_t> words);

    int length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    bool contains(std::uint64_t w) const;

    std::vector<BitVec> bitvecs() const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// 0 is a codeword and the set is closed under XOR.
bool is_linear(const Code& c);

/// Least distance between distinct codewords; nullopt for fewer than two
/// words. The min-nonzero-weight shortcut is taken only after is_linear.
std::optional<int> min_distance(const Code& c);

struct CodeSummary {
    int length = 0;
    std::size_t size = 0;
    bool linear = false;
    std::optional<int> dimension;     // set for linear codes
    std::optional<int> min_distance;  // nullopt when undefined
    std::vector<std::uint64_t> basis;
};

CodeSummary summarize(const Code& c);

/// Code file format: one MSB-first binary codeword per line, '#' comments.
Code parse_code(std::string_view text);

struct VectorList {
    int width = 0;
    std::vector<std::uint64_t> vectors;  // file order, duplicates kept
};

/// Same format as parse_code, keeping the file order (for basis files).
VectorList parse_vector_list(std::string_view text);
std::string serialize_code(const Code& c);

/// P-positions of the annihilation game on `ground`.
Code anncode_of(const GroundGraph& ground, bool project_sinks = true,
                int max_coordinates = kDefaultMaxCoordinates);

/// Explicit annihilation graph together with its outcome and gamma tables.
struct SolvedAnnGame {
    AnnGraph ann;
    std::vector<Outcome> outcomes;
    GammaTable gamma;
};

SolvedAnnGame solve_anngame(const GroundGraph& ground, bool project_sinks = true,
                            int max_coordinates = kDefaultMaxCoordinates);

/// Outcome of checking the homomorphism structure of a value table.
struct CosetReport {
    int t = 0;         // finite values are exactly 0 .. 2^t - 1
    int m = 0;         // dimension of the kernel V_0
    int dim_vf = 0;    // dimension of the finite part V^f
    std::vector<std::size_t> class_sizes;  // |V_i| for i < 2^t
    std::vector<std::uint64_t> kernel_basis;
    std::vector<std::string> failures;     // "<clause>: <detail>"

    bool ok() const noexcept { return failures.empty(); }
};

/// Checks that the finite values form a homomorphism onto GF(2)^t:
///   onto         finite values are exactly {0 .. 2^t - 1}
///   vf_subspace  V^f is a linear subspace
///   kernel       V_0 is a linear subspace
///   homomorphism value(u ^ b) = value(u) ^ value(b) over a basis of V^f
///   cosets       every V_i equals w ^ V_0 for its first member w
///   equal_sizes  all |V_i| agree
///   dimension    dim V^f = m + t
///   t_bound      2^t - 1 <= sum_{i=1}^{d-1} C(n, i), only when d is given
///
/// `vectors[u]` is the vector at node u; `values[u]` is its value or
/// GammaTable::kInfinite. Vectors must be distinct.
CosetReport verify_theorem2(int n, std::span<const std::uint64_t> vectors,
                            std::span<const std::int32_t> values,
                            std::optional<int> d = std::nullopt);

/// Anngraph form: node index is the position vector.
CosetReport verify_theorem2(const GammaTable& table, int width);

/// { u : value(u) finite and < 2^k } is closed under XOR.
bool union_subspace_check(std::span<const std::uint64_t> vectors,
                          std::span<const std::int32_t> values, int k);
bool union_subspace_check(const GammaTable& table, int k);

struct GammaTClosedForm {
    std::uint32_t max_gamma;  // 2^t - 1
    int dim_vf;               // 2J - 1
    int m;                    // 2^t - t - 1
};

/// Requires t >= 2.
GammaTClosedForm gamma_t_closed_form(int t);

struct GammaTPairFact {
    Position position;
    std::uint32_t gamma;
    std::string description;  // e.g. "x1+y2"
};

/// Predicted gamma for every two-token position of gamma_t(t):
/// x_i+x_j -> 0, x_i+y_j -> j, y_i+y_j -> i xor j. Requires t >= 2.
std::vector<GammaTPairFact> gamma_t_pair_facts(int t);

/// V_0 basis of the 10-vertex groundgraph Gamma'; vertex v (1..10) is bit v-1.
inline constexpr int kGammaPrimeWidth = 10;
inline constexpr std::array<std::uint64_t, 4> kGammaPrimeBasis = {
    (1u << 0) | (1u << 1) | (1u << 8) | (1u << 9),  // (1, 2, 9, 10)
    (1u << 3) | (1u << 4) | (1u << 5) | (1u << 6),  // (4, 5, 6, 7)
    (1u << 1) | (1u << 2) | (1u << 7) | (1u << 8),  // (2, 3, 8, 9)
    (1u << 2) | (1u << 3) | (1u << 6) | (1u << 7),  // (3, 4, 7, 8)
};

/// sum_{i=1}^{d-1} C(n, i), saturating at UINT64_MAX.
std::uint64_t ball_volume(int n, int d);

}  // namespace anncode
