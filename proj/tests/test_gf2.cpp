#include <doctest.h>

#include <algorithm>
#include <set>

#include "anncode/errors.hpp"
#include "anncode/gf2.hpp"
#include "support.hpp"

using namespace anncode;

TEST_SUITE("gf2") {

TEST_CASE("bitvec strings are MSB first") {
    const BitVec z0 = BitVec::from_string("0001");
    CHECK(z0.width() == 4);
    CHECK(z0.value() == 1);
    CHECK(z0.test(0));
    CHECK(BitVec::from_string("1000").value() == 8);
    CHECK(BitVec(5, 25).to_string() == "11001");
    CHECK(BitVec::unit(4, 2).to_string() == "0100");
    CHECK(BitVec::zero(3).to_string() == "000");
    CHECK(BitVec(0, 0).to_string().empty());

    CHECK_THROWS_AS(BitVec::from_string("01a1"), PreconditionError);
    CHECK_THROWS_AS(BitVec(65, 0), PreconditionError);
    CHECK_THROWS_AS(BitVec(3, 8), PreconditionError);
    CHECK_THROWS_AS(BitVec::unit(3, 3), PreconditionError);
}

TEST_CASE("xor and hamming reject width mismatch") {
    CHECK((BitVec(4, 3) ^ BitVec(4, 5)) == BitVec(4, 6));
    CHECK_THROWS_AS(BitVec(4, 3) ^ BitVec(5, 3), PreconditionError);
    CHECK(hamming(BitVec(4, 0b0011), BitVec(4, 0b0101)) == 2);
    CHECK_THROWS_AS(hamming(BitVec(4, 0), BitVec(3, 0)), PreconditionError);
    CHECK(weight(BitVec(64, ~std::uint64_t{0})) == 64);
}

TEST_CASE("hamming is a translation-invariant metric") {
    testsupport::Rng rng(11);
    for (int width : {1, 7, 32, 64}) {
        const std::uint64_t mask = low_mask(width);
        for (int trial = 0; trial < 2000; ++trial) {
            const BitVec a(width, rng() & mask), b(width, rng() & mask), c(width, rng() & mask);
            CHECK(hamming(a, b) == hamming(b, a));
            CHECK((hamming(a, b) == 0) == (a == b));
            CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
            CHECK(hamming(a ^ c, b ^ c) == hamming(a, b));
            CHECK(hamming(a, b) == weight(a ^ b));
        }
    }
}

TEST_CASE("mex") {
    auto m = [](std::vector<std::uint32_t> v) { return mex(v); };
    CHECK(m({}) == 0);
    CHECK(m({0, 1, 2}) == 3);
    CHECK(m({1, 2}) == 0);
    CHECK(m({0, 2}) == 1);
    CHECK(m({2, 0, 0, 1, 1, 5}) == 3);

    testsupport::Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(testsupport::uniform(rng, 0, 12)));
        for (auto& x : v) x = static_cast<std::uint32_t>(testsupport::uniform(rng, 0, 8));
        const std::uint32_t k = mex(v);
        CHECK(std::find(v.begin(), v.end(), k) == v.end());
        for (std::uint32_t i = 0; i < k; ++i) CHECK(std::find(v.begin(), v.end(), i) != v.end());
    }
}

TEST_CASE("xor basis agrees with dense elimination") {
    testsupport::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int width = testsupport::uniform(rng, 1, 12);
        std::vector<std::uint64_t> vs(static_cast<std::size_t>(testsupport::uniform(rng, 0, 14)));
        for (auto& v : vs) v = rng() & low_mask(width);
        XorBasis b;
        for (auto v : vs) b.insert(v);
        CHECK(b.rank() == testsupport::naive_rank(vs, width));
        CHECK(rank(vs) == b.rank());
        const auto span = testsupport::naive_span(vs);
        for (std::uint64_t x = 0; x <= low_mask(width); ++x) {
            CHECK(b.contains(x) == (span.count(x) == 1));
        }
    }
}

TEST_CASE("matrix orientation: row 1 bottom, column 1 rightmost") {
    const Gf2Matrix w = Gf2Matrix::from_rows({"1000", "1100", "0110", "0011"});
    CHECK(w.n_rows() == 4);
    CHECK(w.n_cols() == 4);
    CHECK(w.at(1, 1));   // bottom-right
    CHECK(w.at(1, 2));
    CHECK(!w.at(1, 3));
    CHECK(w.at(4, 4));   // top-left
    CHECK(w.column_bits(1) == 0b0001);
    CHECK(w.column_bits(2) == 0b0011);
    CHECK(w.column_bits(3) == 0b0110);
    CHECK(w.column_bits(4) == 0b1100);
    CHECK(w.row_bits(4) == 0b1000);
    CHECK(rank(w) == 4);
    CHECK(Gf2Matrix::identity(3) == Gf2Matrix::from_rows({"100", "010", "001"}));
    CHECK_THROWS_AS(w.at(0, 1), PreconditionError);
    CHECK_THROWS_AS(w.at(1, 5), PreconditionError);
}

TEST_CASE("parse_matrix") {
    const Gf2Matrix w = parse_matrix("# comment\n\n1 0 0 0\n1100\n  0110\n0011 # trailing\n");
    CHECK(w == Gf2Matrix::from_rows({"1000", "1100", "0110", "0011"}));
    CHECK(parse_matrix(serialize_matrix(w)) == w);

    try {
        parse_matrix("1000\n110\n");
        FAIL("ragged matrix accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_matrix("10\n1x\n");
        FAIL("bad character accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_matrix("# nothing\n"), ParseError);
}

TEST_CASE("rank of matrices") {
    CHECK(rank(Gf2Matrix::identity(7)) == 7);
    CHECK(rank(Gf2Matrix(3, 5)) == 0);
    CHECK(rank(Gf2Matrix::from_rows({"1010", "0110", "1100", "0001"})) == 3);
    testsupport::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = testsupport::uniform(rng, 1, 8);
        const Gf2Matrix w = testsupport::random_invertible(rng, n);
        CHECK(rank(w) == n);
    }
}

TEST_CASE("basis_of and span_enumerate") {
    const std::vector<std::uint64_t> words{0, 3, 5, 6};
    const auto b = basis_of(words);
    CHECK(b.size() == 2);
    const auto span = span_enumerate(b);
    CHECK(std::set<std::uint64_t>(span.begin(), span.end()) == std::set<std::uint64_t>{0, 3, 5, 6});

    const std::vector<std::uint64_t> basis{0b0001, 0b0011, 0b0110};
    const auto e = span_enumerate(basis);
    REQUIRE(e.size() == 8);
    for (std::size_t k = 0; k < e.size(); ++k) {
        std::uint64_t expect = 0;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if ((k >> j) & 1u) expect ^= basis[j];
        }
        CHECK(e[k] == expect);
    }

    const std::vector<std::uint64_t> dependent{1, 2, 3};
    CHECK_THROWS_AS(span_enumerate(dependent), PreconditionError);

    const std::vector<BitVec> bv{BitVec(3, 1), BitVec(3, 6)};
    CHECK(span_enumerate(bv, 3).size() == 4);
    CHECK_THROWS_AS(span_enumerate(bv, 4), PreconditionError);
}

}  // TEST_SUITE
