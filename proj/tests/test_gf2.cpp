#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "golay/gf2.hpp"

using golay::BitMatrix;
using golay::BitVector;

namespace {

std::vector<std::vector<int>> unpack(const BitMatrix& m) {
    std::vector<std::vector<int>> out(m.n_rows(), std::vector<int>(m.n_cols(), 0));
    for (std::size_t i = 0; i < m.n_rows(); ++i)
        for (std::size_t j = 0; j < m.n_cols(); ++j) out[i][j] = m.row(i).get(j);
    return out;
}

// Plain integer-vector Gaussian elimination, independent of the packed code.
int rank_oracle(std::vector<std::vector<int>> m) {
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return static_cast<int>(r);
}

// Minimum nonzero combination weight by brute force on integer vectors.
int min_distance_oracle(const std::vector<std::vector<int>>& rows) {
    const std::size_t k = rows.size(), n = rows[0].size();
    int best = -1;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> v(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                for (std::size_t j = 0; j < n; ++j) v[j] ^= rows[i][j];
        int w = 0;
        for (int b : v) w += b;
        if (w > 0 && (best < 0 || w < best)) best = w;
    }
    return best;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<BitVector> rs;
    for (std::size_t i = 0; i < rows; ++i) {
        BitVector r(cols);
        for (std::size_t j = 0; j < cols; ++j) r.set(j, rng() & 1);
        rs.push_back(std::move(r));
    }
    return BitMatrix(std::move(rs));
}

}  // namespace

TEST_CASE("BitVector construction and symbol/value convention") {
    const BitVector v = BitVector::from_string("10111000");
    CHECK(v.size() == 8);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.weight() == 4);
    CHECK(v.value() == 29);  // symbol 0 is the least significant bit
    CHECK(v.to_string() == "10111000");
    CHECK(BitVector::from_string("1 0 1 1 1 0 0 0").value() == 29);
    CHECK(BitVector::from_value(29, 8) == v);
    CHECK_THROWS_AS(BitVector::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::from_string("10x1"), std::invalid_argument);
    CHECK_THROWS_AS(BitVector(0), std::invalid_argument);
    CHECK_THROWS_AS(v.get(8), std::out_of_range);
}

TEST_CASE("BitVector arithmetic") {
    const BitVector a = BitVector::from_string("1100");
    const BitVector b = BitVector::from_string("1010");
    CHECK((a ^ b) == BitVector::from_string("0110"));
    CHECK(a.complement() == BitVector::from_string("0011"));
    CHECK(a.dot(b) == 1);
    CHECK(a.dot(a) == 0);
    CHECK(a.hamming_distance(b) == 2);
    CHECK(a.any());
    CHECK_FALSE(BitVector(4).any());
    CHECK_THROWS_AS(a ^ BitVector::from_string("110"), std::invalid_argument);
    // complement must not leak into padding bits
    BitVector long_v(70);
    const BitVector c = long_v.complement();
    CHECK(c.weight() == 70);
    CHECK(c.complement().weight() == 0);
}

TEST_CASE("BitVector ordering is ascending numeric value") {
    const BitVector a = BitVector::from_string("0100");  // 2
    const BitVector b = BitVector::from_string("0010");  // 4
    CHECK(a < b);
    CHECK_FALSE(b < a);
    std::vector<BitVector> v = {b, a};
    std::sort(v.begin(), v.end());
    CHECK(v[0] == a);
    // 65+ bit vectors compare by high words first
    BitVector hi(80), lo(80);
    hi.set(79, true);
    lo.set(0, true);
    CHECK(lo < hi);
}

TEST_CASE("concat") {
    CHECK(golay::concat(BitVector::from_string("01"), BitVector::from_string("110")) ==
          BitVector::from_string("01110"));
}

TEST_CASE("BitMatrix construction and text format") {
    const BitMatrix m = BitMatrix::from_rows({"101", "011"});
    CHECK(m.n_rows() == 2);
    CHECK(m.n_cols() == 3);
    CHECK(m.row(1) == BitVector::from_string("011"));
    CHECK(m.to_string() == "101\n011\n");

    const BitMatrix parsed = BitMatrix::from_string("# comment\n1 0 1\n\n011\n");
    CHECK(parsed == m);
    CHECK(BitMatrix::from_string(m.to_string()) == m);       // round trip
    CHECK(BitMatrix::from_string("101\n011") == m);          // no trailing newline
    CHECK_THROWS_AS(BitMatrix::from_string("101\n01"), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix::from_string("# only comments\n"), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix(std::vector<BitVector>{}), std::invalid_argument);
}

TEST_CASE("identity and vstack") {
    const BitMatrix i3 = BitMatrix::identity(3);
    CHECK(i3.to_string() == "100\n010\n001\n");
    const BitMatrix s = golay::vstack(i3, BitMatrix::from_rows({"111"}));
    CHECK(s.n_rows() == 4);
    CHECK(s.row(3).weight() == 3);
    CHECK_THROWS_AS(golay::vstack(i3, BitMatrix::from_rows({"11"})), std::invalid_argument);
}

TEST_CASE("kronecker product blocks") {
    const BitMatrix a = BitMatrix::from_rows({"10", "11"});
    const BitMatrix b = BitMatrix::from_rows({"11"});
    const BitMatrix k = golay::kronecker(a, b);
    CHECK(k.to_string() == "1100\n1111\n");
    // block (i,j) of kron(a, b) is a_ij * b
    const BitMatrix a2 = BitMatrix::from_rows({"101", "011"});
    const BitMatrix b2 = BitMatrix::from_rows({"10", "01"});
    const BitMatrix k2 = golay::kronecker(a2, b2);
    REQUIRE(k2.n_rows() == 4);
    REQUIRE(k2.n_cols() == 6);
    for (std::size_t ia = 0; ia < 2; ++ia)
        for (std::size_t ib = 0; ib < 2; ++ib)
            for (std::size_t ja = 0; ja < 3; ++ja)
                for (std::size_t jb = 0; jb < 2; ++jb)
                    CHECK(k2.row(ia * 2 + ib).get(ja * 2 + jb) ==
                          (a2.row(ia).get(ja) && b2.row(ib).get(jb)));
}

TEST_CASE("rank matches an independent elimination oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 10;
        const std::size_t cols = 1 + rng() % 12;
        const BitMatrix m = random_matrix(rng, rows, cols);
        CHECK(golay::rank(m) == static_cast<std::size_t>(rank_oracle(unpack(m))));
    }
    CHECK(golay::rank(BitMatrix::from_rows({"000"})) == 0);
    CHECK(golay::rank(BitMatrix::identity(7)) == 7);
}

TEST_CASE("rref is canonical for the row space") {
    const BitMatrix m = BitMatrix::from_rows({"110", "011", "101"});
    const BitMatrix e = golay::rref(m);
    CHECK(e == golay::rref(e));  // idempotent
    CHECK(golay::rank(e) == golay::rank(m));
    // any row permutation or row sum leaves rref unchanged
    const BitMatrix m2 = BitMatrix::from_rows({"011", "101", "110"});
    CHECK(golay::rref(m2) == e);
    const BitMatrix m3 = BitMatrix::from_rows({"110", "101"});
    CHECK(golay::rref(m3) == e);
}

TEST_CASE("row_space_equal") {
    const BitMatrix a = BitMatrix::from_rows({"1100", "0011"});
    const BitMatrix b = BitMatrix::from_rows({"1111", "0011"});
    const BitMatrix c = BitMatrix::from_rows({"1100", "0110"});
    CHECK(golay::row_space_equal(a, b));
    CHECK_FALSE(golay::row_space_equal(a, c));
    CHECK_THROWS_AS(golay::row_space_equal(a, BitMatrix::from_rows({"110"})),
                    std::invalid_argument);
    // cross-check the negative with explicit membership: 0110 has no expansion in a
    std::set<std::string> span;
    for (const auto& w : golay::enumerate_codebook(a)) span.insert(w.to_string());
    CHECK_FALSE(span.count("0110"));
}

TEST_CASE("enumerate_codebook is sorted, complete and collapses duplicates") {
    const BitMatrix g = BitMatrix::from_rows({"1100", "0011"});
    const auto book = golay::enumerate_codebook(g);
    REQUIRE(book.size() == 4);
    CHECK(std::is_sorted(book.begin(), book.end()));
    CHECK(book[0] == BitVector(4));
    CHECK(book[3] == BitVector::from_string("1111"));

    const BitMatrix dup = BitMatrix::from_rows({"1100", "1100"});
    CHECK(golay::enumerate_codebook(dup).size() == 2);

    std::vector<BitVector> many(21, BitVector::from_string("1"));
    CHECK_THROWS_AS(golay::enumerate_codebook(BitMatrix(std::move(many))),
                    std::invalid_argument);
}

TEST_CASE("weight_distribution sums to the codebook size") {
    const BitMatrix g = BitMatrix::from_rows({"1010", "0101"});
    const auto dist = golay::weight_distribution(g);
    long long total = 0;
    for (const auto& [w, c] : dist) total += c;
    CHECK(total == 4);
    CHECK(dist.at(0) == 1);
    CHECK(dist.at(2) == 2);
    CHECK(dist.at(4) == 1);
}

TEST_CASE("min_distance matches a brute-force oracle") {
    std::mt19937_64 rng(777);
    int checked = 0;
    while (checked < 60) {
        const BitMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
        bool nonzero = false;
        for (const auto& r : m.rows()) nonzero = nonzero || r.any();
        if (!nonzero) continue;
        CHECK(golay::min_distance(m) == min_distance_oracle(unpack(m)));
        ++checked;
    }
    CHECK_THROWS_AS(golay::min_distance(BitMatrix::from_rows({"000", "000"})),
                    std::invalid_argument);
}

TEST_CASE("nullspace spans the right kernel") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 2 + rng() % 10;
        const BitMatrix m = random_matrix(rng, rows, cols);
        const BitMatrix ns = golay::nullspace(m);
        for (const auto& v : ns.rows())
            for (const auto& r : m.rows()) CHECK(r.dot(v) == 0);
        CHECK(golay::rank(ns) == cols - golay::rank(m));
    }
    // full-rank square matrix: trivial kernel reported as a zero row
    const BitMatrix ns = golay::nullspace(BitMatrix::identity(4));
    CHECK(golay::rank(ns) == 0);
}
