#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "golay/construction.hpp"

using golay::BitMatrix;
using golay::BitVector;
using golay::Code844;
using golay::GolayCode;

namespace {

GolayCode default_code(int variant = 1) {
    const auto& p = golay::default_parity();
    const Code844 seed = golay::build_systematic(p);
    if (variant <= 6)
        return golay::direct_sum(
            seed, golay::apply_permutation(
                      p, golay::companion_permutations()[static_cast<std::size_t>(variant - 1)]));
    const auto pair = golay::build_g7_g8(p, golay::default_g78_choices());
    return golay::direct_sum(seed, variant == 7 ? pair.first : pair.second);
}

}  // namespace

TEST_CASE("component generators") {
    CHECK(golay::spc_generator().to_string() == "101\n011\n");
    CHECK(golay::repetition_generator().to_string() == "111\n");
}

TEST_CASE("array code C stacks |g 0 g| over |0 g g|") {
    const Code844 seed = golay::build_systematic(golay::default_parity());
    const BitMatrix c = golay::build_array_C(seed);
    REQUIRE(c.n_rows() == 8);
    REQUIRE(c.n_cols() == 24);
    for (int i = 0; i < 4; ++i) {
        const BitVector& g = seed.generator().row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(c.row(static_cast<std::size_t>(i)).get(j) == g.get(j));
            CHECK_FALSE(c.row(static_cast<std::size_t>(i)).get(8 + j));
            CHECK(c.row(static_cast<std::size_t>(i)).get(16 + j) == g.get(j));
            CHECK_FALSE(c.row(static_cast<std::size_t>(i + 4)).get(j));
            CHECK(c.row(static_cast<std::size_t>(i + 4)).get(8 + j) == g.get(j));
            CHECK(c.row(static_cast<std::size_t>(i + 4)).get(16 + j) == g.get(j));
        }
    }
    CHECK(golay::rank(c) == 8);
    CHECK(golay::min_distance(c) == 8);
}

TEST_CASE("array code C' repeats each companion row three times") {
    const Code844 comp =
        golay::apply_permutation(golay::default_parity(), golay::companion_permutations()[0]);
    const BitMatrix c = golay::build_array_Cprime(comp);
    REQUIRE(c.n_rows() == 4);
    REQUIRE(c.n_cols() == 24);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const bool b = comp.generator().row(i).get(j);
            CHECK(c.row(i).get(j) == b);
            CHECK(c.row(i).get(8 + j) == b);
            CHECK(c.row(i).get(16 + j) == b);
        }
    CHECK(golay::rank(c) == 4);
    CHECK(golay::min_distance(c) == 12);
}

TEST_CASE("direct sum stacks the two array generators") {
    const GolayCode code = default_code();
    CHECK(code.generator().n_rows() == 12);
    CHECK(code.generator().n_cols() == 24);
    CHECK(code.generator_rank() == 12);
    const BitMatrix expect = golay::vstack(
        golay::build_array_C(code.seed()), golay::build_array_Cprime(code.companion()));
    CHECK(code.generator() == expect);
    CHECK(code.codebook().size() == 4096);
    CHECK(std::is_sorted(code.codebook().begin(), code.codebook().end()));
    CHECK(code.codeword_values().size() == 4096);
    // codeword set closed under complement (all-one word is a codeword)
    CHECK(code.codeword_values().back() == 0xFFFFFF);
}

TEST_CASE("every default companion yields a perfect report") {
    for (int variant = 1; variant <= 8; ++variant) {
        const golay::ConstructionReport rep = golay::verify_golay(default_code(variant));
        INFO("variant " << variant);
        CHECK(rep.n == 24);
        CHECK(rep.k == 12);
        CHECK(rep.d == 8);
        CHECK(rep.weight_dist == golay::ConstructionReport::golay_weight_dist());
        CHECK(rep.self_dual);
        CHECK(rep.doubly_even);
        CHECK(rep.disjoint);
        CHECK(rep.lemma2_ok);
        CHECK(rep.ok());
    }
}

TEST_CASE("report text serialization") {
    const golay::ConstructionReport rep = golay::verify_golay(default_code());
    const std::string text = rep.to_text();
    CHECK(text.find("n: 24") != std::string::npos);
    CHECK(text.find("k: 12") != std::string::npos);
    CHECK(text.find("d: 8") != std::string::npos);
    CHECK(text.find("weight_dist: 0:1 8:759 12:2576 16:759 24:1") != std::string::npos);
    CHECK(text.find("lemma2_ok: true") != std::string::npos);
}

TEST_CASE("a companion equal to the seed still spans 12 dimensions but is not Golay") {
    const Code844 seed = golay::build_systematic(golay::default_parity());
    const GolayCode code = golay::direct_sum(seed, seed);  // rank stays 12
    const golay::ConstructionReport rep = golay::verify_golay(code);
    CHECK(rep.k == 12);
    CHECK(rep.disjoint);
    CHECK_FALSE(rep.lemma2_ok);
    CHECK(rep.d == 4);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("from_generator rejects rank-deficient stacks") {
    const Code844 seed = golay::build_systematic(golay::default_parity());
    const BitMatrix c = golay::build_array_C(seed);
    std::vector<BitVector> rows = c.rows();
    for (int i = 0; i < 4; ++i) rows.push_back(c.row(static_cast<std::size_t>(i)));
    const BitMatrix degenerate{rows};
    CHECK_THROWS_WITH(GolayCode::from_generator(degenerate, seed, seed),
                      Catch::Matchers::ContainsSubstring("not disjoint"));
    const GolayCode broken = GolayCode::unchecked(degenerate, seed, seed);
    CHECK(broken.generator_rank() == 8);
    CHECK(broken.codebook().size() == 256);
    const golay::ConstructionReport rep = golay::verify_golay(broken);
    CHECK_FALSE(rep.disjoint);
    CHECK_FALSE(rep.ok());
    CHECK_THROWS_AS(broken.message_of(BitVector(24)), std::logic_error);
}

TEST_CASE("encode and message_of are mutually inverse") {
    const GolayCode code = default_code(4);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const BitVector msg = BitVector::from_value(rng() & 0xFFF, 12);
        const BitVector cw = code.encode(msg);
        CHECK(cw.size() == 24);
        CHECK(code.message_of(cw) == msg);
        CHECK(code.encode_value(msg.value()) == cw.value());
    }
    CHECK_THROWS_AS(code.encode(BitVector(8)), std::invalid_argument);
    // a non-codeword is rejected: flip one bit of a codeword (d = 8)
    BitVector near = code.encode(BitVector::from_value(5, 12));
    near.set(0, !near.get(0));
    CHECK_THROWS_AS(code.message_of(near), std::invalid_argument);
    CHECK_THROWS_AS(code.message_of(BitVector(23)), std::invalid_argument);
}

TEST_CASE("codebook equals the span enumerated independently") {
    const GolayCode code = default_code();
    std::set<std::uint32_t> span;
    for (std::uint32_t m = 0; m < 4096; ++m) {
        std::uint32_t w = 0;
        for (int i = 0; i < 12; ++i)
            if ((m >> i) & 1)
                w ^= static_cast<std::uint32_t>(code.generator().row(static_cast<std::size_t>(i)).value());
        span.insert(w);
    }
    CHECK(span.size() == 4096);
    CHECK(std::vector<std::uint32_t>(span.begin(), span.end()) == code.codeword_values());
}

TEST_CASE("reference constructions") {
    CHECK(golay::row_space_equal(
        golay::build_systematic(golay::default_parity()).generator(),
        golay::turyn_seed_generator()));
    CHECK(golay::row_space_equal(
        golay::apply_permutation(golay::default_parity(), golay::companion_permutations()[3])
            .generator(),
        golay::turyn_companion_generator()));
    CHECK(golay::check_turyn_equivalence());

    const Code844 fseed = Code844::from_generator(golay::forney_seed_generator());
    REQUIRE(fseed.systematic());
    CHECK(fseed.parity()->to_string() == "0111,1101,1110,1011");
    CHECK(golay::check_forney_equivalence());
}

TEST_CASE("the |a+x|b+x|a+b+x| form spans the same code as the direct sum") {
    // a, b from the seed, x from the companion: |a+x|b+x|a+b+x| enumerated
    // directly must give exactly the 4096 codewords of the stacked generator.
    const GolayCode code = default_code(4);
    std::set<std::uint32_t> words;
    for (const auto& a : code.seed().codebook())
        for (const auto& b : code.seed().codebook())
            for (const auto& x : code.companion().codebook()) {
                const BitVector w =
                    golay::concat(golay::concat(a ^ x, b ^ x), a ^ b ^ x);
                words.insert(static_cast<std::uint32_t>(w.value()));
            }
    CHECK(words.size() == 4096);
    CHECK(std::vector<std::uint32_t>(words.begin(), words.end()) == code.codeword_values());
}
