#pragma once
// Assembly of the (24,12,8) Golay code as the direct sum of two length-24
// array codes: a (24,8,8) product of a single-parity-check code with the seed,
// and a (24,4,12) product of the repetition code with a companion.  The two
// component codes intersect trivially, so stacking their generators gives a
// rank-12 generator whose row space is the Golay code whenever the seed and
// companion share no weight-4 codeword.

#include <cstdint>
#include <map>
#include <sstream>

#include "golay/code844.hpp"
#include "golay/gf2.hpp"

namespace golay {

// (3,2,2) single parity check code.
inline const BitMatrix& spc_generator() {
    static const BitMatrix g = BitMatrix::from_rows({"101", "011"});
    return g;
}

// (3,1,3) repetition code.
inline const BitMatrix& repetition_generator() {
    static const BitMatrix g = BitMatrix::from_rows({"111"});
    return g;
}

// (24,8,8) array code: rows |g_i 0 g_i| and |0 g_i g_i| for the seed rows g_i.
inline BitMatrix build_array_C(const Code844& seed) {
    return kronecker(spc_generator(), seed.generator());
}

// (24,4,12) array code: rows |g'_i g'_i g'_i| for the companion rows g'_i.
inline BitMatrix build_array_Cprime(const Code844& companion) {
    return kronecker(repetition_generator(), companion.generator());
}

// The (24,12,8) code held as the stacked generator plus its component codes.
// Construction caches the full codebook (4096 words ascending by value) and
// the data needed to map codewords back to 12-bit messages.
class GolayCode {
public:
    static GolayCode direct_sum(const Code844& seed, const Code844& companion) {
        return from_generator(vstack(build_array_C(seed), build_array_Cprime(companion)),
                              seed, companion);
    }

    static GolayCode from_generator(const BitMatrix& g, const Code844& seed,
                                    const Code844& companion) {
        GolayCode c(g, seed, companion);
        if (c.rank_ != 12)
            throw std::invalid_argument("GolayCode: component codes are not disjoint");
        return c;
    }

    // Skips the rank gate; for exercising failure paths in tests.
    static GolayCode unchecked(const BitMatrix& g, const Code844& seed,
                               const Code844& companion) {
        return GolayCode(g, seed, companion);
    }

    const BitMatrix& generator() const { return gen_; }
    const Code844& seed() const { return seed_; }
    const Code844& companion() const { return comp_; }
    std::size_t generator_rank() const { return rank_; }

    // All codewords, ascending by value.
    const std::vector<BitVector>& codebook() const { return book_; }
    const std::vector<std::uint32_t>& codeword_values() const { return values_; }

    BitVector encode(const BitVector& message) const {
        if (message.size() != gen_.n_rows())
            throw std::invalid_argument("encode: message length must match generator rows");
        return BitVector::from_value(encode_value(message.value()), 24);
    }

    std::uint32_t encode_value(std::uint64_t message) const {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < row_values_.size(); ++i)
            if ((message >> i) & 1) w ^= row_values_[i];
        return w;
    }

    // Inverts encode for words of the code; throws on anything else.
    BitVector message_of(const BitVector& codeword) const {
        if (codeword.size() != 24)
            throw std::invalid_argument("message_of: codeword length must be 24");
        if (rank_ != gen_.n_rows())
            throw std::logic_error("message_of: generator is rank deficient");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
            if (codeword.get(pivot_cols_[i])) m ^= solve_rows_[i];
        if (encode_value(m) != static_cast<std::uint32_t>(codeword.value()))
            throw std::invalid_argument("message_of: word is not in the code");
        return BitVector::from_value(m, gen_.n_rows());
    }

private:
    GolayCode(const BitMatrix& g, Code844 seed, Code844 companion)
        : gen_(g), seed_(std::move(seed)), comp_(std::move(companion)) {
        if (g.n_cols() != 24 || g.n_rows() != 12)
            throw std::invalid_argument("GolayCode: generator must be 12x24");
        rank_ = rank(gen_);
        book_ = enumerate_codebook(gen_);
        values_.reserve(book_.size());
        for (const auto& c : book_) values_.push_back(static_cast<std::uint32_t>(c.value()));
        for (const auto& r : gen_.rows()) row_values_.push_back(static_cast<std::uint32_t>(r.value()));
        if (rank_ == gen_.n_rows()) build_solver();
    }

    // Row-reduce a copy of the generator while tracking the operations, so
    // that reading the pivot positions of a codeword yields its message.
    void build_solver() {
        std::vector<BitVector> r = gen_.rows();
        std::vector<std::uint64_t> t(r.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::uint64_t{1} << i;
        std::size_t row = 0;
        for (std::size_t col = 0; col < gen_.n_cols() && row < r.size(); ++col) {
            std::size_t piv = row;
            while (piv < r.size() && !r[piv].get(col)) ++piv;
            if (piv == r.size()) continue;
            std::swap(r[row], r[piv]);
            std::swap(t[row], t[piv]);
            for (std::size_t i = 0; i < r.size(); ++i)
                if (i != row && r[i].get(col)) {
                    r[i] ^= r[row];
                    t[i] ^= t[row];
                }
            pivot_cols_.push_back(col);
            ++row;
        }
        solve_rows_ = std::move(t);
    }

    BitMatrix gen_;
    Code844 seed_;
    Code844 comp_;
    std::size_t rank_ = 0;
    std::vector<BitVector> book_;
    std::vector<std::uint32_t> values_;
    std::vector<std::uint32_t> row_values_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::uint64_t> solve_rows_;
};

inline GolayCode direct_sum(const Code844& seed, const Code844& companion) {
    return GolayCode::direct_sum(seed, companion);
}

// Everything verify checks about a constructed code, in one record.
struct ConstructionReport {
    int n = 0;
    int k = 0;
    int d = 0;
    std::map<int, long long> weight_dist;
    bool self_dual = false;
    bool doubly_even = false;
    bool disjoint = false;
    bool lemma2_ok = false;

    static const std::map<int, long long>& golay_weight_dist() {
        static const std::map<int, long long> w = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
        return w;
    }

    bool ok() const {
        return n == 24 && k == 12 && d == 8 && weight_dist == golay_weight_dist() &&
               self_dual && doubly_even && disjoint && lemma2_ok;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "n: " << n << '\n' << "k: " << k << '\n' << "d: " << d << '\n';
        os << "weight_dist:";
        for (const auto& [w, c] : weight_dist) os << ' ' << w << ':' << c;
        os << '\n';
        os << "self_dual: " << (self_dual ? "true" : "false") << '\n';
        os << "doubly_even: " << (doubly_even ? "true" : "false") << '\n';
        os << "disjoint: " << (disjoint ? "true" : "false") << '\n';
        os << "lemma2_ok: " << (lemma2_ok ? "true" : "false") << '\n';
        return os.str();
    }
};

inline ConstructionReport verify_golay(const GolayCode& code) {
    ConstructionReport rep;
    rep.n = static_cast<int>(code.generator().n_cols());
    rep.k = static_cast<int>(code.generator_rank());
    for (const auto& c : code.codebook()) ++rep.weight_dist[c.weight()];
    rep.d = 0;
    for (const auto& c : code.codebook())
        if (c.any() && (rep.d == 0 || c.weight() < rep.d)) rep.d = c.weight();
    rep.disjoint = rep.k == 12;
    rep.lemma2_ok = check_weight4_distinct(code.seed(), code.companion());
    rep.doubly_even = true;
    for (const auto& [w, cnt] : rep.weight_dist)
        if (w % 4 != 0) rep.doubly_even = false;
    rep.self_dual = rep.k * 2 == rep.n;
    const auto& rows = code.generator().rows();
    for (std::size_t i = 0; i < rows.size() && rep.self_dual; ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (rows[i].dot(rows[j])) {
                rep.self_dual = false;
                break;
            }
    return rep;
}

// Reference generators for the two classic constructions the direct sum
// reproduces.  The Turyn-style pair is kept exactly as customarily printed;
// the Reed-Muller-style pair is the systematic seed with parity rows
// (0111,1101,1110,1011) next to the companion spanned by alternating rows.
inline const BitMatrix& turyn_seed_generator() {
    static const BitMatrix g = BitMatrix::from_rows(
        {"00011011", "00110101", "01101001", "11010001"});
    return g;
}

inline const BitMatrix& turyn_companion_generator() {
    static const BitMatrix g = BitMatrix::from_rows(
        {"10110001", "01011001", "00101101", "00010111"});
    return g;
}

inline const BitMatrix& forney_seed_generator() {
    static const BitMatrix g = BitMatrix::from_rows(
        {"10000111", "01001101", "00101110", "00011011"});
    return g;
}

inline const BitMatrix& forney_companion_generator() {
    static const BitMatrix g = BitMatrix::from_rows(
        {"10101010", "11001100", "11110000", "11111111"});
    return g;
}

// The default seed and its fourth systematic companion span the same pair of
// row spaces as the Turyn-style generators, so the two constructions give the
// identical code, codeword for codeword.
inline bool check_turyn_equivalence() {
    const Code844 seed = build_systematic(default_parity());
    const Code844 comp4 = apply_permutation(default_parity(), companion_permutations()[3]);
    if (!row_space_equal(seed.generator(), turyn_seed_generator())) return false;
    if (!row_space_equal(comp4.generator(), turyn_companion_generator())) return false;
    const GolayCode a = direct_sum(seed, comp4);
    const GolayCode b = GolayCode::from_generator(
        vstack(kronecker(spc_generator(), turyn_seed_generator()),
               kronecker(repetition_generator(), turyn_companion_generator())),
        Code844::from_generator(turyn_seed_generator()),
        Code844::from_generator(turyn_companion_generator()));
    return a.codeword_values() == b.codeword_values() && verify_golay(a).ok();
}

// The Reed-Muller-style companion is one of the two non-systematic companions
// of its seed, and the direct sum is again a (24,12,8) code.
inline bool check_forney_equivalence() {
    const Code844 seed = Code844::from_generator(forney_seed_generator());
    if (!seed.systematic()) return false;
    const Code844 comp = Code844::from_generator(forney_companion_generator());
    bool found = false;
    for (const Code844& c : enumerate_nonsystematic_companions(*seed.parity()))
        if (row_space_equal(c.generator(), comp.generator())) found = true;
    if (!found) return false;
    return verify_golay(direct_sum(seed, comp)).ok();
}

}  // namespace golay
