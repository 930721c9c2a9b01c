#pragma once
// The (8,4,4) component codes.  A systematic seed is I4 next to a parity
// block whose rows permute the four weight-3 tuples; its companions are the
// six row-permuted systematic codes plus two non-systematic ones recovered
// from weight-2 half-row choices.

#include <array>
#include <optional>
#include <set>
#include <string>

#include "golay/gf2.hpp"

namespace golay {

// The four weight-3 tuples of length 4, in the row order used throughout.
inline const std::array<BitVector, 4>& weight3_tuples() {
    static const std::array<BitVector, 4> t = {
        BitVector::from_string("1110"), BitVector::from_string("1101"),
        BitVector::from_string("1011"), BitVector::from_string("0111")};
    return t;
}

// The six weight-2 tuples of length 4, ascending by value.
inline const std::array<BitVector, 6>& weight2_tuples() {
    static const std::array<BitVector, 6> t = {
        BitVector::from_string("1100"), BitVector::from_string("1010"),
        BitVector::from_string("0110"), BitVector::from_string("1001"),
        BitVector::from_string("0101"), BitVector::from_string("0011")};
    return t;
}

// 4x4 parity block: each row has weight 3 and the rows are pairwise distinct,
// i.e. they are a permutation of the four weight-3 tuples.
class ParitySubmatrix {
public:
    explicit ParitySubmatrix(std::array<BitVector, 4> rows) : rows_(std::move(rows)) {
        for (const auto& r : rows_) {
            if (r.size() != 4) throw std::invalid_argument("ParitySubmatrix: rows must have length 4");
            if (r.weight() != 3) throw std::invalid_argument("ParitySubmatrix: rows must have weight 3");
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (rows_[i] == rows_[j])
                    throw std::invalid_argument("ParitySubmatrix: duplicate rows");
    }

    // Comma-separated form, e.g. "1101,0111,1110,1011".
    static ParitySubmatrix from_string(std::string_view s) {
        std::array<BitVector, 4> rows = {BitVector(4), BitVector(4), BitVector(4), BitVector(4)};
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            const std::size_t comma = s.find(',', pos);
            const bool last = i == 3;
            if (!last && comma == std::string_view::npos)
                throw std::invalid_argument("ParitySubmatrix: expected four comma-separated rows");
            if (last && comma != std::string_view::npos)
                throw std::invalid_argument("ParitySubmatrix: too many rows");
            rows[i] = BitVector::from_string(s.substr(pos, last ? std::string_view::npos : comma - pos));
            pos = comma + 1;
        }
        return ParitySubmatrix(std::move(rows));
    }

    const BitVector& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

    BitMatrix matrix() const {
        return BitMatrix(std::vector<BitVector>(rows_.begin(), rows_.end()));
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (i) s += ',';
            s += rows_[i].to_string();
        }
        return s;
    }

    bool operator==(const ParitySubmatrix& o) const { return rows_ == o.rows_; }

private:
    std::array<BitVector, 4> rows_;
};

// A permutation of {1,2,3,4} written as the image list (l1 l2 l3 l4).
class PermutationIndex {
public:
    explicit PermutationIndex(std::array<int, 4> map) : map_(map) {
        std::array<bool, 4> seen = {};
        for (int v : map_) {
            if (v < 1 || v > 4) throw std::invalid_argument("PermutationIndex: entries must be 1..4");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("PermutationIndex: repeated entry");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    // Image of position i (both 1-based).
    int image(int i) const { return map_.at(static_cast<std::size_t>(i - 1)); }
    const std::array<int, 4>& mapping() const { return map_; }

    std::string to_string() const {
        std::string s = "{";
        for (int i = 0; i < 4; ++i) {
            if (i) s += ',';
            s += static_cast<char>('0' + map_[static_cast<std::size_t>(i)]);
        }
        return s + "}";
    }

    bool operator==(const PermutationIndex& o) const { return map_ == o.map_; }

private:
    std::array<int, 4> map_;
};

// An (8,4,4) code held by a 4x8 generator.  Validated construction demands
// rank 4, weight distribution {0:1, 4:14, 8:1} (so the all-one word is a
// codeword); the unchecked factory exists for negative-path tests only.
class Code844 {
public:
    static Code844 from_generator(const BitMatrix& g) {
        validate(g);
        return Code844(g);
    }

    // Skips validation; for exercising failure paths in tests.
    static Code844 unchecked(const BitMatrix& g) { return Code844(g); }

    const BitMatrix& generator() const { return gen_; }
    bool systematic() const { return systematic_; }

    // Present iff the generator is literally (I4 | P) with an admissible P.
    // (The two coincide for every validated code; they can differ only on an
    // unchecked generator with a broken right block.)
    const std::optional<ParitySubmatrix>& parity() const { return parity_; }

    // All 16 codewords, ascending by value.
    const std::vector<BitVector>& codebook() const { return book_; }

    // The 14 weight-4 codewords, ascending by value.
    const std::vector<BitVector>& weight4() const { return w4_; }

    bool operator==(const Code844& o) const { return gen_ == o.gen_; }

private:
    explicit Code844(const BitMatrix& g) : gen_(g) {
        if (g.n_rows() != 4 || g.n_cols() != 8)
            throw std::invalid_argument("Code844: generator must be 4x8");
        book_ = enumerate_codebook(gen_);
        for (const auto& c : book_)
            if (c.weight() == 4) w4_.push_back(c);
        systematic_ = true;
        for (int i = 0; i < 4 && systematic_; ++i)
            for (int j = 0; j < 4; ++j)
                if (gen_.row(static_cast<std::size_t>(i)).get(static_cast<std::size_t>(j)) != (i == j)) {
                    systematic_ = false;
                    break;
                }
        if (systematic_) {
            std::array<BitVector, 4> p = {BitVector(4), BitVector(4), BitVector(4), BitVector(4)};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    p[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j),
                                                       gen_.row(static_cast<std::size_t>(i)).get(static_cast<std::size_t>(j + 4)));
            try {
                parity_.emplace(std::move(p));
            } catch (const std::invalid_argument&) {
                // unchecked generator with an inadmissible right block
            }
        }
    }

    static void validate(const BitMatrix& g) {
        if (g.n_rows() != 4 || g.n_cols() != 8)
            throw std::invalid_argument("Code844: generator must be 4x8");
        if (rank(g) != 4) throw std::invalid_argument("Code844: generator rank below 4");
        const auto dist = weight_distribution(g);
        const std::map<int, long long> want = {{0, 1}, {4, 14}, {8, 1}};
        if (dist != want)
            throw std::invalid_argument("Code844: weight distribution is not {0:1,4:14,8:1}");
    }

    BitMatrix gen_;
    bool systematic_ = false;
    std::optional<ParitySubmatrix> parity_;
    std::vector<BitVector> book_;
    std::vector<BitVector> w4_;
};

inline Code844 build_systematic(const ParitySubmatrix& p) {
    std::vector<BitVector> rows;
    rows.reserve(4);
    for (int i = 0; i < 4; ++i) {
        BitVector left(4);
        left.set(static_cast<std::size_t>(i), true);
        rows.push_back(concat(left, p.row(i)));
    }
    return Code844::from_generator(BitMatrix(std::move(rows)));
}

// Row gather: row i of the result is row l_i of p (1-based).
inline ParitySubmatrix permute_rows(const ParitySubmatrix& p, const PermutationIndex& l) {
    std::array<BitVector, 4> rows = {p.row(l.image(1) - 1), p.row(l.image(2) - 1),
                                     p.row(l.image(3) - 1), p.row(l.image(4) - 1)};
    return ParitySubmatrix(std::move(rows));
}

// A companion permutation must move every row (no fixed point) and must not
// map any 2-element set of positions onto itself (no 2-cycle); exactly the
// six 4-cycles of S4 survive.
inline bool check_permutation_criteria(const PermutationIndex& l) {
    for (int i = 1; i <= 4; ++i)
        if (l.image(i) == i) return false;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (std::min(l.image(i), l.image(j)) == i && std::max(l.image(i), l.image(j)) == j)
                return false;
    return true;
}

// All valid permutations in lexicographic order of the image list.
inline std::vector<PermutationIndex> enumerate_valid_permutations() {
    std::array<int, 4> m = {1, 2, 3, 4};
    std::vector<PermutationIndex> out;
    do {
        PermutationIndex l(m);
        if (check_permutation_criteria(l)) out.push_back(l);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

// The same six permutations in companion order: the order that fixes which
// permuted code is called the r-th companion, r = 1..6.  Companion 4 is the
// one whose direct sum reproduces the classic |a+x|b+x|a+b+x| construction.
inline const std::array<PermutationIndex, 6>& companion_permutations() {
    static const std::array<PermutationIndex, 6> order = {
        PermutationIndex({3, 1, 4, 2}), PermutationIndex({4, 1, 2, 3}),
        PermutationIndex({2, 4, 1, 3}), PermutationIndex({4, 3, 1, 2}),
        PermutationIndex({2, 3, 4, 1}), PermutationIndex({3, 4, 2, 1})};
    return order;
}

// Builds the r-th systematic companion of the seed with parity p.
inline Code844 apply_permutation(const ParitySubmatrix& p, const PermutationIndex& l) {
    if (!check_permutation_criteria(l))
        throw std::invalid_argument("apply_permutation: permutation violates the companion criteria");
    return build_systematic(permute_rows(p, l));
}

// Weight-2 half-row choices for the two non-systematic companions.  x and y
// are the left halves of the two information rows shared by both codes; the
// r's are the right halves (first index: which companion, second: which row).
struct G78Choices {
    BitVector x, y, r71, r72, r81, r82;

    G78Choices(BitVector x_, BitVector y_, BitVector r71_, BitVector r72_,
               BitVector r81_, BitVector r82_)
        : x(std::move(x_)), y(std::move(y_)), r71(std::move(r71_)),
          r72(std::move(r72_)), r81(std::move(r81_)), r82(std::move(r82_)) {
        for (const BitVector* v : {&x, &y, &r71, &r72, &r81, &r82})
            if (v->size() != 4 || v->weight() != 2)
                throw std::invalid_argument("G78Choices: entries must be weight-2 tuples of length 4");
    }

    // Comma-separated "x,y,r71,r72,r81,r82".
    static G78Choices from_string(std::string_view s) {
        std::array<BitVector, 6> v = {BitVector(4), BitVector(4), BitVector(4),
                                      BitVector(4), BitVector(4), BitVector(4)};
        std::size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            const std::size_t comma = s.find(',', pos);
            const bool last = i == 5;
            if (!last && comma == std::string_view::npos)
                throw std::invalid_argument("G78Choices: expected six comma-separated tuples");
            if (last && comma != std::string_view::npos)
                throw std::invalid_argument("G78Choices: too many tuples");
            v[static_cast<std::size_t>(i)] =
                BitVector::from_string(s.substr(pos, last ? std::string_view::npos : comma - pos));
            pos = comma + 1;
        }
        return G78Choices(v[0], v[1], v[2], v[3], v[4], v[5]);
    }

    std::string to_string() const {
        std::string s;
        for (const BitVector* v : {&x, &y, &r71, &r72, &r81, &r82}) {
            if (!s.empty()) s += ',';
            s += v->to_string();
        }
        return s;
    }
};

namespace detail {

// "Unrelated" for weight-2 tuples: neither equal nor complementary.
inline bool unrelated(const BitVector& a, const BitVector& b) {
    return a != b && a != b.complement();
}

// Sum p_i + p_j of the parity rows selected by the two 1-bits of the left
// half; a right half must avoid this sum and its complement.
inline BitVector pair_sum(const ParitySubmatrix& p, const BitVector& left) {
    std::array<int, 2> idx = {-1, -1};
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (left.get(static_cast<std::size_t>(i))) idx[static_cast<std::size_t>(n++)] = i;
    return p.row(idx[0]) ^ p.row(idx[1]);
}

}  // namespace detail

// The admissibility rules for the half-row choices:
//   (i)   x and y unrelated,
//   (ii)  the right halves pairwise unrelated across the four row pairs
//         (r71,r81), (r72,r82), (r71,r72), (r81,r82),
//   (iii) r71 and r81 avoid p_i + p_j (and its complement) for the two
//         positions set in x; r72 and r82 likewise for y.
inline bool validate_g78_choices(const ParitySubmatrix& p, const G78Choices& ch) {
    using detail::unrelated;
    if (!unrelated(ch.x, ch.y)) return false;
    if (!unrelated(ch.r71, ch.r81)) return false;
    if (!unrelated(ch.r72, ch.r82)) return false;
    if (!unrelated(ch.r71, ch.r72)) return false;
    if (!unrelated(ch.r81, ch.r82)) return false;
    const BitVector sx = detail::pair_sum(p, ch.x);
    const BitVector sy = detail::pair_sum(p, ch.y);
    for (const BitVector* r : {&ch.r71, &ch.r81})
        if (!unrelated(*r, sx)) return false;
    for (const BitVector* r : {&ch.r72, &ch.r82})
        if (!unrelated(*r, sy)) return false;
    return true;
}

// Builds the two non-systematic companions for an admissible choice tuple.
// Both share the rows (00001111) and (11111111); they differ in the right
// halves of the two information rows.
inline std::pair<Code844, Code844> build_g7_g8(const ParitySubmatrix& p, const G78Choices& ch) {
    if (!validate_g78_choices(p, ch))
        throw std::invalid_argument("build_g7_g8: choices violate the admissibility rules");
    const BitVector half = BitVector::from_string("00001111");
    const BitVector full = BitVector::from_string("11111111");
    const BitMatrix g7(std::vector<BitVector>{concat(ch.x, ch.r71), concat(ch.y, ch.r72), half, full});
    const BitMatrix g8(std::vector<BitVector>{concat(ch.x, ch.r81), concat(ch.y, ch.r82), half, full});
    return {Code844::from_generator(g7), Code844::from_generator(g8)};
}

inline const std::vector<BitVector>& weight4_codewords(const Code844& c) {
    return c.weight4();
}

// True iff the two codes share no weight-4 codeword.
inline bool check_weight4_distinct(const Code844& a, const Code844& b) {
    std::vector<BitVector> common;
    std::set_intersection(a.weight4().begin(), a.weight4().end(),
                          b.weight4().begin(), b.weight4().end(),
                          std::back_inserter(common));
    return common.empty();
}

// Sweeps all 6^6 choice tuples and collects the distinct row spaces that
// admissible tuples generate.  Exactly two subspaces arise; they are returned
// as canonical (reduced-echelon) generators, ordered by the value list of
// their weight-4 codewords.
inline std::vector<Code844> enumerate_nonsystematic_companions(const ParitySubmatrix& p) {
    const auto& w2 = weight2_tuples();
    std::set<std::string> seen;
    std::vector<Code844> out;
    std::array<std::size_t, 6> c = {};
    for (;;) {
        const G78Choices ch(w2[c[0]], w2[c[1]], w2[c[2]], w2[c[3]], w2[c[4]], w2[c[5]]);
        if (validate_g78_choices(p, ch)) {
            const auto pair = build_g7_g8(p, ch);
            for (const Code844* code : {&pair.first, &pair.second}) {
                BitMatrix canon = rref(code->generator());
                std::string key = canon.to_string();
                if (seen.insert(std::move(key)).second)
                    out.push_back(Code844::from_generator(canon));
            }
        }
        int i = 5;
        while (i >= 0 && ++c[static_cast<std::size_t>(i)] == w2.size())
            c[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), [](const Code844& a, const Code844& b) {
        return std::lexicographical_compare(a.weight4().begin(), a.weight4().end(),
                                            b.weight4().begin(), b.weight4().end());
    });
    return out;
}

// Out-of-the-box defaults used by the command-line tool.
inline const ParitySubmatrix& default_parity() {
    static const ParitySubmatrix p = ParitySubmatrix::from_string("1101,0111,1110,1011");
    return p;
}

inline const G78Choices& default_g78_choices() {
    static const G78Choices ch = G78Choices::from_string("0101,0011,0110,0011,0101,1001");
    return ch;
}

}  // namespace golay
