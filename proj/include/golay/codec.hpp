#pragma once
// Hard-decision decoding.  decode_ml scans the cached codebook; the trellis
// decoder runs Viterbi over a minimal three-section trellis built from the
// partial syndromes of the code, and the two agree codeword for codeword.
// simulate_bsc drives the trellis decoder over a binary symmetric channel.

#include <cstdint>
#include <limits>
#include <random>

#include "golay/construction.hpp"

namespace golay {

struct DecodeResult {
    BitVector codeword;   // closest codeword (smallest value on a tie)
    BitVector message;    // the 12-bit message encoding to it
    int distance = 0;     // Hamming distance from the received word
    bool tie = false;     // more than one codeword at that distance
};

inline BitVector encode(const BitVector& message, const GolayCode& code) {
    return code.encode(message);
}

namespace detail {

struct RawDecode {
    std::uint32_t codeword = 0;
    int distance = 0;
    bool tie = false;
};

// Exhaustive minimum-distance scan.  The codebook is ascending, so the first
// codeword at the minimum distance is the smallest-value winner.
inline RawDecode decode_ml_raw(const GolayCode& code, std::uint32_t received) {
    RawDecode best;
    best.distance = 25;
    for (std::uint32_t cv : code.codeword_values()) {
        const int d = std::popcount(cv ^ received);
        if (d < best.distance) {
            best.distance = d;
            best.codeword = cv;
            best.tie = false;
        } else if (d == best.distance) {
            best.tie = true;
        }
    }
    return best;
}

inline DecodeResult finish_decode(const GolayCode& code, const RawDecode& raw) {
    DecodeResult r;
    r.codeword = BitVector::from_value(raw.codeword, 24);
    r.message = code.message_of(r.codeword);
    r.distance = raw.distance;
    r.tie = raw.tie;
    return r;
}

}  // namespace detail

inline DecodeResult decode_ml(const BitVector& received, const GolayCode& code) {
    if (received.size() != 24)
        throw std::invalid_argument("decode_ml: received word must have length 24");
    return detail::finish_decode(
        code, detail::decode_ml_raw(code, static_cast<std::uint32_t>(received.value())));
}

// Minimal trellis for the code sectionalized at bit positions 0, 8, 16, 24.
// States at an inner boundary are the distinct partial syndromes (with
// respect to a parity-check matrix) of codeword prefixes; each section edge
// carries an 8-bit label, and label paths are in bijection with codewords.
class Trellis {
public:
    struct Edge {
        std::uint16_t src;
        std::uint16_t dst;
        std::uint8_t label;
    };

    explicit Trellis(const GolayCode& code) : code_(code) {
        if (code.generator_rank() != code.generator().n_rows())
            throw std::invalid_argument("Trellis: generator is rank deficient");
        const BitMatrix h = nullspace(code.generator());
        // Partial syndrome of a prefix = XOR of the H columns at its 1 bits.
        std::array<std::uint16_t, 24> col = {};
        for (std::size_t c = 0; c < 24; ++c) {
            std::uint16_t s = 0;
            for (std::size_t r = 0; r < h.n_rows(); ++r)
                if (h.row(r).get(c)) s |= static_cast<std::uint16_t>(1u << r);
            col[c] = s;
        }
        auto syndrome_of = [&col](std::uint32_t bits, int lo) {
            std::uint16_t s = 0;
            for (int i = 0; i < 8; ++i)
                if ((bits >> (lo + i)) & 1) s ^= col[static_cast<std::size_t>(lo + i)];
            return s;
        };
        std::map<std::uint16_t, std::uint16_t> id1, id2;
        std::set<std::array<std::uint32_t, 3>> e1, e2, e3;
        for (std::uint32_t cv : code.codeword_values()) {
            const std::uint16_t s1 = syndrome_of(cv, 0);
            const std::uint16_t s2 = static_cast<std::uint16_t>(s1 ^ syndrome_of(cv, 8));
            id1.emplace(s1, 0);
            id2.emplace(s2, 0);
        }
        std::uint16_t next = 0;
        for (auto& [s, id] : id1) id = next++;
        next = 0;
        for (auto& [s, id] : id2) id = next++;
        for (std::uint32_t cv : code.codeword_values()) {
            const std::uint16_t s1 = syndrome_of(cv, 0);
            const std::uint16_t s2 = static_cast<std::uint16_t>(s1 ^ syndrome_of(cv, 8));
            e1.insert({0, id1[s1], cv & 0xFF});
            e2.insert({id1[s1], id2[s2], (cv >> 8) & 0xFF});
            e3.insert({id2[s2], 0, (cv >> 16) & 0xFF});
        }
        profile_ = {1, id1.size(), id2.size(), 1};
        auto fill = [](const std::set<std::array<std::uint32_t, 3>>& in, std::vector<Edge>& out) {
            out.reserve(in.size());
            for (const auto& e : in)
                out.push_back({static_cast<std::uint16_t>(e[0]), static_cast<std::uint16_t>(e[1]),
                               static_cast<std::uint8_t>(e[2])});
        };
        fill(e1, sections_[0]);
        fill(e2, sections_[1]);
        fill(e3, sections_[2]);
        // Count label paths; the trellis is exact iff this equals the
        // codebook size.
        std::vector<std::uint64_t> w1(profile_[1], 0), w2(profile_[2], 0);
        for (const Edge& e : sections_[0]) w1[e.dst] += 1;
        for (const Edge& e : sections_[1]) w2[e.dst] += w1[e.src];
        path_count_ = 0;
        for (const Edge& e : sections_[2]) path_count_ += w2[e.src];
    }

    const GolayCode& code() const { return code_; }
    const std::vector<Edge>& section(int s) const {
        return sections_.at(static_cast<std::size_t>(s));
    }
    const std::array<std::size_t, 4>& boundary_profile() const { return profile_; }
    std::uint64_t path_count() const { return path_count_; }

private:
    GolayCode code_;
    std::array<std::vector<Edge>, 3> sections_;
    std::array<std::size_t, 4> profile_ = {};
    std::uint64_t path_count_ = 0;
};

inline Trellis build_trellis(const GolayCode& code) { return Trellis(code); }

namespace detail {

// Viterbi over the three sections.  Survivors carry (distance, partial value,
// count of minimum-distance paths); on equal distance the smaller partial
// value survives, which is consistent with the global smallest-value rule
// because earlier sections contribute the low-order value bits and paths
// meeting at a state share all continuations.
inline RawDecode viterbi_raw(const Trellis& t, std::uint32_t received) {
    struct Node {
        int dist;
        std::uint32_t value;
        std::uint32_t count;
    };
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<Node> cur = {{0, 0, 1}};
    for (int s = 0; s < 3; ++s) {
        const auto rb = static_cast<std::uint8_t>((received >> (8 * s)) & 0xFF);
        std::vector<Node> nxt(t.boundary_profile()[static_cast<std::size_t>(s + 1)],
                              {kInf, 0, 0});
        for (const Trellis::Edge& e : t.section(s)) {
            const Node& from = cur[e.src];
            if (from.dist >= kInf) continue;
            const int d = from.dist + std::popcount(static_cast<unsigned>(e.label ^ rb));
            const std::uint32_t v = from.value | (static_cast<std::uint32_t>(e.label) << (8 * s));
            Node& to = nxt[e.dst];
            if (d < to.dist) {
                to = {d, v, from.count};
            } else if (d == to.dist) {
                to.count += from.count;
                if (v < to.value) to.value = v;
            }
        }
        cur = std::move(nxt);
    }
    RawDecode r;
    r.codeword = cur[0].value;
    r.distance = cur[0].dist;
    r.tie = cur[0].count > 1;
    return r;
}

}  // namespace detail

inline DecodeResult decode_trellis(const BitVector& received, const Trellis& t) {
    if (received.size() != 24)
        throw std::invalid_argument("decode_trellis: received word must have length 24");
    return detail::finish_decode(
        t.code(), detail::viterbi_raw(t, static_cast<std::uint32_t>(received.value())));
}

struct SimStats {
    double p = 0.0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long word_errors = 0;
    double wer = 0.0;
    double channel_ber = 0.0;

    std::string to_text() const {
        std::ostringstream os;
        os << "p: " << p << '\n' << "trials: " << trials << '\n' << "seed: " << seed << '\n'
           << "word_errors: " << word_errors << '\n' << "wer: " << wer << '\n'
           << "channel_ber: " << channel_ber << '\n';
        return os.str();
    }
};

// Monte Carlo over a binary symmetric channel: each trial encodes a uniformly
// random 12-bit message, flips each of the 24 bits independently with
// probability p, and decodes with the trellis decoder.  A word error is any
// decoded codeword differing from the transmitted one.  Identical seeds give
// identical results; each trial consumes exactly 25 draws from mt19937_64.
inline SimStats simulate_bsc(const GolayCode& code, double p, long long trials,
                             std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("simulate_bsc: p must lie in [0,1]");
    if (trials <= 0) throw std::invalid_argument("simulate_bsc: trials must be positive");
    const Trellis trellis(code);
    std::mt19937_64 rng(seed);
    // Flip when a raw 64-bit draw falls below p * 2^64; exact at both ends.
    const bool always = p >= 1.0;
    const std::uint64_t thresh =
        always ? 0 : static_cast<std::uint64_t>(static_cast<long double>(p) * 18446744073709551616.0L);
    SimStats st;
    st.p = p;
    st.trials = trials;
    st.seed = seed;
    long long flipped = 0;
    for (long long t = 0; t < trials; ++t) {
        const std::uint32_t msg = static_cast<std::uint32_t>(rng() & 0xFFF);
        const std::uint32_t sent = code.encode_value(msg);
        std::uint32_t noise = 0;
        for (int i = 0; i < 24; ++i) {
            const std::uint64_t u = rng();
            if (always || u < thresh) noise |= 1u << i;
        }
        flipped += std::popcount(noise);
        const auto dec = detail::viterbi_raw(trellis, sent ^ noise);
        if (dec.codeword != sent) ++st.word_errors;
    }
    st.wer = static_cast<double>(st.word_errors) / static_cast<double>(trials);
    st.channel_ber = static_cast<double>(flipped) / (24.0 * static_cast<double>(trials));
    return st;
}

}  // namespace golay
