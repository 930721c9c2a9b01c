#pragma once
// Census of the weight-4 codewords across the seed and its eight companions:
// the nine 14-value rows, the structural properties connecting them, and the
// block design the companion rows form.

#include <iomanip>
#include <numeric>
#include <sstream>

#include "golay/code844.hpp"

namespace golay {

// Decimal rendering of a length-8 word (symbol 0 is the least significant bit).
inline int to_decimal(const BitVector& v) {
    if (v.size() != 8) throw std::invalid_argument("to_decimal: length must be 8");
    return static_cast<int>(v.value());
}

// Nine labeled rows of 14 weight-4 values each: the seed (row 0) and its
// eight companions (rows 1..8), every row ascending.
struct Weight4Table {
    std::array<std::string, 9> labels;
    std::array<std::vector<int>, 9> rows;

    const std::vector<int>& seed_row() const { return rows[0]; }
    const std::vector<int>& companion_row(int r) const {
        if (r < 1 || r > 8) throw std::invalid_argument("companion_row: r must be 1..8");
        return rows[static_cast<std::size_t>(r)];
    }
};

namespace detail {

inline std::vector<int> decimals_of(const Code844& c) {
    std::vector<int> v;
    v.reserve(c.weight4().size());
    for (const auto& w : c.weight4()) v.push_back(to_decimal(w));
    return v;
}

inline Weight4Table assemble_table(const Code844& seed, const std::array<Code844, 8>& comps) {
    Weight4Table t;
    t.labels[0] = "C1";
    t.rows[0] = decimals_of(seed);
    for (int r = 1; r <= 8; ++r) {
        t.labels[static_cast<std::size_t>(r)] = "C'(" + std::to_string(r) + ")";
        t.rows[static_cast<std::size_t>(r)] = decimals_of(comps[static_cast<std::size_t>(r - 1)]);
    }
    return t;
}

}  // namespace detail

// Table for a seed with explicit half-row choices for companions 7 and 8.
inline Weight4Table weight4_table(const ParitySubmatrix& p, const G78Choices& ch) {
    const Code844 seed = build_systematic(p);
    const auto pair78 = build_g7_g8(p, ch);
    std::array<Code844, 8> comps = {
        apply_permutation(p, companion_permutations()[0]),
        apply_permutation(p, companion_permutations()[1]),
        apply_permutation(p, companion_permutations()[2]),
        apply_permutation(p, companion_permutations()[3]),
        apply_permutation(p, companion_permutations()[4]),
        apply_permutation(p, companion_permutations()[5]),
        pair78.first,
        pair78.second};
    return detail::assemble_table(seed, comps);
}

// Table with companions 7 and 8 taken from the exhaustive sweep instead of a
// particular choice tuple; the two subspaces are the same either way.
inline Weight4Table weight4_table(const ParitySubmatrix& p) {
    const Code844 seed = build_systematic(p);
    const auto ns = enumerate_nonsystematic_companions(p);
    if (ns.size() != 2)
        throw std::logic_error("weight4_table: expected exactly two non-systematic companions");
    std::array<Code844, 8> comps = {
        apply_permutation(p, companion_permutations()[0]),
        apply_permutation(p, companion_permutations()[1]),
        apply_permutation(p, companion_permutations()[2]),
        apply_permutation(p, companion_permutations()[3]),
        apply_permutation(p, companion_permutations()[4]),
        apply_permutation(p, companion_permutations()[5]),
        ns[0],
        ns[1]};
    return detail::assemble_table(seed, comps);
}

// The structural facts the table rows must satisfy:
//   - every row has 14 distinct values (16 codewords minus 0 and 255),
//   - the seed row is disjoint from every companion row,
//   - any two companion rows meet in exactly two values,
//   - every such 2-value intersection is a complementary pair (sum 255),
//   - the eight companion rows cover 56 values, all nine rows cover 70.
struct PropertyReport {
    bool row_sizes_ok = false;
    bool seed_disjoint = false;
    bool pairwise_two = false;
    bool complementary_pairs = false;
    int union_companions = 0;
    int union_all = 0;

    bool ok() const {
        return row_sizes_ok && seed_disjoint && pairwise_two && complementary_pairs &&
               union_companions == 56 && union_all == 70;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "row_sizes_ok: " << (row_sizes_ok ? "true" : "false") << '\n'
           << "seed_disjoint: " << (seed_disjoint ? "true" : "false") << '\n'
           << "pairwise_two: " << (pairwise_two ? "true" : "false") << '\n'
           << "complementary_pairs: " << (complementary_pairs ? "true" : "false") << '\n'
           << "union_companions: " << union_companions << '\n'
           << "union_all: " << union_all << '\n';
        return os.str();
    }
};

inline PropertyReport verify_properties(const Weight4Table& t) {
    PropertyReport rep;
    rep.row_sizes_ok = true;
    for (const auto& row : t.rows) {
        if (row.size() != 14) rep.row_sizes_ok = false;
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] >= row[i]) rep.row_sizes_ok = false;
    }
    rep.seed_disjoint = true;
    for (int r = 1; r <= 8; ++r) {
        std::vector<int> common;
        std::set_intersection(t.rows[0].begin(), t.rows[0].end(),
                              t.rows[static_cast<std::size_t>(r)].begin(),
                              t.rows[static_cast<std::size_t>(r)].end(),
                              std::back_inserter(common));
        if (!common.empty()) rep.seed_disjoint = false;
    }
    rep.pairwise_two = true;
    rep.complementary_pairs = true;
    for (int a = 1; a <= 8; ++a) {
        for (int b = a + 1; b <= 8; ++b) {
            std::vector<int> common;
            std::set_intersection(t.rows[static_cast<std::size_t>(a)].begin(),
                                  t.rows[static_cast<std::size_t>(a)].end(),
                                  t.rows[static_cast<std::size_t>(b)].begin(),
                                  t.rows[static_cast<std::size_t>(b)].end(),
                                  std::back_inserter(common));
            if (common.size() != 2) rep.pairwise_two = false;
            else if (common[0] + common[1] != 255) rep.complementary_pairs = false;
        }
    }
    std::set<int> u;
    for (int r = 1; r <= 8; ++r) u.insert(t.rows[static_cast<std::size_t>(r)].begin(),
                                          t.rows[static_cast<std::size_t>(r)].end());
    rep.union_companions = static_cast<int>(u.size());
    u.insert(t.rows[0].begin(), t.rows[0].end());
    rep.union_all = static_cast<int>(u.size());
    return rep;
}

// 8x56 point/block incidence matrix: points are the eight companion codes,
// blocks the 56 values they cover (ascending left to right); entry (r, c) is
// 1 iff block value c occurs in companion row r.  The table rows always give
// a balanced design with v=8 points, b=56 blocks, r=14 blocks per point,
// k=2 points per block and lambda=2 blocks through every point pair.
struct IncidenceMatrix {
    BitMatrix entries;
    std::vector<int> block_values;  // column labels
    int v = 0, b = 0, r = 0, k = 0, lambda = 0;
    bool uniform = false;  // all row sums, column sums and pair counts agree

    bool ok() const { return uniform && v == 8 && b == 56 && r == 14 && k == 2 && lambda == 2; }
};

inline IncidenceMatrix incidence_matrix(const Weight4Table& t) {
    if (!verify_properties(t).ok())
        throw std::invalid_argument("incidence_matrix: table fails the structural properties");
    std::set<int> vals;
    for (int r = 1; r <= 8; ++r) vals.insert(t.rows[static_cast<std::size_t>(r)].begin(),
                                             t.rows[static_cast<std::size_t>(r)].end());
    IncidenceMatrix im;
    im.block_values.assign(vals.begin(), vals.end());
    std::vector<BitVector> rows;
    for (int r = 1; r <= 8; ++r) {
        BitVector row(im.block_values.size());
        for (std::size_t c = 0; c < im.block_values.size(); ++c) {
            const auto& vr = t.rows[static_cast<std::size_t>(r)];
            if (std::binary_search(vr.begin(), vr.end(), im.block_values[c])) row.set(c, true);
        }
        rows.push_back(std::move(row));
    }
    im.entries = BitMatrix(std::move(rows));
    im.v = static_cast<int>(im.entries.n_rows());
    im.b = static_cast<int>(im.entries.n_cols());
    im.uniform = true;
    im.r = im.entries.row(0).weight();
    for (const auto& row : im.entries.rows())
        if (row.weight() != im.r) im.uniform = false;
    im.k = 0;
    for (std::size_t c = 0; c < im.entries.n_cols(); ++c) {
        int colw = 0;
        for (const auto& row : im.entries.rows()) colw += row.get(c);
        if (c == 0) im.k = colw;
        else if (colw != im.k) im.uniform = false;
    }
    im.lambda = -1;
    for (std::size_t a = 0; a < im.entries.n_rows(); ++a)
        for (std::size_t bb = a + 1; bb < im.entries.n_rows(); ++bb) {
            int common = 0;
            for (std::size_t c = 0; c < im.entries.n_cols(); ++c)
                common += im.entries.row(a).get(c) && im.entries.row(bb).get(c);
            if (im.lambda < 0) im.lambda = common;
            else if (common != im.lambda) im.uniform = false;
        }
    return im;
}

inline std::string table_to_text(const Weight4Table& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << std::left << std::setw(6) << t.labels[r] << std::right;
        for (int v : t.rows[r]) os << std::setw(4) << v;
        os << '\n';
    }
    return os.str();
}

inline std::string table_to_csv(const Weight4Table& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << t.labels[r];
        for (int v : t.rows[r]) os << ',' << v;
        os << '\n';
    }
    return os.str();
}

inline std::string incidence_to_text(const IncidenceMatrix& im) {
    std::ostringstream os;
    os << "v: " << im.v << '\n' << "b: " << im.b << '\n' << "r: " << im.r << '\n'
       << "k: " << im.k << '\n' << "lambda: " << im.lambda << '\n'
       << "uniform: " << (im.uniform ? "true" : "false") << '\n';
    os << im.entries.to_string();
    return os.str();
}

}  // namespace golay
