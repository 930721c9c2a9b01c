#pragma once
// Exact GF(2) vector/matrix arithmetic on bit-packed rows: Kronecker products,
// rank/row-space utilities and codebook enumeration.  Everything here is a pure
// function over immutable values; all other headers build on this one.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace golay {

// Fixed-length vector over GF(2), packed into 64-bit words.
// Index 0 is the leftmost symbol of the printed form and the least
// significant bit of the numeric value, so "10111000" has value 29.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t length)
        : len_(length), w_((length + 63) / 64, 0) {
        if (length == 0) throw std::invalid_argument("BitVector: zero length");
    }

    // Accepts '0'/'1' with optional single spaces between symbols.
    static BitVector from_string(std::string_view s) {
        std::string clean;
        clean.reserve(s.size());
        for (char c : s) {
            if (c == ' ') continue;
            if (c != '0' && c != '1')
                throw std::invalid_argument("BitVector: bad character in bit string");
            clean.push_back(c);
        }
        if (clean.empty()) throw std::invalid_argument("BitVector: empty bit string");
        BitVector v(clean.size());
        for (std::size_t i = 0; i < clean.size(); ++i)
            if (clean[i] == '1') v.set(i, true);
        return v;
    }

    // Low `length` bits of `value`, bit i of the value becoming symbol i.
    static BitVector from_value(std::uint64_t value, std::size_t length) {
        if (length == 0 || length > 64)
            throw std::invalid_argument("BitVector: from_value needs 1..64 bits");
        BitVector v(length);
        v.w_[0] = length == 64 ? value : (value & ((std::uint64_t{1} << length) - 1));
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool b) {
        check_index(i);
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    int weight() const {
        int n = 0;
        for (std::uint64_t w : w_) n += std::popcount(w);
        return n;
    }

    BitVector operator^(const BitVector& o) const {
        BitVector r = *this;
        r ^= o;
        return r;
    }

    BitVector& operator^=(const BitVector& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    BitVector complement() const {
        BitVector r = *this;
        for (auto& w : r.w_) w = ~w;
        r.mask_tail();
        return r;
    }

    // Parity of the AND of two vectors (the GF(2) inner product).
    int dot(const BitVector& o) const {
        check_same_length(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    int hamming_distance(const BitVector& o) const {
        check_same_length(o);
        int n = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) n += std::popcount(w_[i] ^ o.w_[i]);
        return n;
    }

    bool any() const {
        for (std::uint64_t w : w_) if (w) return true;
        return false;
    }

    // Numeric value with symbol 0 as the least significant bit.
    std::uint64_t value() const {
        if (len_ > 64) throw std::logic_error("BitVector: value() needs length <= 64");
        return w_[0];
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    // Ascending numeric value; shorter vectors sort first.
    bool operator<(const BitVector& o) const {
        if (len_ != o.len_) return len_ < o.len_;
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector: index out of range");
    }
    void check_same_length(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch");
    }
    void mask_tail() {
        const std::size_t used = len_ & 63;
        if (used) w_.back() &= (std::uint64_t{1} << used) - 1;
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

inline BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector r(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) r.set(a.size() + i, b.get(i));
    return r;
}

// Rectangular matrix over GF(2): an ordered list of equal-length rows.
class BitMatrix {
public:
    BitMatrix() = default;

    explicit BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("BitMatrix: no rows");
        cols_ = rows_[0].size();
        for (const auto& r : rows_)
            if (r.size() != cols_)
                throw std::invalid_argument("BitMatrix: rows of unequal length");
    }

    static BitMatrix from_rows(std::initializer_list<std::string_view> rows) {
        std::vector<BitVector> v;
        v.reserve(rows.size());
        for (auto s : rows) v.push_back(BitVector::from_string(s));
        return BitMatrix(std::move(v));
    }

    // Text format: one row per line, '0'/'1' with optional single spaces,
    // lines whose first non-space character is '#' are comments, blank lines
    // are skipped, trailing newline optional.
    static BitMatrix from_string(std::string_view text) {
        std::vector<BitVector> rows;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            const std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            rows.push_back(BitVector::from_string(line));
        }
        return BitMatrix(std::move(rows));
    }

    static BitMatrix identity(std::size_t n) {
        std::vector<BitVector> rows;
        rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            BitVector r(n);
            r.set(i, true);
            rows.push_back(std::move(r));
        }
        return BitMatrix(std::move(rows));
    }

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return cols_; }
    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<BitVector>& rows() const { return rows_; }

    std::string to_string() const {
        std::string s;
        for (const auto& r : rows_) {
            s += r.to_string();
            s += '\n';
        }
        return s;
    }

    bool operator==(const BitMatrix& o) const { return rows_ == o.rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Stacks two matrices with the same column count.
inline BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.n_cols() != bottom.n_cols())
        throw std::invalid_argument("vstack: column count mismatch");
    std::vector<BitVector> rows = top.rows();
    rows.insert(rows.end(), bottom.rows().begin(), bottom.rows().end());
    return BitMatrix(std::move(rows));
}

// Kronecker product: block (i,j) of the result is a_{i,j} * B.
inline BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
    std::vector<BitVector> rows;
    rows.reserve(a.n_rows() * b.n_rows());
    for (std::size_t ia = 0; ia < a.n_rows(); ++ia) {
        for (std::size_t ib = 0; ib < b.n_rows(); ++ib) {
            BitVector r(a.n_cols() * b.n_cols());
            for (std::size_t ja = 0; ja < a.n_cols(); ++ja) {
                if (!a.row(ia).get(ja)) continue;
                for (std::size_t jb = 0; jb < b.n_cols(); ++jb)
                    if (b.row(ib).get(jb)) r.set(ja * b.n_cols() + jb, true);
            }
            rows.push_back(std::move(r));
        }
    }
    return BitMatrix(std::move(rows));
}

// Reduced row echelon form with zero rows dropped; canonical for the row space.
inline BitMatrix rref(const BitMatrix& m) {
    std::vector<BitVector> rows = m.rows();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.n_cols() && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].get(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r > 0 ? r : 1);
    if (r == 0) rows[0] = BitVector(m.n_cols());  // keep the zero row space representable
    return BitMatrix(std::move(rows));
}

inline std::size_t rank(const BitMatrix& m) {
    const BitMatrix e = rref(m);
    return e.n_rows() == 1 && !e.row(0).any() ? 0 : e.n_rows();
}

inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.n_cols() != b.n_cols())
        throw std::invalid_argument("row_space_equal: column count mismatch");
    return rref(a) == rref(b);
}

// All 2^n_rows linear combinations of the rows, ascending by value, duplicates
// collapsed.  Rejects n_rows > 20 so a bad call fails instead of stalling.
inline std::vector<BitVector> enumerate_codebook(const BitMatrix& g) {
    if (g.n_rows() > 20)
        throw std::invalid_argument("enumerate_codebook: more than 20 generator rows");
    const std::size_t n = std::size_t{1} << g.n_rows();
    std::vector<BitVector> book;
    book.reserve(n);
    BitVector cur(g.n_cols());
    book.push_back(cur);
    // Gray-code order: word m differs from m-1 in row countr_zero(m).
    for (std::size_t m = 1; m < n; ++m) {
        cur ^= g.row(static_cast<std::size_t>(std::countr_zero(m)));
        book.push_back(cur);
    }
    std::sort(book.begin(), book.end());
    book.erase(std::unique(book.begin(), book.end()), book.end());
    return book;
}

inline std::map<int, long long> weight_distribution(const BitMatrix& g) {
    std::map<int, long long> dist;
    for (const auto& c : enumerate_codebook(g)) ++dist[c.weight()];
    return dist;
}

// Minimum nonzero codeword weight; the codes here are linear, so this is the
// minimum distance.  Throws on the all-zero matrix.
inline int min_distance(const BitMatrix& g) {
    int best = -1;
    for (const auto& c : enumerate_codebook(g)) {
        if (!c.any()) continue;
        const int w = c.weight();
        if (best < 0 || w < best) best = w;
    }
    if (best < 0) throw std::invalid_argument("min_distance: all-zero generator");
    return best;
}

// Basis of the right kernel {v : M v^T = 0}, one row per free column of M.
inline BitMatrix nullspace(const BitMatrix& m) {
    const BitMatrix e = rref(m);
    const std::size_t n = m.n_cols();
    std::vector<std::size_t> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < e.n_rows(); ++i) {
        if (!e.row(i).any()) break;
        std::size_t col = 0;
        while (!e.row(i).get(col)) ++col;
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free, true);
        for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
            if (e.row(i).get(free)) v.set(pivot_of_row[i], true);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) {
        BitVector z(n);
        basis.push_back(std::move(z));  // trivial kernel
    }
    return BitMatrix(std::move(basis));
}

}  // namespace golay
