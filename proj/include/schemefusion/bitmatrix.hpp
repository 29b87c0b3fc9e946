#pragma once

#include <cstdint>
#include <vector>

namespace schemefusion {

// Dense square 0/1 matrix, one bit per entry, rows packed into 64-bit words.
// All scheme-axiom checks reduce to word-wise AND / OR / popcount on rows.
class BitMatrix {
public:
    BitMatrix() : n_(0), words_per_row_(0) {}
    explicit BitMatrix(int n)
        : n_(n), words_per_row_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_per_row_, 0) {}

    static BitMatrix identity(int n);

    int size() const { return n_; }
    int words_per_row() const { return words_per_row_; }

    bool get(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c) {
        bits_[static_cast<size_t>(r) * words_per_row_ + (c >> 6)] |= (uint64_t{1} << (c & 63));
    }

    const uint64_t* row(int r) const { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }
    uint64_t* row(int r) { return bits_.data() + static_cast<size_t>(r) * words_per_row_; }

    // Number of ones in row r; for a scheme class this is its valency.
    long long row_count(int r) const;
    long long count() const;

    BitMatrix transposed() const;
    bool is_symmetric() const;

    // Entrywise OR; operands must be disjoint when used to merge classes,
    // which callers guarantee (classes partition the cells).
    BitMatrix operator|(const BitMatrix& o) const;
    BitMatrix& operator|=(const BitMatrix& o);

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    // popcount(row r of *this AND row s of other): with other = B^T this is
    // the (r, s) entry of the integer product (*this) * B.
    long long row_dot(int r, const BitMatrix& other, int s) const;

private:
    int n_;
    int words_per_row_;
    std::vector<uint64_t> bits_;
};

}  // namespace schemefusion
