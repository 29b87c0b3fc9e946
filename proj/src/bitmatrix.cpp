#include "schemefusion/bitmatrix.hpp"

#include <bit>

namespace schemefusion {

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

long long BitMatrix::row_count(int r) const {
    const uint64_t* w = row(r);
    long long total = 0;
    for (int k = 0; k < words_per_row_; ++k) total += std::popcount(w[k]);
    return total;
}

long long BitMatrix::count() const {
    long long total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(n_);
    for (int r = 0; r < n_; ++r) {
        const uint64_t* w = row(r);
        for (int k = 0; k < words_per_row_; ++k) {
            uint64_t word = w[k];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                t.set(k * 64 + bit, r);
            }
        }
    }
    return t;
}

bool BitMatrix::is_symmetric() const {
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

BitMatrix BitMatrix::operator|(const BitMatrix& o) const {
    BitMatrix out = *this;
    out |= o;
    return out;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

long long BitMatrix::row_dot(int r, const BitMatrix& other, int s) const {
    const uint64_t* a = row(r);
    const uint64_t* b = other.row(s);
    long long total = 0;
    for (int k = 0; k < words_per_row_; ++k) total += std::popcount(a[k] & b[k]);
    return total;
}

}  // namespace schemefusion
