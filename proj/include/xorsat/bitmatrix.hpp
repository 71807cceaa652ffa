#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace xorsat {

namespace bits {

inline size_t words_for(size_t nbits) { return (nbits + 63) / 64; }

inline bool get(std::span<const uint64_t> w, size_t i) { return (w[i / 64] >> (i % 64)) & 1; }
inline void set(std::span<uint64_t> w, size_t i) { w[i / 64] |= uint64_t{1} << (i % 64); }
inline void clear(std::span<uint64_t> w, size_t i) { w[i / 64] &= ~(uint64_t{1} << (i % 64)); }
inline void flip(std::span<uint64_t> w, size_t i) { w[i / 64] ^= uint64_t{1} << (i % 64); }

inline void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    assert(dst.size() == src.size());
    for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline size_t popcount(std::span<const uint64_t> w) {
    size_t n = 0;
    for (uint64_t x : w) n += std::popcount(x);
    return n;
}

inline size_t popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    size_t n = 0;
    for (size_t i = 0; i < a.size(); ++i) n += std::popcount(a[i] & b[i]);
    return n;
}

inline size_t popcount_andnot(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    size_t n = 0;
    for (size_t i = 0; i < a.size(); ++i) n += std::popcount(a[i] & ~b[i]);
    return n;
}

template <typename F>
void for_each_set(std::span<const uint64_t> w, F&& f) {
    for (size_t i = 0; i < w.size(); ++i) {
        uint64_t x = w[i];
        while (x != 0) {
            f(i * 64 + static_cast<unsigned>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

// First set bit of (a & ~b), or SIZE_MAX.
inline size_t first_set_andnot(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t x = a[i] & ~b[i];
        if (x != 0) return i * 64 + static_cast<unsigned>(std::countr_zero(x));
    }
    return SIZE_MAX;
}

inline size_t first_set(std::span<const uint64_t> w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) return i * 64 + static_cast<unsigned>(std::countr_zero(w[i]));
    return SIZE_MAX;
}

}  // namespace bits

// Dense bit matrix with one flat allocation; every row is contiguous. One
// instance stores the tableau row-major, a second stores it column-major so
// both row operations and pivoting touch contiguous memory.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_(bits::words_for(cols)), w_(rows * stride_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    std::span<uint64_t> row(size_t r) {
        assert(r < rows_);
        return {w_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row(size_t r) const {
        assert(r < rows_);
        return {w_.data() + r * stride_, stride_};
    }

    bool get(size_t r, size_t c) const { return bits::get(row(r), c); }
    void set(size_t r, size_t c) { bits::set(row(r), c); }
    void clear_bit(size_t r, size_t c) { bits::clear(row(r), c); }
    void flip(size_t r, size_t c) { bits::flip(row(r), c); }

    void xor_row(size_t dst, size_t src) { bits::xor_into(row(dst), row(src)); }

private:
    size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace xorsat
