#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace gallai {

// Row-major matrix of n-bit rows, used for per-colour adjacency masks.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t bits)
        : bits_(bits), words_(word_count(bits)), data_(rows * words_, 0) {}

    static size_t word_count(size_t bits) { return (bits + 63) / 64; }

    void set(size_t row, size_t bit) { data_[row * words_ + bit / 64] |= 1ULL << (bit % 64); }
    bool test(size_t row, size_t bit) const {
        return (data_[row * words_ + bit / 64] >> (bit % 64)) & 1ULL;
    }

    const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
    size_t words() const { return words_; }
    size_t bits() const { return bits_; }

private:
    size_t bits_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> data_;
};

inline int popcount64(uint64_t x) { return std::popcount(x); }

// Calls fn(bit_index) for every set bit of word `w` offset by `base`.
template <typename Fn>
inline void for_each_bit(uint64_t w, size_t base, Fn&& fn) {
    while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        fn(base + b);
        w &= w - 1;
    }
}

} // namespace gallai
