#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hqc {

// Packed GF(2) vector. Bit i lives in word i/64 at position i%64.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    // Parity of the bitwise AND: the standard GF(2) dot product.
    friend bool dot(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
        return std::popcount(acc) & 1;
    }

    friend int and_popcount(const BitVec& a, const BitVec& b) {
        int c = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] & b.w_[k]);
        return c;
    }

    friend int or_popcount(const BitVec& a, const BitVec& b) {
        int c = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] | b.w_[k]);
        return c;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return (k << 6) + std::countr_zero(w_[k]);
        return npos;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    bool operator==(const BitVec&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace hqc
