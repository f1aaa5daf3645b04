// sieve_segment.hpp
// A window of sieve candidates, one bit each. Candidate i stands for the
// value first + i * step, so the same type serves plain integer windows
// (step 1), odd-only windows (step 2) and windows over a pair index t.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "twinsieve/config.hpp"

namespace twinsieve {

class SieveSegment {
public:
    // All candidates start set ("not yet struck").
    SieveSegment(u64 first, u64 step, std::size_t size)
        : first_(first), step_(step), size_(size), words_((size + 63) / 64, ~u64{0}) {
        if (size_ % 64 != 0) words_.back() = (u64{1} << (size_ % 64)) - 1;
    }

    u64 first() const { return first_; }
    u64 step() const { return step_; }
    std::size_t size() const { return size_; }

    // Value represented by the last candidate.
    u64 last() const { return first_ + (size_ - 1) * step_; }
    u64 value_at(std::size_t i) const { return first_ + i * step_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void clear(std::size_t i) { words_[i >> 6] &= ~(u64{1} << (i & 63)); }

    // Strikes every candidate whose value is start, start + stride, ... .
    // `start` must be a represented value (or past the end) and `stride` a
    // multiple of step().
    void clear_progression(u64 start, u64 stride) {
        if (size_ == 0 || start < first_ || start > last()) return;
        const std::size_t istep = static_cast<std::size_t>(stride / step_);
        for (std::size_t i = static_cast<std::size_t>((start - first_) / step_); i < size_; i += istep)
            clear(i);
    }

    // Strikes every candidate whose value is congruent to residue mod modulus.
    // Only meaningful for step() == 1.
    void clear_residue_class(u64 residue, u64 modulus) {
        if (size_ == 0) return;
        const u64 offset = (residue + modulus - first_ % modulus) % modulus;
        for (std::size_t i = static_cast<std::size_t>(offset); i < size_; i += modulus) clear(i);
    }

    std::size_t count() const {
        std::size_t total = 0;
        for (u64 w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    // Calls fn(value) for each surviving candidate in ascending order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            u64 bits = words_[w];
            while (bits != 0) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                fn(value_at(i));
                bits &= bits - 1;
            }
        }
    }

private:
    u64 first_;
    u64 step_;
    std::size_t size_;
    std::vector<u64> words_;
};

}  // namespace twinsieve
