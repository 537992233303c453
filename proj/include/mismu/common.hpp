#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mismu {

// Counters are 128-bit: set counts such as i(G) reach 2^n at n = 64.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline u128 checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        u128 next = r * base;
        if (base != 0 && next / base != r)
            throw std::overflow_error("checked_pow: 128-bit overflow");
        r = next;
    }
    return r;
}

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

// Index of the lowest set bit; undefined for x == 0.
inline int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Mask with bits 0..n-1 set, valid for 0 <= n <= 64.
inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Iterate set bits low to high.
template <typename F>
inline void for_each_bit(std::uint64_t mask, F&& f) {
    while (mask) {
        int v = lowest_bit(mask);
        mask &= mask - 1;
        f(v);
    }
}

}  // namespace mismu
