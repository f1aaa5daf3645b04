// Brute-force references. Deliberately naive: trial division and gcd, no
// sieving, no shared code with the library.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 a) {
    if (a < 2) return false;
    for (u64 d = 2; d * d <= a; ++d)
        if (a % d == 0) return false;
    return true;
}

inline std::vector<u64> primes_upto(u64 limit) {
    std::vector<u64> out;
    for (u64 a = 2; a <= limit; ++a)
        if (is_prime(a)) out.push_back(a);
    return out;
}

inline std::vector<u64> first_primes(std::size_t count) {
    std::vector<u64> out;
    for (u64 a = 2; out.size() < count; ++a)
        if (is_prime(a)) out.push_back(a);
    return out;
}

inline u64 prime_pi(u64 m) {
    u64 c = 0;
    for (u64 a = 2; a <= m; ++a) c += is_prime(a);
    return c;
}

// Pairs (p, p + 2) with p + 2 <= m.
inline u64 twin_pairs(u64 m) {
    u64 c = 0;
    for (u64 p = 2; p + 2 <= m; ++p) c += is_prime(p) && is_prime(p + 2);
    return c;
}

// Primes p <= m with p - 2 or p + 2 prime.
inline u64 twin_members(u64 m) {
    u64 c = 0;
    for (u64 p = 2; p <= m; ++p) c += is_prime(p) && ((p >= 2 && is_prime(p - 2)) || is_prime(p + 2));
    return c;
}

inline bool coprime_at(u64 y, std::size_t n) {
    for (u64 p : first_primes(n))
        if (std::gcd(y, p) != 1) return false;
    return true;
}

// S(x,n): y in [1, x] with gcd(y, p_1 ... p_n) = 1.
inline u64 phi(u64 x, std::size_t n) {
    const auto ps = first_primes(n);
    u64 c = 0;
    for (u64 y = 1; y <= x; ++y) {
        bool ok = true;
        for (u64 p : ps) ok = ok && std::gcd(y, p) == 1;
        c += ok;
    }
    return c;
}

// |R(x,n)|: t with 6t < x and both 6t - 1, 6t + 1 free of p_3..p_n.
inline u64 twin_residue(u64 x, std::size_t n) {
    const auto ps = first_primes(n);
    u64 c = 0;
    for (u64 t = 1; 6 * t < x; ++t) {
        bool ok = true;
        for (std::size_t s = 2; s < ps.size(); ++s) ok = ok && (6 * t - 1) % ps[s] != 0 && (6 * t + 1) % ps[s] != 0;
        c += ok;
    }
    return c;
}

inline u64 least_prime_factor(u64 y) {
    for (u64 d = 2; d * d <= y; ++d)
        if (y % d == 0) return d;
    return y;
}

// Integers in [2, limit) whose least prime factor is among p_1..p_n.
inline u64 union_size(std::size_t n, u64 limit) {
    const auto ps = first_primes(n);
    u64 c = 0;
    for (u64 y = 2; y < limit; ++y) c += least_prime_factor(y) <= ps.back();
    return c;
}

// t in [1, k) with 6t - 1 or 6t + 1 composite.
inline u64 witnesses(u64 k) {
    u64 c = 0;
    for (u64 t = 1; t < k; ++t) c += !is_prime(6 * t - 1) || !is_prime(6 * t + 1);
    return c;
}

// Pascal's triangle row by row.
inline std::vector<std::vector<u64>> pascal(std::size_t rows) {
    std::vector<std::vector<u64>> c(rows + 1);
    for (std::size_t i = 0; i <= rows; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

}  // namespace oracle
