#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace spair::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 block = 128;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (u64 i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void collect_factors(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 p = 2; p < 1000; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            collect_factors(n / p, out);
            return;
        }
    }
    u64 d = pollard_brent(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

}  // namespace detail

/// Prime factorization as sorted (prime, exponent) pairs.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<u64> primes;
    detail::collect_factors(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 multiplicative_order(u64 a, u64 n) {
    if (n == 1) return 1;
    u64 x = a % n, k = 1;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++k;
    }
    return k;
}

/// Checked integer power; returns false on overflow past `limit`.
inline bool checked_pow(u64 base, unsigned exp, u64 limit, u64& out) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > limit) return false;
    }
    out = static_cast<u64>(r);
    return true;
}

/// If q = p^m for a prime p, returns {p, m}; otherwise {0, 0}.
inline std::pair<u64, unsigned> prime_power(u64 q) {
    if (q < 2) return {0, 0};
    auto f = factorize(q);
    if (f.size() != 1) return {0, 0};
    return {f[0].first, f[0].second};
}

inline u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<u64>(r);
}

}  // namespace spair::nt
