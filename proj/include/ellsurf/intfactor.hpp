#pragma once

/**
 * @file intfactor.hpp
 * @brief Integer factorization helpers for rational root extraction.
 *
 * Rational roots of an integer polynomial are p/q with p | a_0 and q | a_n,
 * so splitting linear places out of a discriminant needs the divisors of two
 * (possibly large) integers.  Trial division catches the smooth parts that
 * dominate in practice; Miller-Rabin plus Pollard-Brent rho handle the rest.
 */

#include "ellsurf/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace ellsurf::detail {

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    static std::mt19937_64 gen(0x5eed1234u);
    return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

// Brent's cycle variant of Pollard rho.  Returns a nontrivial factor of a
// composite odd n > 1.
inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 gen(0xb5e571u + static_cast<unsigned long long>(n % 1000003));
    auto rnd = [&](const Int& m) { return Int(gen()) % m; };
    while (true) {
        Int y = rnd(n - 1) + 1, c = rnd(n - 1) + 1, m = 128;
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                const Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n <= 1) return;
    for (Int p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factorization of |n|; n must be nonzero.
inline std::map<Int, int> factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    std::map<Int, int> f;
    factor_into(abs(n), f);
    return f;
}

/// All positive divisors of the factored integer, capped to keep root
/// searches bounded.
inline std::vector<Int> divisors(const std::map<Int, int>& factors, std::size_t cap = 200000) {
    std::size_t count = 1;
    for (const auto& [p, e] : factors) {
        count *= static_cast<std::size_t>(e) + 1;
        if (count > cap) throw std::domain_error("divisor enumeration exceeds cap");
    }
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace ellsurf::detail
