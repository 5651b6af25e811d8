#pragma once

/**
 * @file abelian_group.hpp
 * @brief Finite abelian groups as products of cyclic factors.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

struct AbelianGroup {
    std::vector<long> orders; // cyclic factor orders, each >= 2; empty = trivial

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup cyclic(long n) {
        if (n < 1) throw std::domain_error("cyclic group of nonpositive order");
        AbelianGroup g;
        if (n > 1) g.orders.push_back(n);
        return g;
    }

    bool is_trivial() const { return orders.empty(); }

    long long order() const {
        long long n = 1;
        for (long d : orders) n *= d;
        return n;
    }

    /// Invariant factors d_1 | d_2 | ... | d_k (ascending), the canonical form.
    std::vector<long> invariant_factors() const {
        // Collect prime powers per prime, then zip the largest together.
        std::map<long, std::vector<long>> pparts;
        std::size_t max_len = 0;
        for (long d : orders) {
            long n = d;
            for (long p = 2; p * p <= n; ++p)
                while (n % p == 0) {
                    long q = p;
                    n /= p;
                    while (n % p == 0) {
                        q *= p;
                        n /= p;
                    }
                    pparts[p].push_back(q);
                }
            if (n > 1) pparts[n].push_back(n);
        }
        for (auto& [p, v] : pparts) {
            std::sort(v.rbegin(), v.rend());
            max_len = std::max(max_len, v.size());
        }
        std::vector<long> inv(max_len, 1);
        for (auto& [p, v] : pparts)
            for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
        std::reverse(inv.begin(), inv.end());
        return inv;
    }

    bool isomorphic_to(const AbelianGroup& other) const {
        return invariant_factors() == other.invariant_factors();
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.isomorphic_to(b);
    }

    /// Display string, e.g. "0", "Z/5", "Z/4 x Z/2", "(Z/3)^2".
    std::string str() const {
        const auto inv = invariant_factors();
        if (inv.empty()) return "0";
        std::string out;
        std::size_t i = 0;
        while (i < inv.size()) {
            std::size_t j = i;
            while (j < inv.size() && inv[j] == inv[i]) ++j;
            if (!out.empty()) out += " x ";
            const std::string factor = "Z/" + std::to_string(inv[i]);
            out += (j - i > 1) ? "(" + factor + ")^" + std::to_string(j - i) : factor;
            i = j;
        }
        return out;
    }
};

namespace detail {

inline void partitions_of(int n, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_of(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Every abelian group of order n, in canonical form, deterministic order.
inline std::vector<AbelianGroup> all_abelian_groups(long long n) {
    if (n < 1) throw std::domain_error("group order must be positive");
    std::vector<std::pair<long, int>> primes;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            primes.emplace_back(static_cast<long>(p), e);
        }
    if (m > 1) primes.emplace_back(static_cast<long>(m), 1);

    std::vector<AbelianGroup> result{AbelianGroup::trivial()};
    for (const auto& [p, e] : primes) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        detail::partitions_of(e, e, cur, parts);
        std::vector<AbelianGroup> next;
        for (const auto& g : result)
            for (const auto& part : parts) {
                AbelianGroup h = g;
                for (int k : part) {
                    long q = 1;
                    for (int i = 0; i < k; ++i) q *= p;
                    h.orders.push_back(q);
                }
                next.push_back(std::move(h));
            }
        result = std::move(next);
    }
    return result;
}

} // namespace ellsurf
