#pragma once

/**
 * @file lattice.hpp
 * @brief Integer quadratic lattices: named constructors, trivial lattice of a
 *        fiber configuration, Shioda-Tate rank, extremality, and the explicit
 *        primitive embedding T(1,1,n) -> U^3.
 *
 * Sign conventions: fiber root lattices are negative definite and the
 * <O, F> block has Gram [[-chi, 1], [1, 0]], so disc(T) = -prod(n_i) for an
 * all-multiplicative configuration on a rational surface.
 *
 * Signatures come from exact rational congruence diagonalization, never from
 * eigenvalues; determinants from fraction-free elimination.
 */

#include "ellsurf/errors.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ellsurf {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, std::vector<Int>(cols, Int(0)));
}

/// Exact determinant by Bareiss fraction-free elimination.
inline Int determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Inertia of a symmetric integer matrix via congruence diagonalization over
/// the rationals.
inline Signature signature_of(const IntMatrix& gram) {
    const std::size_t n = gram.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(gram[i][j]);
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (m[j][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv < n) { // symmetric row/column swap
                std::swap(m[k], m[piv]);
                for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][piv]);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (m[k][j] != 0) {
                        off = j;
                        break;
                    }
                if (off == n) {
                    ++sig.zero;
                    continue;
                }
                // basis change e_k += e_off turns the off-diagonal pivot into
                // a nonzero diagonal entry (2*m[k][off] since m[off][off] = 0)
                for (std::size_t i = 0; i < n; ++i) m[k][i] += m[off][i];
                for (std::size_t i = 0; i < n; ++i) m[i][k] += m[i][off];
            }
        }
        const Rational piv = m[k][k];
        if (piv > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / piv;
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (std::size_t j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
        }
    }
    return sig;
}

class GramLattice {
public:
    GramLattice() = default;
    explicit GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
        const std::size_t n = gram_.size();
        for (const auto& row : gram_)
            if (row.size() != n) throw std::domain_error("Gram matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gram_[i][j] != gram_[j][i]) throw std::domain_error("Gram matrix must be symmetric");
    }

    const IntMatrix& gram() const { return gram_; }
    int rank() const { return static_cast<int>(gram_.size()); }
    Int discriminant() const { return determinant(gram_); }
    Signature signature() const { return signature_of(gram_); }
    bool positive_definite() const {
        const Signature s = signature();
        return s.negative == 0 && s.zero == 0;
    }
    bool negative_definite() const {
        const Signature s = signature();
        return s.positive == 0 && s.zero == 0;
    }

    friend GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
        const std::size_t na = a.gram_.size(), nb = b.gram_.size();
        IntMatrix m = zero_matrix(na + nb, na + nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) m[i][j] = a.gram_[i][j];
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) m[na + i][na + j] = b.gram_[i][j];
        return GramLattice(std::move(m));
    }

    friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
};

// ---- named lattices ------------------------------------------------------

inline GramLattice lattice_U(long k = 1) {
    if (k < 1) throw std::domain_error("U(k) needs k >= 1");
    IntMatrix m = zero_matrix(2, 2);
    m[0][1] = m[1][0] = k;
    return GramLattice(std::move(m));
}

/// <-2n>: rank one, generator of square -2n.
inline GramLattice lattice_minus_2n(long n) {
    if (n < 1) throw std::domain_error("<-2n> needs n >= 1");
    return GramLattice({{Int(-2 * n)}});
}

namespace detail {

inline GramLattice negative_definite_from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix m = zero_matrix(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
    for (const auto& [a, b] : edges)
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    return GramLattice(std::move(m));
}

} // namespace detail

/// Negative definite root lattices A_n (n>=1), D_n (n>=3), E_6, E_7, E_8.
inline GramLattice lattice_root(char family, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case 'A':
            if (n < 1) throw std::domain_error("A_n needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return detail::negative_definite_from_edges(n, edges);
        case 'D':
            if (n < 3) throw std::domain_error("D_n needs n >= 3");
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            return detail::negative_definite_from_edges(n, edges);
        case 'E':
            if (n == 6) return detail::negative_definite_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
            if (n == 7)
                return detail::negative_definite_from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
            if (n == 8)
                return detail::negative_definite_from_edges(
                    8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
            throw std::domain_error("E_n needs n in {6,7,8}");
        default: throw std::domain_error("unknown root lattice family");
    }
}

/// N = U + E7 + E8.
inline GramLattice lattice_N() {
    return direct_sum(direct_sum(lattice_U(), lattice_root('E', 7)), lattice_root('E', 8));
}

/// T(k,m,n) = U(k) + U(m) + <-2n>.
inline GramLattice lattice_T(long k, long m, long n) {
    return direct_sum(direct_sum(lattice_U(k), lattice_U(m)), lattice_minus_2n(n));
}

/// Name-based dispatch: U, U(k), A(n), D(n), E6, E7, E8, rank1(n) for <-2n>,
/// N, T(k,m,n).
inline GramLattice named_lattice(const std::string& name);

// ---- trivial lattice and Shioda-Tate bookkeeping --------------------------

struct TrivialLatticeReport {
    GramLattice lattice;
    int rank = 2;
    Int disc = -1;
};

/// T = <O, F> + sum of the root lattices of the reducible geometric fibers.
inline TrivialLatticeReport trivial_lattice(const FiberConfiguration& c) {
    IntMatrix zs = zero_matrix(2, 2);
    zs[0][0] = -c.chi;
    zs[0][1] = zs[1][0] = 1;
    GramLattice t{std::move(zs)};
    for (const auto& f : c.geometric_fibers())
        if (const auto rl = f.root_lattice()) t = direct_sum(t, lattice_root(rl->first, rl->second));
    TrivialLatticeReport rep;
    rep.rank = t.rank();
    rep.disc = t.discriminant();
    rep.lattice = std::move(t);
    return rep;
}

/// rk E(K) = rho - 2 - sum (m_v - 1) over geometric fibers.
inline int shioda_tate_rank(int rho, const FiberConfiguration& c) {
    int s = 0;
    for (const auto& f : c.geometric_fibers()) s += f.components() - 1;
    const int r = rho - 2 - s;
    if (r < 0) throw std::domain_error("rho below the trivial-lattice rank");
    return r;
}

/// Extremal rational elliptic surface test: disc(T) = -(#E(K))^2 and
/// Mordell-Weil rank 0 at rho = 10.
inline bool extremality_check(const FiberConfiguration& c, long mw_order) {
    if (c.chi != 1) throw std::domain_error("extremality check is for rational surfaces (chi = 1)");
    const TrivialLatticeReport t = trivial_lattice(c);
    if (t.rank > 10) return false;
    return t.disc == -Int(mw_order) * mw_order && shioda_tate_rank(10, c) == 0;
}

// ---- Smith normal form and the U^3 embedding ------------------------------

/// Elementary divisors d_1 | d_2 | ... of an integer matrix (nonzero ones).
inline std::vector<Int> smith_normal_form(IntMatrix m) {
    std::vector<Int> divs;
    if (m.empty() || m[0].empty()) return divs;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // find a nonzero pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = c; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        std::swap(m[r], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = r + 1; i < rows; ++i)
                while (m[i][c] != 0) {
                    const Int q = m[i][c] / m[r][c];
                    for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                    if (m[i][c] != 0) {
                        std::swap(m[r], m[i]);
                        clean = false;
                    }
                }
            for (std::size_t j = c + 1; j < cols; ++j)
                while (m[r][j] != 0) {
                    const Int q = m[r][j] / m[r][c];
                    for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
                    if (m[r][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
                        clean = false;
                    }
                }
        }
        divs.push_back(abs(m[r][c]));
        ++r;
        ++c;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < divs.size(); ++i)
        for (std::size_t j = i + 1; j < divs.size(); ++j) {
            const Int g = gcd(divs[i], divs[j]);
            const Int l = divs[i] / g * divs[j];
            divs[i] = g;
            divs[j] = l;
        }
    return divs;
}

struct EmbeddingCertificate {
    long n = 1;
    IntMatrix coordinates;            // 5 x 6, rows = images of the T(1,1,n) basis
    bool gram_preserved = false;      // M G(U^3) M^T == G(T(1,1,n))
    std::vector<Int> elementary_divisors;
    bool primitive = false;           // all elementary divisors 1
};

/// The explicit embedding U + U + <-2n> -> U^3: both U summands map
/// identically, the <-2n> generator to e1^3 - n e2^3.
inline EmbeddingCertificate embed_T_in_U3(long n) {
    if (n < 1) throw std::domain_error("embed_T_in_U3 needs n >= 1");
    EmbeddingCertificate cert;
    cert.n = n;
    cert.coordinates = zero_matrix(5, 6);
    cert.coordinates[0][0] = 1;
    cert.coordinates[1][1] = 1;
    cert.coordinates[2][2] = 1;
    cert.coordinates[3][3] = 1;
    cert.coordinates[4][4] = 1;
    cert.coordinates[4][5] = -n;
    const GramLattice target = direct_sum(direct_sum(lattice_U(), lattice_U()), lattice_U());
    const GramLattice source = lattice_T(1, 1, n);
    // M * G_target * M^T
    IntMatrix mg = zero_matrix(5, 6);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k)
                mg[i][j] += cert.coordinates[i][k] * target.gram()[k][j];
    IntMatrix mgmt = zero_matrix(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 6; ++k) mgmt[i][j] += mg[i][k] * cert.coordinates[j][k];
    cert.gram_preserved = (mgmt == source.gram());
    cert.elementary_divisors = smith_normal_form(cert.coordinates);
    cert.primitive = cert.elementary_divisors.size() == 5;
    for (const Int& d : cert.elementary_divisors)
        if (d != 1) cert.primitive = false;
    if (!cert.gram_preserved || !cert.primitive)
        throw internal_error("U^3 embedding certificate failed for n = " + std::to_string(n));
    return cert;
}

// ---- name parsing ----------------------------------------------------------

inline GramLattice named_lattice(const std::string& name) {
    auto args_of = [&](std::size_t open) {
        if (name.back() != ')') throw std::domain_error("bad lattice name: " + name);
        std::vector<long> args;
        std::string cur;
        for (std::size_t i = open + 1; i + 1 <= name.size() - 1; ++i) {
            const char ch = name[i];
            if (ch == ',') {
                args.push_back(std::stol(cur));
                cur.clear();
            } else
                cur += ch;
        }
        args.push_back(std::stol(cur));
        return args;
    };
    if (name == "U") return lattice_U();
    if (name == "N") return lattice_N();
    if (name == "E6") return lattice_root('E', 6);
    if (name == "E7") return lattice_root('E', 7);
    if (name == "E8") return lattice_root('E', 8);
    const auto open = name.find('(');
    if (open == std::string::npos) throw std::domain_error("unknown lattice name: " + name);
    const std::string head = name.substr(0, open);
    const auto args = args_of(open);
    if (head == "U" && args.size() == 1) return lattice_U(args[0]);
    if (head == "A" && args.size() == 1) return lattice_root('A', static_cast<int>(args[0]));
    if (head == "D" && args.size() == 1) return lattice_root('D', static_cast<int>(args[0]));
    if (head == "rank1" && args.size() == 1) return lattice_minus_2n(args[0]);
    if (head == "T" && args.size() == 3) return lattice_T(args[0], args[1], args[2]);
    throw std::domain_error("unknown lattice name: " + name);
}

} // namespace ellsurf
