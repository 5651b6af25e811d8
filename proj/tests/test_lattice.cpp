#include "ellsurf/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellsurf;

TEST_CASE("named lattices") {
    CHECK(lattice_U().discriminant() == -1);
    CHECK(lattice_U(3).discriminant() == -9);
    CHECK(lattice_root('A', 2).gram() == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(lattice_root('A', 2).discriminant() == 3);
    SECTION("root lattice determinants and definiteness") {
        // |det| of the Cartan matrices: A_n -> n+1, D_n -> 4, E6 -> 3, E7 -> 2, E8 -> 1
        for (int n : {1, 2, 5, 8}) {
            const auto a = lattice_root('A', n);
            CHECK(a.negative_definite());
            CHECK(abs(a.discriminant()) == n + 1);
        }
        for (int n : {3, 4, 6}) {
            const auto d = lattice_root('D', n);
            CHECK(d.negative_definite());
            CHECK(abs(d.discriminant()) == 4);
        }
        CHECK(abs(lattice_root('E', 6).discriminant()) == 3);
        CHECK(abs(lattice_root('E', 7).discriminant()) == 2);
        CHECK(abs(lattice_root('E', 8).discriminant()) == 1);
        CHECK(lattice_root('E', 8).negative_definite());
    }
    SECTION("T(1,1,1)") {
        const auto tlat = lattice_T(1, 1, 1);
        CHECK(tlat.rank() == 5);
        CHECK(tlat.discriminant() == -2);
        const Signature s = tlat.signature();
        CHECK(s.positive == 2);
        CHECK(s.negative == 3);
    }
    SECTION("N = U + E7 + E8") {
        const auto n = lattice_N();
        CHECK(n.rank() == 17);
        const Signature s = n.signature();
        CHECK(s.positive == 1);
        CHECK(s.negative == 16);
    }
    SECTION("name parsing") {
        CHECK(named_lattice("U") == lattice_U());
        CHECK(named_lattice("U(2)") == lattice_U(2));
        CHECK(named_lattice("A(3)") == lattice_root('A', 3));
        CHECK(named_lattice("D(5)") == lattice_root('D', 5));
        CHECK(named_lattice("E7") == lattice_root('E', 7));
        CHECK(named_lattice("rank1(4)").gram() == IntMatrix{{-8}});
        CHECK(named_lattice("T(2,3,4)") == lattice_T(2, 3, 4));
        CHECK_THROWS_AS(named_lattice("Q(1)"), std::domain_error);
        CHECK_THROWS_AS(named_lattice("U(0)"), std::domain_error);
    }
}

TEST_CASE("discriminants multiply over direct sums") {
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> pick(0, 5);
    auto random_block = [&]() -> GramLattice {
        switch (pick(gen)) {
            case 0: return lattice_U();
            case 1: return lattice_U(2 + pick(gen));
            case 2: return lattice_root('A', 1 + pick(gen));
            case 3: return lattice_root('D', 3 + pick(gen));
            case 4: return lattice_root('E', 6 + pick(gen) % 3);
            default: return lattice_minus_2n(1 + pick(gen));
        }
    };
    for (int i = 0; i < 50; ++i) {
        const GramLattice a = random_block(), b = random_block();
        const GramLattice s = direct_sum(a, b);
        CHECK(s.discriminant() == a.discriminant() * b.discriminant());
        const Signature sa = a.signature(), sb = b.signature(), ss = s.signature();
        CHECK(ss.positive == sa.positive + sb.positive);
        CHECK(ss.negative == sa.negative + sb.negative);
        // parity of the signature matches the sign of the discriminant
        CHECK((s.discriminant() < 0) == (ss.negative % 2 == 1));
    }
}

TEST_CASE("trivial lattices of configurations") {
    SECTION("[9,1,1,1]") {
        const auto rep = trivial_lattice(multiplicative_configuration({9, 1, 1, 1}));
        CHECK(rep.rank == 10);
        CHECK(rep.disc == -9);
    }
    SECTION("[3,3,3,3]") {
        const auto rep = trivial_lattice(multiplicative_configuration({3, 3, 3, 3}));
        CHECK(rep.rank == 10);
        CHECK(rep.disc == -81);
    }
    SECTION("no reducible fibers") {
        const auto rep = trivial_lattice(multiplicative_configuration({1, 1}));
        CHECK(rep.rank == 2);
        CHECK(rep.disc == -1);
    }
    SECTION("|disc| = prod n_i for the Beauville tuples and random tuples") {
        std::vector<std::vector<int>> tuples{{3, 3, 3, 3}, {4, 4, 2, 2}, {5, 5, 1, 1},
                                             {6, 3, 2, 1}, {8, 2, 1, 1}, {9, 1, 1, 1}};
        std::mt19937 gen(29);
        std::uniform_int_distribution<int> n(1, 9);
        for (int i = 0; i < 20; ++i) tuples.push_back({n(gen), n(gen), n(gen)});
        for (const auto& tup : tuples) {
            Int prod = 1;
            for (int k : tup) prod *= k;
            const auto rep = trivial_lattice(multiplicative_configuration(tup));
            CHECK(abs(rep.disc) == prod);
            CHECK(rep.disc == -prod); // sign convention
        }
    }
}

TEST_CASE("Shioda-Tate rank and extremality") {
    CHECK(shioda_tate_rank(10, multiplicative_configuration({9, 1, 1, 1})) == 0);
    CHECK(shioda_tate_rank(10, multiplicative_configuration({3, 3, 3, 3})) == 0);
    CHECK(shioda_tate_rank(2, FiberConfiguration{}) == 0);
    CHECK_THROWS_AS(shioda_tate_rank(8, multiplicative_configuration({9, 1, 1, 1})),
                    std::domain_error);
    CHECK(extremality_check(multiplicative_configuration({3, 3, 3, 3}), 9));
    CHECK(extremality_check(multiplicative_configuration({9, 1, 1, 1}), 3));
    CHECK_FALSE(extremality_check(multiplicative_configuration({5, 5, 1, 1}), 4));
}

TEST_CASE("Smith normal form") {
    CHECK(smith_normal_form({{Int(4), 0}, {0, Int(6)}}) == std::vector<Int>{2, 12});
    CHECK(smith_normal_form({{Int(4), 0, 0}, {0, Int(6), 0}, {0, 0, Int(9)}}) ==
          std::vector<Int>{1, 6, 36});
    CHECK(smith_normal_form({{Int(1), 0, 0}, {0, Int(1), 0}}) == std::vector<Int>{1, 1});
    CHECK(smith_normal_form({{Int(2), Int(4)}, {Int(6), Int(8)}}) == std::vector<Int>{2, 4});
}

TEST_CASE("the U^3 embedding certificate") {
    SECTION("validates for n = 1..10") {
        for (long n = 1; n <= 10; ++n) {
            const auto cert = embed_T_in_U3(n);
            CHECK(cert.gram_preserved);
            CHECK(cert.primitive);
            CHECK(cert.elementary_divisors == std::vector<Int>(5, Int(1)));
        }
    }
    SECTION("the image of the rank-one generator has the right norm") {
        const auto cert = embed_T_in_U3(2);
        // last row is e1^3 - 2 e2^3; its norm in U is 2 * 1 * (-2) = -4
        const auto& row = cert.coordinates[4];
        CHECK(row == std::vector<Int>{0, 0, 0, 0, 1, -2});
        Int g = 0;
        for (const auto& x : row) g = gcd(g, x);
        CHECK(g == 1);
    }
    SECTION("disc T(k,m,n) = -2 k^2 m^2 n") {
        for (long k = 1; k <= 5; ++k)
            for (long m = 1; m <= 5; ++m)
                for (long n = 1; n <= 5; ++n)
                    CHECK(lattice_T(k, m, n).discriminant() == Int(-2) * k * k * m * m * n);
    }
}
