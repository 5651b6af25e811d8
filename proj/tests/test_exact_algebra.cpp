#include "ellsurf/places.hpp"
#include "ellsurf/rational_function.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellsurf;

namespace {

Polynomial t_power(std::size_t k) { return Polynomial::monomial(k); }

Polynomial random_polynomial(std::mt19937& gen, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Polynomial p;
    do {
        std::vector<Rational> c(static_cast<std::size_t>(deg(gen)) + 1);
        for (auto& x : c) x = coeff(gen);
        p = Polynomial(std::move(c));
    } while (p.is_zero());
    return p;
}

// Random polynomial with forced repeated rational roots, to exercise the
// multiplicity paths of the decomposition.
Polynomial random_structured(std::mt19937& gen) {
    std::uniform_int_distribution<int> root(-4, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> pieces(1, 3);
    Polynomial p{Rational(root(gen) == 0 ? 1 : root(gen))};
    for (int i = 0, n = pieces(gen); i < n; ++i) {
        const Polynomial lin{Rational(root(gen)), Rational(1)};
        p *= lin.pow(static_cast<unsigned>(mult(gen)));
    }
    const Polynomial irr{Rational(1), Rational(0), Rational(1)}; // t^2 + 1
    if (pieces(gen) == 1) p *= irr.pow(static_cast<unsigned>(mult(gen)));
    return p;
}

} // namespace

TEST_CASE("rational scalars stay canonical") {
    const Rational q = rat(4, -6);
    CHECK(num(q) == -2);
    CHECK(den(q) == 3);
    CHECK(rat(0, 5) == 0);
    CHECK(den(rat(0, 5)) == 1);
    CHECK(rat_str(rat(-10, 4)) == "-5/2");
    CHECK(rat_parse("-5/2") == rat(-10, 4));
    CHECK(rat_parse("17") == 17);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(rat_parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic basics") {
    const Polynomial t = Polynomial::variable();
    const Polynomial p = t * t - 1;
    CHECK(p.degree() == 2);
    CHECK(p.eval(3) == 8);
    CHECK((p * p).degree() == 4);
    CHECK(p.derivative() == 2 * t);
    const auto [q, r] = divmod(t * t * t - 2 * t + 5, t - 1);
    CHECK(q * (t - 1) + r == t * t * t - 2 * t + 5);
    CHECK(r.degree() == 0);
    CHECK(gcd(p, t - 1) == t - 1);
    CHECK(gcd(Polynomial{}, Polynomial{}).is_zero());
    CHECK_THROWS_AS(divmod(p, Polynomial{}), std::domain_error);
}

TEST_CASE("normalize_rf reduces and makes the denominator monic") {
    const Polynomial t = Polynomial::variable();
    SECTION("common factor") {
        const auto f = normalize_rf(t * t - 1, t - 1);
        CHECK(f.num() == t + 1);
        CHECK(f.den() == Polynomial{Rational(1)});
    }
    SECTION("monic normalization") {
        const auto f = normalize_rf(2 * t, Polynomial{Rational(4)});
        CHECK(f.num() == t.scaled(rat(1, 2)));
        CHECK(f.den() == Polynomial{Rational(1)});
    }
    SECTION("gcd with multiplicities") {
        const Polynomial num = t_power(3) * (1 - 27 * t);
        const auto f = normalize_rf(num, t_power(3));
        CHECK(f.num() == 1 - 27 * t);
        CHECK(f.den() == Polynomial{Rational(1)});
    }
    SECTION("zero denominator is rejected") {
        CHECK_THROWS_AS(normalize_rf(t, Polynomial{}), std::domain_error);
    }
    SECTION("idempotence on random inputs") {
        std::mt19937 gen(7);
        for (int i = 0; i < 50; ++i) {
            const RationalFunction f(random_polynomial(gen, 6), random_polynomial(gen, 6));
            const RationalFunction again(f.num(), f.den());
            CHECK(f == again);
        }
    }
}

TEST_CASE("place decomposition splits rational roots and refines the rest") {
    const Polynomial t = Polynomial::variable();
    SECTION("the j-line discriminant shape") {
        const Polynomial delta = t_power(2) * (t - 1728).pow(9);
        const auto d = place_decompose(delta);
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].place == Place::linear(0));
        CHECK(d.factors[0].multiplicity == 2);
        CHECK(d.factors[1].place == Place::linear(1728));
        CHECK(d.factors[1].multiplicity == 9);
        CHECK(d.unit == 1);
        CHECK(d.expand() == delta);
    }
    SECTION("constants decompose to a unit") {
        const auto d = place_decompose(Polynomial{Rational(5)});
        CHECK(d.factors.empty());
        CHECK(d.unit == 5);
    }
    SECTION("irreducible quadratic factors are kept whole") {
        const auto d = place_decompose(t * t * t + t);
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].place == Place::linear(0));
        CHECK(d.factors[0].multiplicity == 1);
        CHECK(d.factors[1].place.polynomial() == t * t + 1);
        CHECK(d.factors[1].place.residue_degree() == 2);
        CHECK(d.factors[1].multiplicity == 1);
    }
    SECTION("rational non-integral roots are found") {
        const Polynomial p = (3 * t - 1) * (2 * t + 5).pow(2);
        const auto d = place_decompose(p);
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].place == Place::linear(rat(1, 3)));
        CHECK(d.factors[1].place == Place::linear(rat(-5, 2)));
        CHECK(d.factors[1].multiplicity == 2);
        CHECK(d.expand() == p);
    }
    SECTION("zero polynomial is rejected") {
        CHECK_THROWS_AS(place_decompose(Polynomial{}), std::domain_error);
    }
    SECTION("re-expansion reproduces the input for 100 random polynomials") {
        std::mt19937 gen(11);
        for (int i = 0; i < 100; ++i) {
            const Polynomial p = i % 2 == 0 ? random_polynomial(gen, 12) : random_structured(gen);
            const auto d = place_decompose(p);
            CHECK(d.expand() == p);
            for (std::size_t a = 0; a < d.factors.size(); ++a) {
                const Polynomial& fa = d.factors[a].place.polynomial();
                CHECK(gcd(fa, fa.derivative()).is_constant()); // squarefree
                for (std::size_t b = a + 1; b < d.factors.size(); ++b)
                    CHECK(gcd(fa, d.factors[b].place.polynomial()).is_constant());
            }
        }
    }
}

TEST_CASE("valuations at finite and infinite places") {
    const Polynomial t = Polynomial::variable();
    const Polynomial delta = t_power(2) * (t - 1728).pow(9);
    CHECK(valuation(delta, Place::linear(0)) == 2);
    CHECK(valuation(delta, Place::linear(1728)) == 9);
    CHECK(valuation(RationalFunction(t), Place::infinity()) == -1);
    CHECK(valuation(t_power(4) - 1, Place::finite(t * t + 1)) == 1);
    CHECK_THROWS_AS(valuation(Polynomial{}, Place::linear(0)), std::domain_error);
    CHECK_THROWS_AS(valuation(RationalFunction(), Place::infinity()), std::domain_error);

    SECTION("valuation is additive on products") {
        std::mt19937 gen(13);
        const std::vector<Place> places{Place::linear(0), Place::linear(1),
                                        Place::finite(t * t + 1), Place::infinity()};
        for (int i = 0; i < 60; ++i) {
            const RationalFunction f(random_polynomial(gen, 6), random_polynomial(gen, 5));
            const RationalFunction g(random_structured(gen), random_polynomial(gen, 4));
            const Place& v = places[static_cast<std::size_t>(i) % places.size()];
            CHECK(valuation(f * g, v) == valuation(f, v) + valuation(g, v));
        }
    }
}

TEST_CASE("resultants and discriminants") {
    const Polynomial t = Polynomial::variable();
    // disc(x^2 + bx + c) = b^2 - 4c
    CHECK(poly_discriminant(t * t + 3 * t + 1) == 5);
    // disc(x^3 + px + q) = -4p^3 - 27q^2
    CHECK(poly_discriminant(t * t * t - t + 1) == 4 - 27);
    CHECK(poly_discriminant((t - 1) * (t - 1) * (t + 2)) == 0);
    CHECK(resultant(t - 2, t - 5) == -3); // lc product times (alpha - beta)
}
