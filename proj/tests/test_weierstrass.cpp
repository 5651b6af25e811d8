#include "ellsurf/weierstrass.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellsurf;

namespace {

const Polynomial t = Polynomial::variable();

// The integral j-line model written out explicitly.
WeierstrassModel model_S() {
    const Polynomial shift = t - 1728;
    return model_from_polynomials(shift, {}, {}, (-36) * shift.pow(3), -shift.pow(5));
}

RationalFunction random_rf(std::mt19937& gen) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 2);
    auto poly = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(gen)) + 1);
        for (auto& x : c) x = coeff(gen);
        return Polynomial(std::move(c));
    };
    return {poly(), poly() + Polynomial::monomial(2)}; // denominator never zero
}

} // namespace

TEST_CASE("long Weierstrass invariants") {
    SECTION("the integral j-line model has the exact expected discriminant") {
        const auto inv = compute_invariants(model_S());
        CHECK(inv.delta == RationalFunction(t.pow(2) * (t - 1728).pow(9)));
        CHECK(inv.c4 == RationalFunction(t * (t - 1728).pow(3)));
        CHECK(inv.j == RationalFunction(t));
    }
    SECTION("constant curve y^2 = x^3 + 1") {
        const auto inv = compute_invariants(short_model({}, 1));
        CHECK(inv.delta == RationalFunction(Rational(-432)));
    }
    SECTION("y^2 + xy + ty = x^3") {
        const auto inv = compute_invariants(model_from_polynomials(1, {}, t, {}, {}));
        CHECK(inv.delta == RationalFunction(t.pow(3) - 27 * t.pow(4)));
    }
    SECTION("identically-zero discriminant is rejected") {
        // y^2 = x^3 is a cusp everywhere
        CHECK_THROWS_AS(compute_invariants(short_model({}, {})), input_error);
    }
    SECTION("the b- and c-identities hold exactly for random models") {
        std::mt19937 gen(3);
        for (int i = 0; i < 25; ++i) {
            WeierstrassModel m{random_rf(gen), random_rf(gen), random_rf(gen), random_rf(gen),
                               random_rf(gen), Chart::AffineT};
            try {
                const auto inv = compute_invariants(m);
                CHECK(1728 * inv.delta == inv.c4.pow(3) - inv.c6 * inv.c6);
                CHECK(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
            } catch (const input_error&) {
                // randomly singular; fine
            }
        }
    }
}

TEST_CASE("coordinate transforms") {
    SECTION("u-scaling the generic j-line curve by t - 1728 gives the integral model") {
        const JLineFamily fam = j_line_family();
        CHECK(fam.integral == model_S());
    }
    SECTION("the identity transform is the identity") {
        const auto m = model_S();
        CHECK(transform_model(m, 1) == m);
    }
    SECTION("u = t on y^2 = x^3 + 1") {
        const auto m = transform_model(short_model({}, 1), RationalFunction(t));
        CHECK(m == short_model({}, t.pow(6)));
        CHECK(compute_invariants(m).delta ==
              RationalFunction(t.pow(12).scaled(-432)));
    }
    SECTION("random transforms fix j and scale delta by u^12") {
        std::mt19937 gen(5);
        std::uniform_int_distribution<int> small(-2, 2);
        const Polynomial t = Polynomial::variable();
        const std::vector<RationalFunction> units{
            RationalFunction(Rational(2)), RationalFunction(t + 1), RationalFunction(3 * t - 2),
            RationalFunction(Polynomial{Rational(1)}, t - 2),
            RationalFunction(t + 3, t + 1)};
        const auto base = model_S();
        const auto base_inv = compute_invariants(base);
        auto small_poly = [&] { return Polynomial{Rational(small(gen)), Rational(small(gen))}; };
        for (int i = 0; i < 50; ++i) {
            const RationalFunction& u = units[static_cast<std::size_t>(i) % units.size()];
            const auto m = transform_model(base, u, RationalFunction(small_poly()),
                                           RationalFunction(small_poly()), RationalFunction(small_poly()));
            const auto inv = compute_invariants(m);
            CHECK(inv.j == base_inv.j);
            CHECK(inv.delta == u.pow(12) * base_inv.delta);
        }
    }
    SECTION("u = 0 is rejected") {
        CHECK_THROWS_AS(transform_model(model_S(), RationalFunction()), std::domain_error);
    }
}

TEST_CASE("the infinity chart") {
    SECTION("j-line model") {
        const auto flipped = infinity_chart(model_S());
        CHECK(flipped.chart == Chart::InfinityS);
        const auto inv = compute_invariants(flipped);
        // delta = s (1 - 1728 s)^9, exactly
        CHECK(inv.delta == RationalFunction(t * (1 - 1728 * t).pow(9)));
    }
    SECTION("constant model is unchanged up to the chart marker") {
        const auto flipped = infinity_chart(short_model({}, 1));
        CHECK(flipped.chart == Chart::InfinityS);
        CHECK(compute_invariants(flipped).delta == RationalFunction(Rational(-432)));
    }
    SECTION("y^2 + xy + ty = x^3 flips to delta = s^8 (s - 27)") {
        const auto flipped = infinity_chart(model_from_polynomials(1, {}, t, {}, {}));
        CHECK(compute_invariants(flipped).delta == RationalFunction(t.pow(8) * (t - 27)));
    }
    SECTION("wrong chart is rejected") {
        auto m = model_S();
        m.chart = Chart::InfinityS;
        CHECK_THROWS_AS(infinity_chart(m), std::domain_error);
    }
}

TEST_CASE("short form") {
    SECTION("the j-line model in short form") {
        const auto s = to_short_form(model_S());
        CHECK(s.a1.is_zero());
        CHECK(s.a2.is_zero());
        CHECK(s.a3.is_zero());
        CHECK(s.a4 == RationalFunction((t * (t - 1728).pow(3)).scaled(rat(-1, 48))));
        CHECK(s.a6 == RationalFunction((t * (t - 1728).pow(5)).scaled(rat(1, 864))));
    }
    SECTION("idempotent") {
        const auto s = to_short_form(model_S());
        CHECK(to_short_form(s) == s);
    }
    SECTION("j is preserved") {
        const auto m = model_from_polynomials(1, {}, t, {}, {});
        CHECK(compute_invariants(to_short_form(m)).j == compute_invariants(m).j);
        CHECK(compute_invariants(to_short_form(m)).delta == compute_invariants(m).delta);
    }
}

TEST_CASE("the j-line family") {
    const JLineFamily fam = j_line_family();
    SECTION("j of the integral model is exactly t") {
        CHECK(compute_invariants(fam.integral).j == RationalFunction(t));
        CHECK(compute_invariants(fam.generic).j == RationalFunction(t));
    }
    SECTION("j evaluated at 1729 is 1729") {
        CHECK(compute_invariants(fam.integral).j.eval(1729) == 1729);
    }
    SECTION("the special curves have j = 0 and j = 1728") {
        // y^2 + y = x^3
        CHECK(compute_invariants(model_from_polynomials({}, {}, 1, {}, {})).j ==
              RationalFunction());
        // y^2 = x^3 + x
        CHECK(compute_invariants(short_model(1, {})).j == RationalFunction(Rational(1728)));
    }
}
