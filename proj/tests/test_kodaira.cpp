#include "ellsurf/kodaira.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ellsurf;

namespace {

const Polynomial t = Polynomial::variable();

WeierstrassModel model_S() {
    const Polynomial shift = t - 1728;
    return model_from_polynomials(shift, {}, {}, (-36) * shift.pow(3), -shift.pow(5));
}

// Short model with an I_2 fiber at t = 0: y^2 = x^3 - 3x + (2 + t^2).
WeierstrassModel model_I2() { return short_model(Polynomial(-3), t * t + 2); }

} // namespace

TEST_CASE("classification from valuation profiles") {
    CHECK(classify_valuation_profile(0, 5) == KodairaType::I(5));
    CHECK(classify_valuation_profile(std::nullopt, 2) == KodairaType::II());
    CHECK(classify_valuation_profile(1, 3) == KodairaType::III());
    CHECK(classify_valuation_profile(2, 4) == KodairaType::IV());
    CHECK(classify_valuation_profile(2, 6) == KodairaType::Istar(0));
    CHECK(classify_valuation_profile(2, 9) == KodairaType::Istar(3));
    CHECK(classify_valuation_profile(3, 8) == KodairaType::IVstar());
    CHECK(classify_valuation_profile(3, 9) == KodairaType::IIIstar());
    CHECK(classify_valuation_profile(4, 10) == KodairaType::IIstar());
    CHECK(classify_valuation_profile(5, 0) == KodairaType::smooth());
    SECTION("minimalization loop") {
        CHECK(classify_valuation_profile(4, 12) == KodairaType::smooth());
        CHECK(classify_valuation_profile(4, 13) == KodairaType::I(1));
        CHECK(classify_valuation_profile(std::nullopt, 14) == KodairaType::II());
        CHECK(classify_valuation_profile(5, 15) == KodairaType::III());
    }
    SECTION("merged additive profile terminates at II*") {
        CHECK(classify_valuation_profile(4, 11) == KodairaType::IIstar());
        CHECK(classify_valuation_profile(8, 23) == KodairaType::IIstar()); // one rescale first
    }
    SECTION("profiles outside the table are internal errors") {
        CHECK_THROWS_AS(classify_valuation_profile(1, 5), internal_error);
        CHECK_THROWS_AS(classify_valuation_profile(3, 10), internal_error);
        CHECK_THROWS_AS(classify_valuation_profile(std::nullopt, 1), internal_error);
    }
}

TEST_CASE("classification of the j-line model") {
    const auto m = model_S();
    CHECK(classify_fiber(m, Place::linear(0)) == KodairaType::II());
    CHECK(classify_fiber(m, Place::linear(1728)) == KodairaType::IIIstar());
    CHECK(classify_fiber(m, Place::infinity()) == KodairaType::I(1));
    SECTION("full configuration") {
        const auto cfg = fiber_configuration(m);
        REQUIRE(cfg.entries.size() == 3);
        CHECK(cfg.entries[0].type == KodairaType::II());
        CHECK(cfg.entries[1].type == KodairaType::IIIstar());
        CHECK(cfg.entries[2].place.is_infinity());
        CHECK(cfg.entries[2].type == KodairaType::I(1));
        CHECK(euler_number(cfg) == 12);
        CHECK(cfg.chi == 1);
    }
}

TEST_CASE("classification of y^2 + xy + ty = x^3") {
    const auto m = model_from_polynomials(1, {}, t, {}, {});
    CHECK(classify_fiber(m, Place::infinity()) == KodairaType::IVstar());
    const auto cfg = fiber_configuration(m);
    REQUIRE(cfg.entries.size() == 3);
    CHECK(cfg.entries[0].type == KodairaType::I(3));        // at t = 0
    CHECK(cfg.entries[0].place == Place::linear(0));
    CHECK(cfg.entries[1].type == KodairaType::I(1));        // at t = 1/27
    CHECK(cfg.entries[1].place == Place::linear(rat(1, 27)));
    CHECK(cfg.entries[2].type == KodairaType::IVstar());    // at infinity
    CHECK(euler_number(cfg) == 12);
}

TEST_CASE("classification is invariant under transforms that are units at the place") {
    std::mt19937 gen(17);
    std::uniform_int_distribution<int> small(-3, 3);
    const auto m = model_S();
    const Place at_zero = Place::linear(0);
    for (int i = 0; i < 10; ++i) {
        const RationalFunction u(Polynomial{Rational(1), Rational(small(gen))}); // 1 + c t, unit at 0
        const RationalFunction r(Polynomial{Rational(small(gen)), Rational(small(gen))});
        const RationalFunction s(Polynomial{Rational(small(gen))});
        const RationalFunction w(Polynomial{Rational(small(gen)), Rational(0), Rational(small(gen))});
        const auto m2 = transform_model(m, u, r, s, w);
        CHECK(classify_fiber(m2, at_zero) == KodairaType::II());
    }
}

TEST_CASE("euler numbers") {
    FiberConfiguration c = multiplicative_configuration({5, 5, 1, 1});
    CHECK(euler_number(c) == 12);
    CHECK(euler_number(FiberConfiguration{}) == 0);
    FiberConfiguration mixed;
    mixed.entries = {{Place::linear(0), KodairaType::II()},
                     {Place::linear(1728), KodairaType::IIIstar()},
                     {Place::infinity(), KodairaType::I(1)}};
    CHECK(euler_number(mixed) == 12);
}

TEST_CASE("component counts, groups and root lattices") {
    CHECK(KodairaType::I(7).components() == 7);
    CHECK(KodairaType::II().components() == 1);
    CHECK(KodairaType::III().components() == 2);
    CHECK(KodairaType::IV().components() == 3);
    CHECK(KodairaType::Istar(2).components() == 7);
    CHECK(KodairaType::IVstar().components() == 7);
    CHECK(KodairaType::IIIstar().components() == 8);
    CHECK(KodairaType::IIstar().components() == 9);

    CHECK(KodairaType::I(6).component_group() == AbelianGroup::cyclic(6));
    CHECK(KodairaType::II().component_group().is_trivial());
    CHECK(KodairaType::III().component_group() == AbelianGroup::cyclic(2));
    CHECK(KodairaType::IVstar().component_group() == AbelianGroup::cyclic(3));
    CHECK(KodairaType::Istar(1).component_group() == AbelianGroup::cyclic(4));
    CHECK(KodairaType::Istar(2).component_group() == AbelianGroup{{2, 2}});

    CHECK(KodairaType::I(9).root_lattice() == std::make_pair('A', 8));
    CHECK(!KodairaType::I(1).root_lattice().has_value());
    CHECK(KodairaType::Istar(0).root_lattice() == std::make_pair('D', 4));
    CHECK(KodairaType::IIstar().root_lattice() == std::make_pair('E', 8));

    CHECK(KodairaType::parse("I3") == KodairaType::I(3));
    CHECK(KodairaType::parse("I0*") == KodairaType::Istar(0));
    CHECK(KodairaType::parse("IV*") == KodairaType::IVstar());
    CHECK_THROWS_AS(KodairaType::parse("V"), std::invalid_argument);
}

TEST_CASE("base change of multiplicative fibers") {
    CHECK(base_change_fiber(KodairaType::I(1), 9) == KodairaType::I(9));
    CHECK(base_change_fiber(KodairaType::I(4), 1) == KodairaType::I(4));
    CHECK(base_change_fiber(KodairaType::I(3), 2) == KodairaType::I(6));
    CHECK_THROWS_AS(base_change_fiber(KodairaType::II(), 2), std::domain_error);
}

TEST_CASE("quotients by torsion translations") {
    CHECK(quotient_fiber_by_translation(KodairaType::I(9), 3, false) == KodairaType::I(3));
    CHECK(quotient_fiber_by_translation(KodairaType::I(1), 3, true) == KodairaType::I(3));
    CHECK_THROWS_AS(quotient_fiber_by_translation(KodairaType::I(9), 2, false), std::domain_error);
    CHECK_THROWS_AS(quotient_fiber_by_translation(KodairaType::IV(), 3, true), std::domain_error);
    SECTION("whole configuration [9,1,1,1] -> [3,3,3,3] preserves the Euler number") {
        const std::vector<int> ns{9, 1, 1, 1};
        const std::vector<bool> meets_zero{false, true, true, true};
        FiberConfiguration out;
        long k = 0;
        for (std::size_t i = 0; i < ns.size(); ++i)
            out.entries.push_back({Place::linear(k++), quotient_fiber_by_translation(
                                                           KodairaType::I(ns[i]), 3, meets_zero[i])});
        CHECK(out.component_tuple() == std::vector<int>{3, 3, 3, 3});
        CHECK(euler_number(out) == 12);
    }
}

TEST_CASE("quadratic twists") {
    CHECK(quadratic_twist_fiber(KodairaType::Istar(0)) == KodairaType::I(0));
    CHECK(quadratic_twist_fiber(KodairaType::II()) == KodairaType::IVstar());
    CHECK(quadratic_twist_fiber(KodairaType::IV()) == KodairaType::IIstar());
    SECTION("twist is an involution and adds 6 to the Euler number of I_n") {
        const std::vector<KodairaType> all{
            KodairaType::I(0),  KodairaType::I(1),      KodairaType::I(5),     KodairaType::II(),
            KodairaType::III(), KodairaType::IV(),      KodairaType::Istar(0), KodairaType::Istar(3),
            KodairaType::IVstar(), KodairaType::IIIstar(), KodairaType::IIstar()};
        for (const auto& f : all) CHECK(quadratic_twist_fiber(quadratic_twist_fiber(f)) == f);
        for (int n : {0, 1, 2, 7})
            CHECK(quadratic_twist_fiber(KodairaType::I(n)).euler() == KodairaType::I(n).euler() + 6);
    }
    SECTION("twist-and-classify oracle: I_2 becomes I_2*") {
        const auto m = model_I2();
        REQUIRE(classify_fiber(m, Place::linear(0)) == KodairaType::I(2));
        // quadratic twist by t: (A, B) -> (t^2 A, t^3 B)
        const auto twisted =
            short_model(m.a4.as_polynomial() * t * t, m.a6.as_polynomial() * t.pow(3));
        CHECK(classify_fiber(twisted, Place::linear(0)) ==
              quadratic_twist_fiber(KodairaType::I(2)));
    }
}

TEST_CASE("semistable fibration counts") {
    CHECK(semistable_counts(2, 1, 4) == std::make_pair(6, 3));
    CHECK(semistable_counts(2, 2, 6) == std::make_pair(8, 5));
    CHECK(semistable_counts(3, 0, 4) == std::make_pair(6, 2));
    CHECK_THROWS_AS(semistable_counts(1, 0, 4), std::domain_error);
}
