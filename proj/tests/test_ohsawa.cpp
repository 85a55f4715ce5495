#include <pairsing/ohsawa.hpp>

#include <doctest.h>

#include <random>

using namespace pairsing;

namespace {

OhsawaSetup plain_setup(SncModel m) {
    OhsawaSetup s;
    s.model = std::move(m);
    return s;
}

// node together with B = (1/2) L for a generic line L through the origin:
// L' meets E away from Y', so only the E-part of f*B reaches the branches.
SncModel node_with_line() {
    SncModel m = fermat_cone_model(2, 2);
    m.boundary.components.push_back({on_x("L"), Rational(1, 2)});

    DivisorRecord l;
    l.id = on_x_prime("L'");
    l.kind = RecordKind::StrictB;
    l.boundary_ref = "L";
    l.mult_in_pullback_b = Rational(1, 2);
    m.records.push_back(std::move(l));

    for (auto& r : m.records)
        if (r.id.name == "E") r.mult_in_pullback_b = Rational(1, 2);
    return m;
}

}  // namespace

TEST_CASE("pole_divisor") {
    SUBCASE("smooth adjunction: no poles") {
        CHECK(pole_divisor(plain_setup(identity_model())).empty());
    }
    SUBCASE("node: coefficient 1 on both branches") {
        CHECK(pole_divisor(plain_setup(fermat_cone_model(2, 2))) ==
              QDivisor{{on_y_prime("p1"), Rational(1)}, {on_y_prime("p2"), Rational(1)}});
    }
    SUBCASE("Fermat cone: coefficient d - (n-1) on E ∩ Y'") {
        for (int n = 3; n <= 6; ++n)
            for (int d = 1; d <= 9; ++d) {
                const QDivisor pd = pole_divisor(plain_setup(fermat_cone_model(n, d)));
                QDivisor expected;
                expected.add_term(on_y_prime("gamma1"), Rational(d - (n - 1)));
                CHECK(pd == expected);
            }
    }
}

TEST_CASE("is_locally_integrable") {
    SUBCASE("Fermat n=3: integrable iff d <= 2") {
        CHECK(is_locally_integrable(plain_setup(fermat_cone_model(3, 2))).integrable);
        const auto bad = is_locally_integrable(plain_setup(fermat_cone_model(3, 3)));
        CHECK(!bad.integrable);
        REQUIRE(bad.blocking_curve);
        CHECK(bad.blocking_curve->name == "gamma1");
    }
    SUBCASE("twisted node with B = (1/2) line: 1 + 1/2 on the branches") {
        OhsawaSetup s = plain_setup(node_with_line());
        s.twist_by_boundary = true;
        const auto v = is_locally_integrable(s);
        CHECK(!v.integrable);
        CHECK(v.pole_divisor_on_yprime.coeff(on_y_prime("p1")) == Rational(3, 2));
        CHECK(v.pole_divisor_on_yprime.coeff(on_y_prime("p2")) == Rational(3, 2));
        CHECK(v.blocking_curve->name == "p1");
    }
    SUBCASE("boundary cases d = n-1 and d = n are decided exactly") {
        for (int n = 2; n <= 6; ++n) {
            const auto at_boundary =
                is_locally_integrable(plain_setup(fermat_cone_model(n, n - 1)));
            CHECK(at_boundary.integrable);  // coefficient exactly 0
            const auto just_over =
                is_locally_integrable(plain_setup(fermat_cone_model(n, n)));
            CHECK(!just_over.integrable);  // coefficient exactly 1
        }
    }
}

TEST_CASE("pole_divisor is linear in D and in Z") {
    const SncModel m = fermat_cone_model(3, 2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(0, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int i = 0; i < 200; ++i) {
        const Rational dc(num(rng), den(rng));
        const Rational zc(num(rng), den(rng));

        OhsawaSetup s = plain_setup(m);
        s.aux_pullback_d.add_term(on_x_prime("E"), dc);
        s.volume_zeros.add_term(on_x_prime("E"), zc);

        const QDivisor base = pole_divisor(plain_setup(m));
        const QDivisor shifted = pole_divisor(s);
        // E restricts to gamma1 with multiplicity one, so the pole moves by
        // dc - zc there
        CHECK(shifted.coeff(on_y_prime("gamma1")) -
                  base.coeff(on_y_prime("gamma1")) ==
              dc - zc);
    }

    SUBCASE("D on Y or negative Z are rejected") {
        OhsawaSetup s = plain_setup(m);
        s.aux_pullback_d.add_term(on_x_prime("Y'"), Rational(1));
        CHECK_THROWS_AS(pole_divisor(s), std::invalid_argument);

        OhsawaSetup z = plain_setup(m);
        z.volume_zeros.add_term(on_x_prime("E"), Rational(-1));
        CHECK_THROWS_AS(pole_divisor(z), std::invalid_argument);
    }
}

TEST_CASE("theorem_equivalence_check") {
    SUBCASE("cone grid, B = 0") {
        for (int n = 2; n <= 6; ++n)
            for (int d = 1; d <= 9; ++d)
                CHECK(theorem_equivalence_check(plain_setup(fermat_cone_model(n, d))));
    }
    SUBCASE("A_{m-1} models agree for every m (informational: X not smooth)") {
        for (int m = 1; m <= 6; ++m)
            CHECK(theorem_equivalence_check(plain_setup(a_surface_model(m))));
    }
    SUBCASE("twisted boundary agrees with the Delta path") {
        OhsawaSetup s = plain_setup(node_with_line());
        s.twist_by_boundary = true;
        CHECK(theorem_equivalence_check(s));
    }
    SUBCASE("boundary without twist is a precondition violation") {
        OhsawaSetup s = plain_setup(node_with_line());
        CHECK_THROWS_AS(theorem_equivalence_check(s), std::invalid_argument);
    }
    SUBCASE("equivalence holds on every x-smooth fixture with matching B") {
        OhsawaSetup kol = plain_setup(kollar_example_model());
        kol.twist_by_boundary = true;
        CHECK(theorem_equivalence_check(kol));
    }
}

TEST_CASE("smooth_density_exponents") {
    SUBCASE("trivial weight gives Lebesgue measure") {
        MonomialWeight w;
        w.n = 4;
        const auto e = smooth_density_exponents(w, {});
        REQUIRE(e.size() == 3);
        for (const auto& x : e) CHECK(x == 0);
    }
    SUBCASE("single pole") {
        MonomialWeight w;
        w.n = 2;
        w.a = {Rational(1, 2)};
        const auto e = smooth_density_exponents(w, {});
        REQUIRE(e.size() == 1);
        CHECK(e[0] == Rational(-1));
    }
    SUBCASE("volume zeros can cancel the pole") {
        MonomialWeight w;
        w.n = 2;
        w.a = {Rational(1, 2)};
        const auto e = smooth_density_exponents(w, {Rational(1)});
        CHECK(e[0] == 0);
    }
    SUBCASE("invalid weights are rejected") {
        MonomialWeight w;
        w.n = 2;
        w.a = {Rational(1), Rational(1)};  // N = n
        CHECK_THROWS_AS(smooth_density_exponents(w, {}), std::invalid_argument);
    }
}
