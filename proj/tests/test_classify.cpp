#include <pairsing/classify.hpp>

#include <doctest.h>

#include <random>

using namespace pairsing;

TEST_CASE("delta_prime coefficients") {
    SUBCASE("Fermat cone n=3, d=2") {
        const QDivisor d = delta_prime(fermat_cone_model(3, 2));
        CHECK(d.coeff(on_x_prime("Y'")) == 1);
        CHECK(d.coeff(on_x_prime("E")) == 0);  // 2 + 0 - 2
    }
    SUBCASE("node") {
        const QDivisor d = delta_prime(fermat_cone_model(2, 2));
        CHECK(d.coeff(on_x_prime("Y'")) == 1);
        CHECK(d.coeff(on_x_prime("E")) == 1);  // 2 - 1
    }
    SUBCASE("Kollar example") {
        const QDivisor d = delta_prime(kollar_example_model());
        CHECK(d.coeff(on_x_prime("Y'")) == 1);
        CHECK(d.coeff(on_x_prime("H1'")) == 2);
        CHECK(d.coeff(on_x_prime("H2'")) == -2);
        CHECK(d.coeff(on_x_prime("E")) == 0);  // 1 + 0 - 1
    }
}

TEST_CASE("discrepancy") {
    CHECK(discrepancy(fermat_cone_model(3, 2), on_x_prime("E")) == 0);
    CHECK(discrepancy(fermat_cone_model(2, 2), on_x_prime("E")) == -1);
    CHECK(discrepancy(fermat_cone_model(3, 4), on_x_prime("E")) == -2);
    CHECK_THROWS_AS(discrepancy(identity_model(), on_x_prime("nope")),
                    std::invalid_argument);

    // discrepancy of the distinguished divisor is always -1
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= 9; ++d)
            CHECK(discrepancy(fermat_cone_model(n, d), on_x_prime("Y'")) == -1);
}

TEST_CASE("cone discrepancy formula a(E) = n - 1 - d") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= 9; ++d)
            CHECK(discrepancy(fermat_cone_model(n, d), on_x_prime("E")) ==
                  Rational(n - 1 - d));
}

TEST_CASE("classify_pair") {
    SUBCASE("Fermat n=3, d=2 is plt") {
        const PairClass pc = classify_pair(fermat_cone_model(3, 2));
        CHECK(pc.verdict == Verdict::Plt);
        REQUIRE(pc.witness);
        CHECK(pc.witness->name == "E");
        CHECK(*pc.witness_discrepancy == 0);
    }
    SUBCASE("node is lc, not plt") {
        const PairClass pc = classify_pair(fermat_cone_model(2, 2));
        CHECK(pc.verdict == Verdict::LC);
        CHECK(pc.witness->name == "E");
        CHECK(*pc.witness_discrepancy == -1);
    }
    SUBCASE("Kollar pair is not even lc") {
        const PairClass pc = classify_pair(kollar_example_model());
        CHECK(pc.verdict == Verdict::NotLC);
        CHECK(pc.witness->name == "H1'");
        CHECK(*pc.witness_discrepancy == -2);
    }
    SUBCASE("identity model is plt with Y' as witness") {
        const PairClass pc = classify_pair(identity_model());
        CHECK(pc.verdict == Verdict::Plt);
        CHECK(pc.witness->name == "Y'");
        CHECK(*pc.witness_discrepancy == -1);
    }
}

TEST_CASE("Guan-Li criterion: multiplicity >= n is never plt") {
    for (int n = 2; n <= 6; ++n)
        for (int d = n; d <= 9; ++d) {
            const Verdict v = classify_pair(fermat_cone_model(n, d)).verdict;
            CHECK((v == Verdict::LC || v == Verdict::NotLC));
        }
}

TEST_CASE("classify_absolute") {
    CHECK(classify_absolute(QDivisor{}).verdict == Verdict::Klt);
    CHECK(classify_absolute(QDivisor{{on_y_nu("p"), Rational(1, 2)}}).verdict ==
          Verdict::Klt);
    CHECK(classify_absolute(QDivisor{{on_y_nu("p1"), Rational(1)},
                                     {on_y_nu("p2"), Rational(1)}})
              .verdict == Verdict::LC);
    CHECK(classify_absolute(QDivisor{{on_y_nu("p"), Rational(3, 2)}}).verdict ==
          Verdict::NotLC);
    // negative coefficients never hurt the klt verdict
    CHECK(classify_absolute(QDivisor{{on_y_nu("p"), Rational(-5)}}).verdict ==
          Verdict::Klt);
}

TEST_CASE("classification monotone under effective enlargement") {
    std::mt19937_64 rng(42);
    static const char* names[] = {"p1", "p2", "p3", "p4"};
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> pos(0, 6);
    for (int i = 0; i < 1000; ++i) {
        QDivisor d, extra;
        for (const char* name : names) {
            d.add_term(on_y_nu(name), Rational(num(rng), den(rng)));
            extra.add_term(on_y_nu(name), Rational(pos(rng), den(rng)));
        }
        CHECK(extra.is_effective());
        const Verdict before = classify_absolute(d).verdict;
        const Verdict after = classify_absolute(d + extra).verdict;
        CHECK(static_cast<int>(after) <= static_cast<int>(before));
    }
}
