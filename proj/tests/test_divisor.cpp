#include <pairsing/divisor.hpp>
#include <pairsing/serialize.hpp>

#include <doctest.h>

#include <random>

using namespace pairsing;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

QDivisor rand_divisor(std::mt19937_64& rng, const std::string& space = space::x_prime) {
    static const char* names[] = {"E1", "E2", "E3", "H", "Y'", "F"};
    std::uniform_int_distribution<int> count(0, 5);
    QDivisor d;
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
        std::uniform_int_distribution<int> pick(0, 5);
        d.add_term(PrimeId{names[pick(rng)], space}, rand_rational(rng));
    }
    return d;
}

}  // namespace

TEST_CASE("add: coefficient-wise with pruning") {
    const PrimeId e = on_x_prime("E");
    CHECK(QDivisor{{e, Rational(1, 2)}} + QDivisor{{e, Rational(1, 2)}} ==
          QDivisor{{e, Rational(1)}});
    CHECK((QDivisor{{e, Rational(1)}} + QDivisor{{e, Rational(-1)}}).empty());

    QDivisor left{{on_x_prime("Y"), Rational(1)}};
    QDivisor right{{on_x_prime("H1"), Rational(2)}, {on_x_prime("H2"), Rational(-2)}};
    const QDivisor sum = left + right;
    CHECK(sum.size() == 3);
    CHECK(sum.coeff(on_x_prime("Y")) == 1);
    CHECK(sum.coeff(on_x_prime("H1")) == 2);
    CHECK(sum.coeff(on_x_prime("H2")) == -2);
}

TEST_CASE("add: namespace mismatch is an error") {
    QDivisor a{{on_x("H"), Rational(1)}};
    QDivisor b{{on_x_prime("H"), Rational(1)}};
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_NOTHROW(add(a, QDivisor{}));
    CHECK_NOTHROW(add(QDivisor{}, b));
}

TEST_CASE("scale: exact scalar multiplication") {
    const PrimeId e = on_x_prime("E");
    CHECK(scale(Rational(0), QDivisor{{e, Rational(5)}}).empty());
    CHECK(scale(Rational(1, 3), QDivisor{{e, Rational(1)}}) ==
          QDivisor{{e, Rational(1, 3)}});
    CHECK(scale(Rational(-1), QDivisor{{e, Rational(2, 7)}}) ==
          QDivisor{{e, Rational(-2, 7)}});
}

TEST_CASE("floor_divisor: floors toward minus infinity") {
    const PrimeId e = on_x_prime("E");
    const PrimeId b1 = on_x_prime("B1");
    CHECK(floor_divisor(QDivisor{{e, Rational(3, 2)}}) == QDivisor{{e, Rational(1)}});
    CHECK(floor_divisor(QDivisor{{e, Rational(-1, 2)}}) == QDivisor{{e, Rational(-1)}});
    CHECK(floor_divisor(QDivisor{{b1, Rational(1)}, {e, Rational(5, 3)}}) ==
          QDivisor{{b1, Rational(1)}, {e, Rational(1)}});
}

TEST_CASE("max_coefficient: witness with name tie-break") {
    CHECK(max_coefficient(QDivisor{}) ==
          std::pair<Rational, std::optional<PrimeId>>{Rational(0), std::nullopt});

    QDivisor d{{on_x_prime("E1"), Rational(1, 2)}, {on_x_prime("E2"), Rational(1)}};
    auto [c, id] = max_coefficient(d);
    CHECK(c == 1);
    CHECK(id->name == "E2");

    QDivisor tie{{on_x_prime("E1"), Rational(1)}, {on_x_prime("E2"), Rational(1)}};
    CHECK(max_coefficient(tie).second->name == "E1");
}

TEST_CASE("divisor algebra laws on random inputs") {
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 1000; ++i) {
        const QDivisor a = rand_divisor(rng);
        const QDivisor b = rand_divisor(rng);
        const QDivisor c = rand_divisor(rng);
        const Rational s = rand_rational(rng);

        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(scale(s, a + b) == scale(s, a) + scale(s, b));
        CHECK((a - a).empty());

        // floor properties
        const QDivisor fl = floor_divisor(a);
        CHECK(floor_divisor(fl) == fl);
        CHECK(fl.has_integer_coefficients());
        const QDivisor frac = a - fl;
        for (const auto& [p, v] : frac.terms()) {
            CHECK(v >= 0);
            CHECK(v < 1);
        }
        for (const auto& [p, v] : fl.terms()) CHECK(v <= a.coeff(p));

        // support audit: no stored zeros after any of the above
        for (const auto& d : {a + b, scale(s, a), fl, frac}) {
            for (const auto& [p, v] : d.terms()) CHECK(v != 0);
        }
    }
}

TEST_CASE("rational parse/format round-trip") {
    CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
    CHECK(to_fraction_string(Rational(-2, 4)) == "-1/2");
    CHECK(parse_fraction("7") == Rational(7));
    CHECK(parse_fraction("-9/6") == Rational(-3, 2));
    CHECK(!parse_fraction(""));
    CHECK(!parse_fraction("1/0"));
    CHECK(!parse_fraction("a/b"));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = rand_rational(rng);
        CHECK(parse_fraction(to_fraction_string(q)) == q);
    }
}

TEST_CASE("divisor JSON round-trip is exact") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const QDivisor d = rand_divisor(rng);
        CHECK(divisor_from_json(divisor_to_json(d), space::x_prime) == d);
    }
}
