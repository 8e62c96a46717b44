#include <doctest.h>

#include <symdet/errors.hpp>
#include <symdet/gf.hpp>

using namespace symdet;

TEST_SUITE("gf") {

TEST_CASE("prime field basics") {
    Field f(3, 1);
    CHECK(f.p() == 3);
    CHECK(f.e() == 1);
    CHECK(f.q() == 3);
    CHECK(f.modulus_enc() == 3);
    CHECK(f.zero().v == 0);
    CHECK(f.one().v == 1);
    CHECK(f.mul(f.element(2), f.element(2)) == f.one());
    CHECK(f.add(f.element(2), f.element(2)) == f.one());
    CHECK(f.neg(f.element(1)) == f.element(2));
    CHECK(f.from_int(-1) == f.element(2));
    CHECK(f.from_int(5) == f.element(2));
}

TEST_CASE("modulus selection is the lowest irreducible in encoding order") {
    CHECK(Field(3, 2).modulus_enc() == 10);  // x^2 + 1
    CHECK(Field(3, 3).modulus_enc() == 34);  // x^3 + 2x + 1
    CHECK(Field(5, 2).modulus_enc() == 27);  // x^2 + 2
    CHECK(Field(7, 2).modulus_enc() == 50);  // x^2 + 1
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(4, 1), Error);
    CHECK_THROWS_AS(Field(6, 1), Error);
    CHECK_THROWS_AS(Field(9, 1), Error);
    CHECK_THROWS_AS(Field(3, 0), Error);
    CHECK_THROWS_AS(Field(2, 5), Error);
    try {
        Field(2, 5);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::even_characteristic);
    }
    try {
        Field(15, 1);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_prime);
    }
    try {
        Field(3, 12);  // 3^12 > 2^16
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_out_of_range);
    }
}

TEST_CASE("from_order factors prime powers") {
    Field f = Field::from_order(27);
    CHECK(f.p() == 3);
    CHECK(f.e() == 3);
    CHECK(f.q() == 27);
    CHECK(Field::from_order(49).p() == 7);
    CHECK_THROWS_AS(Field::from_order(15), Error);
    CHECK_THROWS_AS(Field::from_order(12), Error);
    CHECK_THROWS_AS(Field::from_order(1), Error);
}

TEST_CASE("element encoding round trip") {
    Field f(3, 3);
    for (uint64_t enc = 0; enc < f.q(); ++enc) {
        Felem a = f.element(enc);
        CHECK(a.v == enc);
        auto cs = f.coeffs(a);
        REQUIRE(cs.size() == 3);
        uint64_t back = cs[0] + 3 * cs[1] + 9 * cs[2];
        CHECK(back == enc);
    }
    CHECK_THROWS_AS(f.element(27), Error);
}

TEST_CASE("field axioms hold exhaustively in GF(27)") {
    Field f(3, 3);
    auto els = f.elements();
    REQUIRE(els.size() == 27);
    for (Felem a : els)
        for (Felem b : els) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(f.add(a, b), b) == a);
            for (Felem c : els) {
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
}

TEST_CASE("inverses and powers") {
    for (uint64_t q : {9ULL, 27ULL, 25ULL, 49ULL, 81ULL}) {
        Field f = Field::from_order(q);
        for (Felem a : f.elements()) {
            if (a == f.zero()) continue;
            CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.pow(a, q - 1) == f.one());
            CHECK(f.div(f.one(), a) == f.inv(a));
        }
        CHECK(f.pow(f.zero(), 0) == f.one());
        CHECK(f.pow(f.zero(), 5) == f.zero());
        CHECK_THROWS_AS(f.inv(f.zero()), Error);
        CHECK_THROWS_AS(f.div(f.one(), f.zero()), Error);
    }
}

TEST_CASE("legendre character") {
    Field f3(3, 1);
    CHECK(f3.legendre(f3.zero()) == 0);
    CHECK(f3.legendre(f3.one()) == 1);
    CHECK(f3.legendre(f3.element(2)) == -1);

    for (uint64_t q : {9ULL, 25ULL, 27ULL, 49ULL}) {
        Field f = Field::from_order(q);
        int plus = 0, minus = 0;
        for (Felem a : f.elements()) {
            if (a == f.zero()) continue;
            int chi = f.legendre(a);
            (chi == 1 ? plus : minus)++;
            // multiplicativity against squares
            CHECK(f.legendre(f.mul(a, a)) == 1);
        }
        CHECK(plus == (int)((q - 1) / 2));
        CHECK(minus == (int)((q - 1) / 2));
        for (Felem a : f.elements())
            for (Felem b : f.elements())
                CHECK(f.legendre(f.mul(a, b)) == f.legendre(a) * f.legendre(b));
    }
}

TEST_CASE("lowest nonsquare") {
    Field f3(3, 1);
    CHECK(f3.lowest_nonsquare() == f3.element(2));
    Field f9(3, 2);
    CHECK(f9.legendre(f9.lowest_nonsquare()) == -1);
    for (uint64_t enc = 1; enc < f9.lowest_nonsquare().v; ++enc)
        CHECK(f9.legendre(f9.element(enc)) == 1);
}

TEST_CASE("large extension fields build") {
    Field f = Field::from_order(19683);  // 3^9
    CHECK(f.e() == 9);
    Felem a = f.element(5), b = f.element(19682);
    CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.sub(f.add(a, b), b) == a);
    CHECK(f.pow(b, f.q() - 1) == f.one());
}

}  // TEST_SUITE
