#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "picdisc/fq.hpp"

using namespace picdisc;

TEST_CASE("default moduli are the first irreducibles in code order") {
    CHECK(FqField::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(FqField::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FqField::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(FqField::make(5, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("field construction validation") {
    CHECK_THROWS_AS(FqField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FqField::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FqField::make(2, 7), std::invalid_argument); // beyond the default table
    CHECK_THROWS_AS(FqField::make(2, std::vector<std::uint32_t>{1, 0, 1}),
                    std::invalid_argument); // x^2+1 = (x+1)^2 over F_2
    CHECK(FqField::make(2, std::vector<std::uint32_t>{1, 1, 1})->same(*FqField::make(2, 2)));
}

TEST_CASE("prime field arithmetic") {
    const FieldPtr k = FqField::make(3, 1);
    CHECK(k->from_int(-1) == k->from_code(2));
    CHECK(k->from_int(2) + k->from_int(2) == k->one());
    CHECK(k->from_int(2) * k->from_int(2) == k->one());
    CHECK(k->from_int(2).inverse() == k->from_int(2));
    CHECK_THROWS_AS(k->gen(), std::invalid_argument);
    CHECK_THROWS_AS(k->zero().inverse(), std::invalid_argument);
}

TEST_CASE("F4 multiplication table through the generator") {
    const FieldPtr k = FqField::make(2, 2);
    const FqElem a = k->gen();
    CHECK(a * a == a + k->one());           // a^2 = a + 1
    CHECK(a * (a + k->one()) == k->one());  // inverse pair
    CHECK(a.inverse() == a + k->one());
    CHECK(a.pow(3) == k->one());
    CHECK(a.frobenius() == a + k->one());
    CHECK(a.frobenius().frobenius() == a);
    CHECK(a.frobenius_inverse() == a + k->one()); // frobenius has order 2
}

TEST_CASE("F9 generator squares to -1") {
    const FieldPtr k = FqField::make(3, 2);
    const FqElem i = k->gen();
    CHECK(i * i == k->from_int(-1));
    CHECK(i.pow(8) == k->one());
    CHECK(i.pow(4) == k->one());
    CHECK(i.inverse() == k->from_int(2) * i);
    for (std::uint64_t code = 0; code < k->q(); ++code) {
        const FqElem x = k->from_code(code);
        CHECK(x.code() == code);
        CHECK(x.frobenius_inverse().frobenius() == x);
        CHECK(x.pow(9) == x);
    }
}

TEST_CASE("cross-field operations are rejected") {
    const FieldPtr k2 = FqField::make(2, 1);
    const FieldPtr k3 = FqField::make(3, 1);
    CHECK_THROWS_AS(k2->one() + k3->one(), std::invalid_argument);
}
