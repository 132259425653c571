#include "doctest.h"

#include <stdexcept>

#include "picdisc/fq.hpp"
#include "picdisc/laurent.hpp"
#include "picdisc/trunc.hpp"

using namespace picdisc;

TEST_CASE("Laurent units invert termwise") {
    const FieldPtr k = FqField::make(3, 1);
    const LaurentPoly u = LaurentPoly::term(k->from_int(2), 3);
    CHECK(u.is_unit());
    CHECK(u.inverse() == LaurentPoly::term(k->from_int(2), -3));
    CHECK(u * u.inverse() == LaurentPoly::one(k));

    const LaurentPoly v = LaurentPoly::t_power(k, 1) + LaurentPoly::one(k);
    CHECK(!v.is_unit());
    CHECK_THROWS_AS(v.inverse(), std::invalid_argument);
    CHECK(!LaurentPoly::var_z(k).is_unit());
}

TEST_CASE("exact division in the Laurent ring") {
    const FieldPtr k = FqField::make(3, 1);
    const LaurentPoly t = LaurentPoly::t_power(k, 1);
    const LaurentPoly z = LaurentPoly::var_z(k);
    const LaurentPoly one = LaurentPoly::one(k);

    SUBCASE("t^2 - 1 over t + 1") {
        const auto q = divide_exact(t * t - one, t + one);
        REQUIRE(q.has_value());
        CHECK(*q == t + LaurentPoly::term(k->from_int(2), 0));
    }

    SUBCASE("negative exponents appear in quotients") {
        const auto q = divide_exact(t + one, t);
        REQUIRE(q.has_value());
        CHECK(*q == one + LaurentPoly::t_power(k, -1));
    }

    SUBCASE("inexact division is detected") {
        CHECK(!divide_exact(t * t + one, t + one).has_value());
        CHECK(!divide_exact(t + z, z).has_value());
    }

    SUBCASE("z divides when every term carries it") {
        const auto q = divide_exact(t * z + z * z, z);
        REQUIRE(q.has_value());
        CHECK(*q == t + z);
    }

    CHECK_THROWS_WITH_AS(divide_exact(one, LaurentPoly::zero(k)), "division by zero",
                         std::invalid_argument);
}

TEST_CASE("shape queries") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly f =
        LaurentPoly::t_power(k, -1) + LaurentPoly::one(k) + LaurentPoly::term(k->one(), 2, 1);
    CHECK(f.has_z());
    CHECK(f.z_degree() == 1);
    CHECK(f.min_t_exp() == -1);
    CHECK(f.z_coeff(0) == LaurentPoly::t_power(k, -1) + LaurentPoly::one(k));
    CHECK(f.z_coeff(1) == LaurentPoly::t_power(k, 2));
    CHECK(f.coeff(-1, 0) == k->one());
    CHECK(f.coeff(5, 0) == k->zero());
    CHECK(LaurentPoly::zero(k).z_degree() == -1);
}

TEST_CASE("bridging to plain polynomials") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly f = LaurentPoly::t_power(k, -1) + LaurentPoly::one(k);
    const auto [g, shift] = f.to_poly_parts();
    CHECK(shift == -1);
    CHECK(g == FqPoly::variable(k) + FqPoly::constant(k->one()));
    CHECK(LaurentPoly::from_poly(g) == LaurentPoly::t_power(k, 1) + LaurentPoly::one(k));
    CHECK_THROWS_AS((f + LaurentPoly::var_z(k)).to_poly_parts(), std::invalid_argument);
}

TEST_CASE("t substitution") {
    const FieldPtr k = FqField::make(3, 1);
    const LaurentPoly f = LaurentPoly::t_power(k, 1) + LaurentPoly::t_power(k, -1);
    CHECK(f.subst_t_pow(2) == LaurentPoly::t_power(k, 2) + LaurentPoly::t_power(k, -2));
    const LaurentPoly g = LaurentPoly::t_power(k, 1) + LaurentPoly::var_z(k);
    CHECK(g.subst_t_pow(3) == LaurentPoly::t_power(k, 3) + LaurentPoly::var_z(k));
}

TEST_CASE("truncated inverse with Laurent coefficients") {
    const FieldPtr k = FqField::make(3, 1);
    const LaurentPoly zero = LaurentPoly::zero(k);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly t = LaurentPoly::t_power(k, 1);

    const TruncElem<LaurentPoly> u({one, t, zero});
    const TruncElem<LaurentPoly> w = u.inv();
    CHECK(w.coeff(0) == one);
    CHECK(w.coeff(1) == t * k->from_int(2));
    CHECK(w.coeff(2) == t * t);
    CHECK(u * w == TruncElem<LaurentPoly>::one(one, 2));

    CHECK_THROWS_WITH_AS(TruncElem<LaurentPoly>({one + t, one}).inv(),
                         "not a unit in truncation", std::invalid_argument);
    CHECK_THROWS_WITH_AS(u + TruncElem<LaurentPoly>({one, t}),
                         "rank mismatch in truncated ring", std::invalid_argument);
}

TEST_CASE("one plus nilpotent has p-power order over F_p") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const TruncElem<LaurentPoly> u({one, one});
    CHECK(u.pow(2) == TruncElem<LaurentPoly>::one(one, 1));
    CHECK(u.pow(0) == TruncElem<LaurentPoly>::one(one, 1));
    CHECK(u.str() == "(1) + (1)*T");
}
