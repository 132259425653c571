#include "doctest.h"

#include <vector>

#include "picdisc/fq.hpp"
#include "picdisc/fq_poly.hpp"

using namespace picdisc;

namespace {

FqPoly from_codes(const FieldPtr& k, const std::vector<std::uint64_t>& codes) {
    std::vector<FqElem> cs;
    cs.reserve(codes.size());
    for (const auto c : codes) cs.push_back(k->from_code(c));
    return FqPoly(k, cs);
}

} // namespace

TEST_CASE("division with remainder over F2") {
    const FieldPtr k = FqField::make(2, 1);
    const FqPoly num = from_codes(k, {1, 1, 0, 1}); // t^3 + t + 1
    const FqPoly den = from_codes(k, {1, 1});       // t + 1
    const auto [q, r] = num.divmod(den);
    CHECK(q == from_codes(k, {0, 1, 1})); // t^2 + t
    CHECK(r == from_codes(k, {1}));
    CHECK(q * den + r == num);
    CHECK_THROWS_AS(num.divmod(FqPoly(k, {})), std::invalid_argument);
}

TEST_CASE("gcd over F2") {
    const FieldPtr k = FqField::make(2, 1);
    const FqPoly a = from_codes(k, {1, 0, 1}); // t^2 + 1 = (t+1)^2
    const FqPoly b = from_codes(k, {1, 1});
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(b, FqPoly(k, {})) == b);
}

TEST_CASE("powmod reproduces the Frobenius fixed points of F4") {
    const FieldPtr k = FqField::make(2, 1);
    const FqPoly mod = from_codes(k, {1, 1, 1}); // t^2 + t + 1
    const FqPoly t = FqPoly::variable(k);
    CHECK(poly_powmod(t, mpz_class(4), mod) == t);
    CHECK(poly_powmod(t, mpz_class(2), mod) == from_codes(k, {1, 1}));
}

TEST_CASE("factorization over F2") {
    const FieldPtr k = FqField::make(2, 1);

    SUBCASE("t^2 + t splits into the two linear primes") {
        const auto fac = poly_factor(from_codes(k, {0, 1, 1}));
        CHECK(fac.unit == k->one());
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].first == FqPoly::variable(k));
        CHECK(fac.factors[0].second == 1);
        CHECK(fac.factors[1].first == from_codes(k, {1, 1}));
        CHECK(fac.factors[1].second == 1);
    }

    SUBCASE("t^2 + 1 is a square") {
        const auto fac = poly_factor(from_codes(k, {1, 0, 1}));
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first == from_codes(k, {1, 1}));
        CHECK(fac.factors[0].second == 2);
    }

    SUBCASE("t^4 + t + 1 is irreducible") {
        const auto fac = poly_factor(from_codes(k, {1, 1, 0, 0, 1}));
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].second == 1);
        CHECK(fac.factors[0].first.degree() == 4);
    }

    SUBCASE("mixed multiplicities") {
        const FqPoly g = from_codes(k, {1, 1}) * from_codes(k, {1, 1}) * from_codes(k, {1, 1, 1});
        const auto fac = poly_factor(g);
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].first == from_codes(k, {1, 1}));
        CHECK(fac.factors[0].second == 2);
        CHECK(fac.factors[1].first == from_codes(k, {1, 1, 1}));
        CHECK(fac.factors[1].second == 1);
    }
}

TEST_CASE("factorization over F3 tracks the leading unit") {
    const FieldPtr k = FqField::make(3, 1);

    SUBCASE("t^2 + 2 = (t+1)(t+2)") {
        const auto fac = poly_factor(from_codes(k, {2, 0, 1}));
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].first == from_codes(k, {1, 1}));
        CHECK(fac.factors[1].first == from_codes(k, {2, 1}));
    }

    SUBCASE("t^2 + 1 stays prime") {
        const auto fac = poly_factor(from_codes(k, {1, 0, 1}));
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first.degree() == 2);
    }

    SUBCASE("unit is the leading coefficient") {
        const auto fac = poly_factor(from_codes(k, {2, 2}));
        CHECK(fac.unit == k->from_code(2));
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first == from_codes(k, {1, 1}));
    }
}

TEST_CASE("factorization is deterministic across seeds") {
    const FieldPtr k = FqField::make(3, 2);
    FqPoly g = FqPoly::constant(k->gen());
    g = g * from_codes(k, {1, 1}) * from_codes(k, {4, 1}) * from_codes(k, {1, 0, 1});
    const auto a = poly_factor(g, 1);
    const auto b = poly_factor(g, 999);
    CHECK(a.unit == b.unit);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
    FqPoly rebuilt = FqPoly::constant(a.unit);
    for (const auto& [pr, mult] : a.factors)
        for (std::uint32_t e = 0; e < mult; ++e) rebuilt = rebuilt * pr;
    CHECK(rebuilt == g);
}

TEST_CASE("descending a polynomial along the p^m power map") {
    const FieldPtr k4 = FqField::make(2, 2);
    const FqElem a = k4->gen();
    const FqPoly g = FqPoly::variable(k4) + FqPoly::constant(a);
    const FqPoly h = frobenius_descend(g, 1);
    CHECK(h == FqPoly::variable(k4) + FqPoly::constant(a + k4->one()));
    CHECK(h * h == g.subst_t_pow(2));
}

TEST_CASE("substitution and evaluation") {
    const FieldPtr k = FqField::make(3, 1);
    const FqPoly g = from_codes(k, {1, 2, 1}); // (t+1)^2
    CHECK(g.eval(k->from_int(2)) == k->zero());
    CHECK(g.subst_t_pow(2) == from_codes(k, {1, 0, 2, 0, 1}));
    CHECK(g.derivative() == from_codes(k, {2, 2}));
    CHECK(g.monic() == g);
}
