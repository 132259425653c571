#include "doctest.h"

#include <stdexcept>

#include "picdisc/fq.hpp"
#include "picdisc/picard.hpp"

using namespace picdisc;

namespace {

LaurentPoly tp(const FieldPtr& k, std::int64_t e) { return LaurentPoly::t_power(k, e); }

FqPoly poly(const FieldPtr& k, const std::vector<std::uint64_t>& codes) {
    std::vector<FqElem> cs;
    for (const auto c : codes) cs.push_back(k->from_code(c));
    return FqPoly(k, cs);
}

} // namespace

TEST_CASE("logarithmic derivative of t") {
    const FieldPtr k = FqField::make(2, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    const auto ld = log_derivative(d, tp(k, 1));
    CHECK(ld.value.coeff(0) == LaurentPoly::one(k));
    CHECK(ld.value.coeff(1) == tp(k, -1));
    REQUIRE(ld.argument.has_value());
    CHECK(*ld.argument == tp(k, 1));

    CHECK_THROWS_WITH_AS(log_derivative(d, tp(k, 1) + LaurentPoly::one(k)), "not in L_A",
                         std::domain_error);
    CHECK_THROWS_AS(log_derivative(d, LaurentPoly::zero(k)), std::invalid_argument);
}

TEST_CASE("unit log subgroup") {
    const FieldPtr k2 = FqField::make(2, 1);
    const auto g2 = unit_log_group(HigherDerivation::standard(k2, 1));
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == TruncElem<LaurentPoly>::one(LaurentPoly::one(k2), 1));
    CHECK(g2[1] == TruncElem<LaurentPoly>({LaurentPoly::one(k2), tp(k2, -1)}));

    const FieldPtr k3 = FqField::make(3, 1);
    const auto g3 = unit_log_group(HigherDerivation::standard(k3, 1));
    REQUIRE(g3.size() == 3);
    CHECK(g3[1] * g3[1] == g3[2]);
    CHECK(g3[1] * g3[2] == g3[0]);
    CHECK(g3[2].coeff(1) == tp(k3, -1) * k3->from_int(2));
    CHECK(g3[2].coeff(2) == tp(k3, -2));
}

TEST_CASE("order of a disc class") {
    const FieldPtr k2 = FqField::make(2, 1);
    const LaurentPoly one2 = LaurentPoly::one(k2);
    CHECK(class_order(TruncElem<LaurentPoly>::one(one2, 1)) == 1);
    CHECK(class_order(TruncElem<LaurentPoly>({one2, tp(k2, -1)})) == 1);
    CHECK(class_order(TruncElem<LaurentPoly>({one2, one2})) == 2);
    CHECK(class_order(TruncElem<LaurentPoly>({one2, tp(k2, 2)})) == 2);
    CHECK(class_order(TruncElem<LaurentPoly>({one2, one2, one2, one2})) == 4);

    const FieldPtr k3 = FqField::make(3, 1);
    const LaurentPoly one3 = LaurentPoly::one(k3);
    CHECK(class_order(TruncElem<LaurentPoly>({one3, one3, LaurentPoly::zero(k3)})) == 3);

    CHECK_THROWS_WITH_AS(class_order(TruncElem<LaurentPoly>({one2, one2, one2})),
                         "rank must be p^m - 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(class_order(TruncElem<LaurentPoly>({tp(k2, 1), one2})), "c_0 must be 1",
                         std::invalid_argument);
}

TEST_CASE("decomposing unit classes on the disc") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly z = LaurentPoly::var_z(k);
    const LaurentPoly t = tp(k, 1);
    const HigherDerivation d =
        HigherDerivation::standard(k, 1).extend_to_disc(TruncElem<LaurentPoly>({one, one}));

    const auto dz = decompose(d, z);
    REQUIRE(dz.has_value());
    CHECK(dz->j == 1);
    CHECK(dz->i == 0);

    const auto dt = decompose(d, t);
    REQUIRE(dt.has_value());
    CHECK(dt->j == 0);
    CHECK(dt->i == 1);

    const auto dm = decompose(d, t * t * t * z * z);
    REQUIRE(dm.has_value());
    CHECK(dm->j == 0);
    CHECK(dm->i == 1);

    const auto dc = decompose(d, t * z * (t + one) * (t + one));
    REQUIRE(dc.has_value());
    CHECK(dc->j == 1);
    CHECK(dc->i == 1);

    CHECK(!decompose(d, t + z).has_value());
    CHECK(!decompose(d, t + one).has_value());
}

TEST_CASE("principal divisors drop unit factors") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly t = tp(k, 1);
    const LaurentPoly one = LaurentPoly::one(k);

    const auto dv = divisor(t * t * (t + one));
    REQUIRE(dv.terms().size() == 1);
    CHECK(dv.terms().begin()->first == poly(k, {1, 1}));
    CHECK(dv.terms().begin()->second == 1);

    const LaurentPoly f = (t + one) * (t + one) * (t * t + t + one);
    const auto dv2 = divisor(f);
    REQUIRE(dv2.terms().size() == 2);
    CHECK(dv2.terms().at(poly(k, {1, 1})) == 1 + 1);
    CHECK(dv2.terms().at(poly(k, {1, 1, 1})) == 1);

    CHECK(divisor(tp(k, 3)).terms().empty());
    CHECK(divisor(tp(k, -2)) == DivisorOnLaurent(k));
    CHECK(dv + dv2 - dv == dv2);

    CHECK_THROWS_WITH_AS(divisor(LaurentPoly::zero(k)), "zero has no divisor",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(divisor(LaurentPoly::var_z(k)), "divisor requires a z-free element",
                         std::invalid_argument);
}

TEST_CASE("pulling a subring divisor up the power map") {
    const FieldPtr k = FqField::make(2, 1);
    DivisorOnLaurent sub(k);
    sub.add(poly(k, {1, 1}), 1);
    const auto up = ramification_map(sub, 1);
    REQUIRE(up.terms().size() == 1);
    CHECK(up.terms().at(poly(k, {1, 1})) == 2);

    DivisorOnLaurent sub2(k);
    sub2.add(poly(k, {1, 1, 1}), 1);
    const auto up2 = ramification_map(sub2, 1);
    CHECK(up2.terms().at(poly(k, {1, 1, 1})) == 2);

    const FieldPtr k4 = FqField::make(2, 2);
    const FqElem a = k4->gen();
    DivisorOnLaurent sub4(k4);
    sub4.add(FqPoly::variable(k4) + FqPoly::constant(a), 1);
    const auto up4 = ramification_map(sub4, 1);
    REQUIRE(up4.terms().size() == 1);
    const FqPoly descended = up4.terms().begin()->first;
    CHECK(descended * descended ==
          (FqPoly::variable(k4) + FqPoly::constant(a)).subst_t_pow(2));
    CHECK(up4.terms().begin()->second == 2);

    CHECK_THROWS_WITH_AS(ramification_map(sub, 0), "descent depth must be positive",
                         std::invalid_argument);
}

TEST_CASE("descent map kills subring classes") {
    const FieldPtr k = FqField::make(2, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    const TruncElem<LaurentPoly> unit = TruncElem<LaurentPoly>::one(LaurentPoly::one(k), 1);

    CHECK(phi_map(d, DivisorOnLaurent(k)).value == unit);

    DivisorOnLaurent sub(k);
    sub.add(poly(k, {1, 1}), 1);
    const auto im = phi_map(d, sub);
    CHECK(im.value == unit);
    REQUIRE(im.argument.has_value());

    DivisorOnLaurent neg(k);
    neg.add(poly(k, {1, 1}), -1);
    CHECK(phi_map(d, neg).value == unit);

    const FieldPtr k3 = FqField::make(3, 1);
    DivisorOnLaurent sub3(k3);
    sub3.add(poly(k3, {1, 1}), 2);
    sub3.add(poly(k3, {2, 1}), 1);
    CHECK(phi_map(HigherDerivation::standard(k3, 2), sub3).value ==
          TruncElem<LaurentPoly>::one(LaurentPoly::one(k3), 8));
}

TEST_CASE("divisor formatting") {
    const FieldPtr k = FqField::make(2, 1);
    DivisorOnLaurent dv(k);
    CHECK(dv.str() == "0");
    dv.add(poly(k, {1, 1}), 2);
    CHECK(dv.str().find("2") != std::string::npos);
}
