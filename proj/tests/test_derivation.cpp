#include "doctest.h"

#include <stdexcept>

#include "picdisc/derivation.hpp"
#include "picdisc/fq.hpp"
#include "picdisc/laurent.hpp"
#include "picdisc/trunc.hpp"

using namespace picdisc;

namespace {

LaurentPoly tp(const FieldPtr& k, std::int64_t e) { return LaurentPoly::t_power(k, e); }

} // namespace

TEST_CASE("standard derivation on monomials over F3") {
    const FieldPtr k = FqField::make(3, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    CHECK(d.rank() == 2);
    CHECK(d.index() == 3);
    CHECK(!d.extended());

    const auto sq = d.apply(tp(k, 2));
    CHECK(sq.coeff(0) == tp(k, 2));
    CHECK(sq.coeff(1) == tp(k, 1) * k->from_int(2));
    CHECK(sq.coeff(2) == LaurentPoly::one(k));

    const auto mixed = d.apply(tp(k, 1) + tp(k, 2));
    CHECK(mixed.coeff(0) == tp(k, 1) + tp(k, 2));
    CHECK(mixed.coeff(1) == LaurentPoly::one(k) + tp(k, 1) * k->from_int(2));
    CHECK(mixed.coeff(2) == LaurentPoly::one(k));

    const auto neg = d.apply(tp(k, -1));
    CHECK(neg.coeff(0) == tp(k, -1));
    CHECK(neg.coeff(1) == tp(k, -2) * k->from_int(2));
    CHECK(neg.coeff(2) == tp(k, -3));
}

TEST_CASE("standard derivation on a negative power over F2") {
    const FieldPtr k = FqField::make(2, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    const auto img = d.apply(tp(k, -1));
    CHECK(img.coeff(0) == tp(k, -1));
    CHECK(img.coeff(1) == tp(k, -2));
}

TEST_CASE("p-th powers are constants at rank p-1") {
    const FieldPtr k = FqField::make(3, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    CHECK(d.is_constant(tp(k, 3)));
    CHECK(d.is_constant(tp(k, -3)));
    CHECK(d.is_constant(LaurentPoly::one(k) + tp(k, 3)));
    CHECK(!d.is_constant(tp(k, 1)));
    CHECK(!d.is_constant(tp(k, 2)));

    const HigherDerivation d2 = HigherDerivation::standard(k, 2);
    CHECK(!d2.is_constant(tp(k, 3)));
    CHECK(d2.is_constant(tp(k, 9)));
}

TEST_CASE("multiplicativity on fixed pairs") {
    const FieldPtr k = FqField::make(3, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);
    CHECK(d.convolution_check(tp(k, 1) + LaurentPoly::one(k), tp(k, 2)));
    CHECK(d.convolution_check(tp(k, -2), tp(k, 2) + tp(k, 5)));
    const auto prod = d.apply(tp(k, 1)) * d.apply(tp(k, 1));
    CHECK(prod == d.apply(tp(k, 2)));
}

TEST_CASE("extending to the disc with a trivial datum") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly z = LaurentPoly::var_z(k);
    const HigherDerivation d =
        HigherDerivation::standard(k, 1).extend_to_disc(TruncElem<LaurentPoly>::one(one, 1));
    CHECK(d.extended());
    const auto img = d.apply(z);
    CHECK(img.coeff(0) == z);
    CHECK(img.coeff(1) == LaurentPoly::zero(k));
    CHECK(d.is_constant(z));
}

TEST_CASE("extending with datum 1 + T") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly z = LaurentPoly::var_z(k);
    const LaurentPoly t = tp(k, 1);
    const TruncElem<LaurentPoly> c({one, one});
    const HigherDerivation d = HigherDerivation::standard(k, 1).extend_to_disc(c);
    CHECK(d.z_datum() == c);

    const auto img = d.apply(z);
    CHECK(img.coeff(0) == z);
    CHECK(img.coeff(1) == z);

    // c^2 = 1 at rank 1, so z^2 is constant
    const auto img2 = d.apply(z * z);
    CHECK(img2.coeff(0) == z * z);
    CHECK(img2.coeff(1) == LaurentPoly::zero(k));

    const auto imgtz = d.apply(t * z);
    CHECK(imgtz.coeff(0) == t * z);
    CHECK(imgtz.coeff(1) == (t + one) * z);

    CHECK(d.convolution_check(t + z, t * z));
}

TEST_CASE("datum 1 + t^{-1}T makes tz a constant") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly z = LaurentPoly::var_z(k);
    const TruncElem<LaurentPoly> c({one, tp(k, -1)});
    const HigherDerivation d = HigherDerivation::standard(k, 1).extend_to_disc(c);

    const auto img = d.apply(tp(k, 1) * z);
    CHECK(img.coeff(0) == tp(k, 1) * z);
    CHECK(img.coeff(1) == LaurentPoly::zero(k));
    CHECK(d.is_constant(tp(k, 1) * z));
    CHECK(!d.is_constant(z));
}

TEST_CASE("subring index certificate") {
    const FieldPtr k3 = FqField::make(3, 1);
    const auto r1 = HigherDerivation::standard(k3, 1).hyp_check(3);
    CHECK(r1.mu == 1);
    CHECK(r1.n == 1);
    CHECK(r1.holds);

    const FieldPtr k2 = FqField::make(2, 1);
    const auto r2 = HigherDerivation::standard(k2, 2).hyp_check(4);
    CHECK(r2.mu == 1);
    CHECK(r2.n == 2);
    CHECK(r2.holds);

    const auto bad = HigherDerivation::standard(k3, 1).hyp_check(2);
    CHECK(bad.mu == 1);
    CHECK(bad.n == 1);
    CHECK(!bad.holds);

    const LaurentPoly one = LaurentPoly::one(k2);
    const auto ext = HigherDerivation::standard(k2, 1)
                         .extend_to_disc(TruncElem<LaurentPoly>::one(one, 1))
                         .hyp_check(2);
    CHECK(ext.holds);
}

TEST_CASE("derivation construction errors") {
    const FieldPtr k = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(k);
    const LaurentPoly t = tp(k, 1);
    const HigherDerivation d = HigherDerivation::standard(k, 1);

    CHECK_THROWS_WITH_AS(HigherDerivation::standard(k, 0), "depth must be positive",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(d.apply(LaurentPoly::var_z(k)),
                         "element uses z but derivation has no z image", std::invalid_argument);
    CHECK_THROWS_WITH_AS(d.z_datum(), "derivation is not extended to the disc",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(d.extend_to_disc(TruncElem<LaurentPoly>({t, one})), "c_0 must be 1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(d.extend_to_disc(TruncElem<LaurentPoly>({one, one, one})),
                         "rank mismatch in truncated ring", std::invalid_argument);
    CHECK_THROWS_WITH_AS(d.extend_to_disc(TruncElem<LaurentPoly>({one, LaurentPoly::var_z(k)})),
                         "disc datum must be z-free", std::invalid_argument);
}
