#include "doctest.h"

#include <stdexcept>

#include "picdisc/encode.hpp"
#include "picdisc/fq.hpp"
#include "picdisc/graded.hpp"
#include "picdisc/laurent.hpp"
#include "picdisc/padic.hpp"
#include "picdisc/trunc.hpp"

using namespace picdisc;

TEST_CASE("Tate polynomial arithmetic") {
    const RFieldPtr K = RamifiedField::qp(2, 40);
    const TateElem a = TateElem::term(K->one(), 0) + TateElem::term(K->one(), 1);
    const TateElem sq = a * a;
    CHECK(sq.coeff(0) == K->one());
    CHECK(sq.coeff(1) == K->from_int(2));
    CHECK(sq.coeff(2) == K->one());
    CHECK(sq.coeff(5) == K->zero());
    CHECK(!a.is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("Gauss-norm degree") {
    const RFieldPtr K = RamifiedField::qp(2, 40);
    const TateElem a = TateElem::term(K->from_int(2), 0) + TateElem::term(K->one(), 1);
    CHECK(spectral_degree(a) == ValExp::from_int(0));
    CHECK(spectral_degree(TateElem::term(K->from_int(2), 1)) == ValExp::from_int(1));

    const RFieldPtr R = RamifiedField::make(2, {-2, 0, 1}, 40);
    const TateElem b = TateElem::term(R->pi(), 0) + TateElem::term(R->pi(2), 1);
    CHECK(spectral_degree(b) == ValExp::make(1, 2));

    CHECK_THROWS_WITH_AS(spectral_degree(TateElem(K)), "zero-indistinguishable at working precision",
                         std::domain_error);
    TateElem fuzzy(K);
    fuzzy.set_coeff(0, (-K->one()).truncated(1) + K->one());
    CHECK_THROWS_WITH_AS(spectral_degree(fuzzy), "zero-indistinguishable at working precision",
                         std::domain_error);
}

TEST_CASE("principal symbols") {
    const RFieldPtr K = RamifiedField::qp(2, 40);
    const FieldPtr F2 = FqField::make(2, 1);

    const TateElem a = TateElem::term(K->from_int(2), 0) + TateElem::term(K->one(), 1);
    const GradedElem ga = principal_symbol(a);
    CHECK(ga.degree == ValExp::from_int(0));
    CHECK(ga.symbol == LaurentPoly::var_z(F2));
    CHECK(ga.symbol.field()->q() == 2);

    const GradedElem gb = principal_symbol(TateElem::term(K->from_int(2), 1));
    CHECK(gb.degree == ValExp::from_int(1));
    CHECK(gb.symbol == LaurentPoly::term(F2->one(), 1, 1));

    const TateElem c = TateElem::term(K->from_int(2), 0) + TateElem::term(K->from_int(2), 1) +
                       TateElem::term(K->from_int(4), 2);
    const GradedElem gc = principal_symbol(c);
    CHECK(gc.degree == ValExp::from_int(1));
    CHECK(gc.symbol == LaurentPoly::t_power(F2, 1) + LaurentPoly::term(F2->one(), 1, 1));

    const RFieldPtr R = RamifiedField::make(2, {-2, 0, 1}, 40);
    const GradedElem gr = principal_symbol(TateElem::term(R->pi(), 0));
    CHECK(gr.degree == ValExp::make(1, 2));
    CHECK(gr.symbol == LaurentPoly::t_power(F2, 1));

    const RFieldPtr K3 = RamifiedField::qp(3, 40);
    const FieldPtr F3 = FqField::make(3, 1);
    const GradedElem g6 = principal_symbol(TateElem::term(K3->from_int(6), 0));
    CHECK(g6.degree == ValExp::from_int(1));
    CHECK(g6.symbol == LaurentPoly::term(F3->from_int(2), 1, 0));

    // symbol of a product is the product of symbols
    const TateElem prod = a * TateElem::term(K->from_int(2), 1);
    const GradedElem gp = principal_symbol(prod);
    CHECK(gp.degree == ga.degree + gb.degree);
    CHECK(gp.symbol == ga.symbol * gb.symbol);
}

TEST_CASE("canonical text for Laurent elements") {
    const FieldPtr F2 = FqField::make(2, 1);
    const FieldPtr F3 = FqField::make(3, 1);

    CHECK(format_laurent(LaurentPoly::t_power(F2, -1) + LaurentPoly::one(F2)) == "1*t^-1 + 1");
    CHECK(format_laurent(LaurentPoly::zero(F2)) == "0");
    CHECK(format_laurent(LaurentPoly::t_power(F2, 1) + LaurentPoly::var_z(F2)) == "1*z + 1*t");
    CHECK(format_laurent(LaurentPoly::term(F3->from_int(2), 2)) == "2*t^2");
    CHECK(format_laurent(LaurentPoly::term(F3->one(), 1, 3)) == "1*t*z^3");
}

TEST_CASE("canonical text for truncations") {
    const FieldPtr F2 = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(F2);
    const LaurentPoly t = LaurentPoly::t_power(F2, 1);

    CHECK(format_trunc(TruncElem<LaurentPoly>({one, LaurentPoly::t_power(F2, -1)})) ==
          "1 + 1*t^-1*T");
    CHECK(format_trunc(TruncElem<LaurentPoly>({one, one + t})) == "1 + (1 + 1*t)*T");
    CHECK(format_trunc(TruncElem<LaurentPoly>({one, LaurentPoly::zero(F2), t * t})) ==
          "1 + 1*t^2*T^2");
    CHECK(format_trunc(TruncElem<LaurentPoly>::one(one, 2)) == "1");
}

TEST_CASE("parsing Laurent elements") {
    const FieldPtr F2 = FqField::make(2, 1);
    const FieldPtr F3 = FqField::make(3, 1);

    CHECK(parse_laurent("1*t^-1 + 1", F2) == LaurentPoly::t_power(F2, -1) + LaurentPoly::one(F2));
    CHECK(parse_laurent("t + z", F2) == LaurentPoly::t_power(F2, 1) + LaurentPoly::var_z(F2));
    CHECK(parse_laurent("1 - t", F3) ==
          LaurentPoly::one(F3) + LaurentPoly::term(F3->from_int(2), 1));
    CHECK(parse_laurent("2*t^2*z", F3) == LaurentPoly::term(F3->from_int(2), 2, 1));

    for (const char* text : {"1*t^-1 + 1", "2*t^2", "1*z + 1*t", "0"}) {
        CHECK(format_laurent(parse_laurent(text, F3)) == text);
    }

    CHECK_THROWS_WITH_AS(parse_laurent("5", F2), "coefficient code out of range",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("t +", F2), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("", F2), std::invalid_argument);
}

TEST_CASE("parsing truncations") {
    const FieldPtr F2 = FqField::make(2, 1);
    const LaurentPoly one = LaurentPoly::one(F2);
    const LaurentPoly t = LaurentPoly::t_power(F2, 1);

    CHECK(parse_trunc("1+T", F2, 1) == TruncElem<LaurentPoly>({one, one}));
    CHECK(parse_trunc("1 + (1 + 1*t)*T", F2, 1) == TruncElem<LaurentPoly>({one, one + t}));
    CHECK(parse_trunc("1 + 1*t^-1*T", F2, 1) ==
          TruncElem<LaurentPoly>({one, LaurentPoly::t_power(F2, -1)}));
    CHECK(parse_trunc("1", F2, 3) == TruncElem<LaurentPoly>::one(one, 3));
    CHECK_THROWS_WITH_AS(parse_trunc("1 + T^2", F2, 1), "T power beyond rank",
                         std::invalid_argument);

    const TruncElem<LaurentPoly> c({one, one + t, t});
    CHECK(parse_trunc(format_trunc(c), F2, 2) == c);
}

TEST_CASE("parsing Tate polynomials and scalars") {
    const RFieldPtr K = RamifiedField::qp(2, 40);
    const TateElem a = parse_tate("2 + pi^2*z", K);
    CHECK(a.coeff(0) == K->from_int(2));
    CHECK(a.coeff(1) == K->from_int(4));
    CHECK(parse_tate("z^2", K).coeff(2) == K->one());
    CHECK(format_tate(TateElem(K)) == "0");

    CHECK(parse_ramified("3*pi^-1", K) == K->from_int(3).mul_pi(-1));
    CHECK(parse_ramified("-1", RamifiedField::qp(3, 40)) ==
          RamifiedField::qp(3, 40)->from_int(-1));
    CHECK_THROWS_WITH_AS(parse_ramified("2 + z", K), "z is not allowed in a scalar",
                         std::invalid_argument);
}
