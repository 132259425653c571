#pragma once

#include <cstdint>

#include "picdisc/padic.hpp"
#include "picdisc/power_series.hpp"

namespace picdisc {

/*
 * Formal group data for the distinguished series f(X) = pi*X + X^q over a
 * ramified field. All series builders solve degree by degree against the
 * pivot pi^d - pi, whose valuation is exactly one pi-unit, and re-verify
 * their defining identity before returning.
 */
struct LTData {
    RFieldPtr fld;
    std::uint64_t q = 0;
    std::uint32_t r = 0; // q = p^r
};

LTData lt_make(const RFieldPtr& fld, std::uint64_t q);

// Required base precision (pi-units) for series work at degree cap N.
std::int64_t lt_policy_prec(int deg_cap, std::uint64_t q);

PowSeries lt_frobenius_lift(const LTData& lt, int deg_cap);

// The unique series [a] = a*X + ... commuting with f.
PowSeries lt_endomorphism(const LTData& lt, const RamifiedElem& a, int deg_cap);

// The unique F(X, Y) = X + Y + ... with F(f, f) = f(F).
PowSeries lt_group_law(const LTData& lt, int deg_cap);

// log: log(f(X)) = pi * log(X), log = X + ...
PowSeries lt_log(const LTData& lt, int deg_cap);
// exp: the compositional inverse of log
PowSeries lt_exp(const LTData& lt, int deg_cap);

struct LTScalarCheck {
    PowSeries via_log;
    PowSeries direct;
    bool agree = false;
};

// exp(a * log) against the interpolation of [a]; two independent routes.
LTScalarCheck lt_scalar_via_log(const LTData& lt, const RamifiedElem& a, int deg_cap);

// h(Z) = exp(u * log Z) for a principal unit multiplier u. Verifies the
// twist identity h(Z) = F(Z, exp((u-1) * log Z)) and that exp(u^{-1} log)
// inverts h, and throws std::logic_error on a mismatch.
PowSeries lt_h_series(const LTData& lt, const RamifiedElem& u, int deg_cap);

// v(r_n) = q / (e (q-1) q^{e n})
ValExp lt_radius(const LTData& lt, std::uint32_t n);
// v(r) = q / (e (q-1))
ValExp lt_radius_limit(const LTData& lt);

struct LTValImage {
    ValExp bound;
    bool tie = false;
};

// Valuation of f at a point of positive valuation v: min(1/e + v, q v),
// with the tie flagged.
LTValImage lt_valuation_image(const LTData& lt, const ValExp& v);

} // namespace picdisc
