#include "picdisc/lubin_tate.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace picdisc {

namespace {

// The builders re-verify their identities on every construction; memoize
// per (field, q, cap) so repeated checks against the same data are cheap.
using SeriesKey = std::tuple<const RamifiedField*, std::uint64_t, int, char>;

std::map<SeriesKey, std::pair<RFieldPtr, PowSeries>>& series_cache() {
    static std::map<SeriesKey, std::pair<RFieldPtr, PowSeries>> cache;
    return cache;
}

const PowSeries* cache_find(const LTData& lt, int deg_cap, char tag) {
    auto it = series_cache().find(SeriesKey{lt.fld.get(), lt.q, deg_cap, tag});
    if (it == series_cache().end()) return nullptr;
    return &it->second.second;
}

void cache_store(const LTData& lt, int deg_cap, char tag, const PowSeries& s) {
    series_cache().emplace(SeriesKey{lt.fld.get(), lt.q, deg_cap, tag},
                           std::make_pair(lt.fld, s));
}

void check_policy(const LTData& lt, int deg_cap) {
    if (deg_cap < 1)
        throw std::invalid_argument("degree cap must be positive");
    const std::int64_t need = lt_policy_prec(deg_cap, lt.q);
    if (lt.fld->prec() < need)
        throw std::invalid_argument("precision policy violated: need " +
                                    std::to_string(need) + " pi-digits, field has " +
                                    std::to_string(lt.fld->prec()));
}

RamifiedElem pivot_inverse(const LTData& lt, int d) {
    const RamifiedElem pi = lt.fld->pi();
    return (pi.pow(d) - pi).inverse();
}

} // namespace

LTData lt_make(const RFieldPtr& fld, std::uint64_t q) {
    if (!fld)
        throw std::invalid_argument("formal group needs a field");
    if (q < 2)
        throw std::invalid_argument("q must be at least 2");
    std::uint64_t v = q;
    std::uint32_t r = 0;
    while (v % fld->p() == 0) {
        v /= fld->p();
        ++r;
    }
    if (v != 1 || r == 0)
        throw std::invalid_argument("q must be a power of the residue characteristic");
    return LTData{fld, q, r};
}

std::int64_t lt_policy_prec(int deg_cap, std::uint64_t q) {
    const std::int64_t n = deg_cap;
    const std::int64_t qm1 = static_cast<std::int64_t>(q) - 1;
    return n * (1 + (n + qm1 - 1) / qm1);
}

PowSeries lt_frobenius_lift(const LTData& lt, int deg_cap) {
    check_policy(lt, deg_cap);
    PowSeries f(lt.fld, 1, deg_cap);
    f.set_coeff({1, 0, 0}, lt.fld->pi());
    if (lt.q <= static_cast<std::uint64_t>(deg_cap))
        f.set_coeff({static_cast<int>(lt.q), 0, 0}, lt.fld->one());
    return f;
}

PowSeries lt_endomorphism(const LTData& lt, const RamifiedElem& a, int deg_cap) {
    check_policy(lt, deg_cap);
    if (!a.attached() || !a.field()->same(*lt.fld))
        throw std::invalid_argument("multiplier from wrong field");
    if (!a.is_integral())
        throw std::invalid_argument("multiplier must be integral");
    const PowSeries f = lt_frobenius_lift(lt, deg_cap);
    const RamifiedElem pi = lt.fld->pi();

    PowSeries phi = PowSeries::variable(lt.fld, 1, 0, deg_cap).scaled(a);
    for (int d = 2; d <= deg_cap; ++d) {
        const PowSeries lhs = phi.scaled(pi) + phi.pow_trunc(lt.q); // f(phi)
        const PowSeries rhs = phi.subst({f});                       // phi(f)
        const RamifiedElem delta = (lhs - rhs).coeff1(d);
        phi.set_coeff({d, 0, 0}, delta * pivot_inverse(lt, d));
    }
    const PowSeries lhs = phi.scaled(pi) + phi.pow_trunc(lt.q);
    if (lhs != phi.subst({f}))
        throw std::logic_error("endomorphism does not commute with f");
    return phi;
}

PowSeries lt_group_law(const LTData& lt, int deg_cap) {
    check_policy(lt, deg_cap);
    if (const PowSeries* hit = cache_find(lt, deg_cap, 'F')) return *hit;
    const PowSeries f = lt_frobenius_lift(lt, deg_cap);
    const PowSeries fx = f.promoted(2, {0});
    const PowSeries fy = f.promoted(2, {1});
    const RamifiedElem pi = lt.fld->pi();

    PowSeries F = PowSeries::variable(lt.fld, 2, 0, deg_cap) +
                  PowSeries::variable(lt.fld, 2, 1, deg_cap);
    for (int d = 2; d <= deg_cap; ++d) {
        const PowSeries lhs = F.subst({fx, fy});           // F(f(X), f(Y))
        const PowSeries rhs = F.scaled(pi) + F.pow_trunc(lt.q); // f(F)
        const PowSeries diff = lhs - rhs;
        const RamifiedElem piv = pivot_inverse(lt, d);
        for (int i = 0; i <= d; ++i) {
            const RamifiedElem x = -(diff.coeff({i, d - i, 0}) * piv);
            F.set_coeff({i, d - i, 0}, F.coeff({i, d - i, 0}) + x);
        }
    }
    if (F.subst({fx, fy}) != F.scaled(pi) + F.pow_trunc(lt.q))
        throw std::logic_error("group law does not intertwine f");
    cache_store(lt, deg_cap, 'F', F);
    return F;
}

PowSeries lt_log(const LTData& lt, int deg_cap) {
    check_policy(lt, deg_cap);
    if (const PowSeries* hit = cache_find(lt, deg_cap, 'L')) return *hit;
    const PowSeries f = lt_frobenius_lift(lt, deg_cap);
    const RamifiedElem pi = lt.fld->pi();

    PowSeries L = PowSeries::variable(lt.fld, 1, 0, deg_cap);
    for (int d = 2; d <= deg_cap; ++d) {
        const RamifiedElem delta = (L.subst({f}) - L.scaled(pi)).coeff1(d);
        L.set_coeff({d, 0, 0}, -(delta * pivot_inverse(lt, d)));
    }
    if (L.subst({f}) != L.scaled(pi))
        throw std::logic_error("log does not linearize f");
    cache_store(lt, deg_cap, 'L', L);
    return L;
}

PowSeries lt_exp(const LTData& lt, int deg_cap) {
    check_policy(lt, deg_cap);
    if (const PowSeries* hit = cache_find(lt, deg_cap, 'E')) return *hit;
    const PowSeries L = lt_log(lt, deg_cap);
    const PowSeries x = PowSeries::variable(lt.fld, 1, 0, deg_cap);

    PowSeries E = x;
    for (int d = 2; d <= deg_cap; ++d) {
        const RamifiedElem delta = (L.subst({E}) - x).coeff1(d);
        E.set_coeff({d, 0, 0}, -delta);
    }
    if (L.subst({E}) != x || E.subst({L}) != x)
        throw std::logic_error("exp does not invert log");
    cache_store(lt, deg_cap, 'E', E);
    return E;
}

LTScalarCheck lt_scalar_via_log(const LTData& lt, const RamifiedElem& a, int deg_cap) {
    check_policy(lt, deg_cap);
    const PowSeries L = lt_log(lt, deg_cap);
    const PowSeries E = lt_exp(lt, deg_cap);
    LTScalarCheck out{E.subst({L.scaled(a)}), lt_endomorphism(lt, a, deg_cap), false};
    out.agree = out.via_log == out.direct;
    return out;
}

PowSeries lt_h_series(const LTData& lt, const RamifiedElem& u, int deg_cap) {
    check_policy(lt, deg_cap);
    if (!u.attached() || !u.field()->same(*lt.fld))
        throw std::invalid_argument("multiplier from wrong field");
    if (u.is_zero() || !u.is_unit())
        throw std::invalid_argument("u must be a unit");
    const RamifiedElem level = u - u.one_like();
    if (!level.is_zero() && !(ValExp::from_int(0) < level.valuation()))
        throw std::invalid_argument("u - 1 must have positive valuation");

    const PowSeries L = lt_log(lt, deg_cap);
    const PowSeries E = lt_exp(lt, deg_cap);
    const PowSeries H = E.subst({L.scaled(u)});

    // twist identity: h(Z) = F(Z, exp((u-1) log Z))
    const PowSeries F = lt_group_law(lt, deg_cap);
    const PowSeries zvar = PowSeries::variable(lt.fld, 1, 0, deg_cap);
    const PowSeries tail = E.subst({L.scaled(level)});
    if (H != F.subst({zvar, tail}))
        throw std::logic_error("interpolation identity failed: group twist");

    const PowSeries Hinv = E.subst({L.scaled(u.inverse())});
    if (H.subst({Hinv}) != zvar || Hinv.subst({H}) != zvar)
        throw std::logic_error("interpolation identity failed: inverse");
    return H;
}

ValExp lt_radius(const LTData& lt, std::uint32_t n) {
    const std::int64_t e = lt.fld->e();
    const std::int64_t q = static_cast<std::int64_t>(lt.q);
    std::int64_t qen = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(e) * n; ++i) {
        if (qen > (std::int64_t{1} << 55) / q)
            throw std::invalid_argument("radius level too deep");
        qen *= q;
    }
    return ValExp::make(q, e * (q - 1) * qen);
}

ValExp lt_radius_limit(const LTData& lt) {
    const std::int64_t e = lt.fld->e();
    const std::int64_t q = static_cast<std::int64_t>(lt.q);
    return ValExp::make(q, e * (q - 1));
}

LTValImage lt_valuation_image(const LTData& lt, const ValExp& v) {
    if (!(ValExp::from_int(0) < v))
        throw std::invalid_argument("valuation must be positive");
    const ValExp shifted = v + ValExp::make(1, lt.fld->e());
    const ValExp scaled = v.scaled(static_cast<std::int64_t>(lt.q));
    LTValImage out{val_min(shifted, scaled), shifted == scaled};
    return out;
}

} // namespace picdisc
