#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace picdisc {

// Exact rational valuation. Field valuations always have denominator
// dividing the ramification index; radii in the disc towers need other
// denominators, so this is kept fully general.
struct ValExp {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static ValExp make(std::int64_t n, std::int64_t d);
    static ValExp from_int(std::int64_t n) { return ValExp{n, 1}; }

    ValExp operator+(const ValExp& o) const;
    ValExp operator-(const ValExp& o) const;
    ValExp scaled(std::int64_t k) const;       // k * this
    ValExp divided(std::int64_t k) const;      // this / k

    bool operator==(const ValExp& o) const { return num == o.num && den == o.den; }
    bool operator!=(const ValExp& o) const { return !(*this == o); }
    bool operator<(const ValExp& o) const;
    bool operator<=(const ValExp& o) const { return *this < o || *this == o; }
    bool operator>(const ValExp& o) const { return o < *this; }
    bool operator>=(const ValExp& o) const { return o <= *this; }

    std::string str() const;
};

ValExp val_min(const ValExp& a, const ValExp& b);

class RamifiedField;
class RamifiedElem;
using RFieldPtr = std::shared_ptr<const RamifiedField>;

/*
 * Totally ramified extension of Q_p cut out by a monic Eisenstein polynomial
 * E of degree e, with uniformizer pi. Elements are stored on the power basis
 * 1, pi, ..., pi^{e-1} with integer digits modulo a fixed p-power, plus a
 * pi-shift and an absolute precision. The field fixes the maximal relative
 * precision (in pi-units) any element may claim.
 */
class RamifiedField : public std::enable_shared_from_this<RamifiedField> {
public:
    static RFieldPtr make(std::uint32_t p, std::vector<std::int64_t> eisenstein,
                          std::int64_t prec);
    // Q_p itself, as the Eisenstein polynomial X - p.
    static RFieldPtr qp(std::uint32_t p, std::int64_t prec);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::int64_t prec() const { return prec_; }
    const std::vector<std::int64_t>& eisenstein() const { return eis_; }
    std::int64_t digit_cap() const { return kcap_; }
    const mpz_class& p_cap() const { return pcap_; }

    RamifiedElem zero() const;
    RamifiedElem one() const;
    RamifiedElem from_int(std::int64_t v) const;
    RamifiedElem from_mpz(const mpz_class& v) const;
    RamifiedElem pi(std::int64_t k = 1) const;
    // pi^shift * (digits on the power basis), known modulo pi^nabs
    RamifiedElem make_elem(std::int64_t shift, std::vector<mpz_class> digits,
                           std::int64_t nabs) const;

    bool same(const RamifiedField& o) const {
        return p_ == o.p_ && eis_ == o.eis_ && prec_ == o.prec_;
    }

private:
    RamifiedField(std::uint32_t p, std::vector<std::int64_t> eis, std::int64_t prec);

    // digit-vector plumbing, all modulo p^kcap
    std::vector<mpz_class> vec_mul(const std::vector<mpz_class>& a,
                                   const std::vector<mpz_class>& b) const;
    std::vector<mpz_class> vec_mul_pi(std::vector<mpz_class> a) const;
    std::vector<mpz_class> vec_div_pi(const std::vector<mpz_class>& a) const;
    std::vector<mpz_class> vec_inv(const std::vector<mpz_class>& a) const;
    std::int64_t vec_val(const std::vector<mpz_class>& a, std::int64_t bound) const;
    void vec_reduce(std::vector<mpz_class>& a) const;

    std::uint32_t p_;
    std::uint32_t e_;
    std::vector<std::int64_t> eis_; // length e+1, monic
    std::int64_t prec_;
    std::int64_t kcap_;
    mpz_class pcap_;                   // p^kcap
    std::vector<mpz_class> p_over_pi_; // digits of p/pi

    friend class RamifiedElem;
};

class RamifiedElem {
public:
    RamifiedElem() = default;

    const RFieldPtr& field() const { return fld_; }
    bool attached() const { return static_cast<bool>(fld_); }

    // zero at the tracked precision (exactly constructed zeros included)
    bool is_zero() const { return zero_; }
    bool exact_zero() const;
    std::int64_t abs_prec() const { return nabs_; }
    std::int64_t rel_prec() const { return zero_ ? 0 : nabs_ - shift_; }
    // valuation in pi-units; only meaningful for visibly nonzero elements
    std::int64_t shift() const;
    const std::vector<mpz_class>& unit_digits() const { return u_; }

    ValExp valuation() const;
    bool is_unit() const { return !zero_ && shift_ == 0; }
    bool is_integral() const { return zero_ ? nabs_ >= 0 : shift_ >= 0; }

    RamifiedElem operator+(const RamifiedElem& o) const;
    RamifiedElem operator-(const RamifiedElem& o) const;
    RamifiedElem operator-() const;
    RamifiedElem operator*(const RamifiedElem& o) const;
    RamifiedElem inverse() const;
    RamifiedElem pow(std::int64_t n) const;
    RamifiedElem mul_pi(std::int64_t k) const; // times pi^k

    RamifiedElem truncated(std::int64_t nabs) const;

    // equality at the joint precision
    bool operator==(const RamifiedElem& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RamifiedElem& o) const { return !(*this == o); }

    // residue of a unit: constant digit mod p
    std::uint32_t unit_residue() const;

    RamifiedElem zero_like() const;
    RamifiedElem one_like() const;

    std::string str() const;

    static constexpr std::int64_t kExactPrec = std::int64_t{1} << 40;

private:
    RamifiedElem(RFieldPtr fld, bool zero, std::int64_t shift,
                 std::vector<mpz_class> u, std::int64_t nabs)
        : fld_(std::move(fld)), zero_(zero), shift_(shift), u_(std::move(u)), nabs_(nabs) {}

    void check_compatible(const RamifiedElem& o) const;

    RFieldPtr fld_;
    bool zero_ = true;
    std::int64_t shift_ = 0;
    std::vector<mpz_class> u_;
    std::int64_t nabs_ = 0;

    friend class RamifiedField;
};

} // namespace picdisc
