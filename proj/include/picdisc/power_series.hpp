#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "picdisc/padic.hpp"

namespace picdisc {

/*
 * Multivariate power series over a ramified field, truncated at a total
 * degree cap. One to three variables; the third exists for associativity
 * style identities. Coefficients are dense over the monomial basis of the
 * cap; exactly-zero coefficients are skipped during multiplication, while
 * zero-at-precision coefficients still propagate their precision.
 */
class PowSeries {
public:
    using Exps = std::array<int, 3>; // unused variables hold exponent 0

    PowSeries(RFieldPtr fld, int nvars, int cap); // zero series
    static PowSeries variable(const RFieldPtr& fld, int nvars, int which, int cap);
    static PowSeries constant(const RamifiedElem& c, int nvars, int cap);

    const RFieldPtr& field() const { return fld_; }
    int nvars() const { return nvars_; }
    int cap() const { return cap_; }

    static const std::vector<Exps>& basis(int nvars, int cap);
    const std::vector<RamifiedElem>& raw() const { return c_; }

    RamifiedElem coeff(const Exps& e) const;
    RamifiedElem coeff1(int d) const; // one-variable access
    void set_coeff(const Exps& e, const RamifiedElem& v);

    PowSeries operator+(const PowSeries& o) const;
    PowSeries operator-(const PowSeries& o) const;
    PowSeries operator-() const;
    PowSeries operator*(const PowSeries& o) const;
    PowSeries scaled(const RamifiedElem& s) const;
    PowSeries pow_trunc(std::uint64_t n) const;

    // composition: one argument series per variable, all in a common
    // ambient space, each with vanishing constant term
    PowSeries subst(const std::vector<PowSeries>& args) const;

    // reinterpret variable i as variable slots[i] of a larger space
    PowSeries promoted(int nvars, const std::vector<int>& slots) const;

    bool operator==(const PowSeries& o) const;
    bool operator!=(const PowSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_shape(const PowSeries& o) const;
    std::size_t index_of(const Exps& e) const;

    RFieldPtr fld_;
    int nvars_;
    int cap_;
    std::vector<RamifiedElem> c_;
};

} // namespace picdisc
