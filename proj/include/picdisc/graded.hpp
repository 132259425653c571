#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "picdisc/laurent.hpp"
#include "picdisc/padic.hpp"

namespace picdisc {

/*
 * Polynomial over a ramified field in the disc coordinate z, normed by the
 * minimum of coefficient valuations. Reduction lands in the graded ring
 * over the residue field, encoded as a Laurent polynomial whose t-exponent
 * carries the pi-weight.
 */
class TateElem {
public:
    explicit TateElem(RFieldPtr fld) : fld_(std::move(fld)) {}

    static TateElem term(const RamifiedElem& c, std::int64_t zexp);

    const RFieldPtr& field() const { return fld_; }
    const std::map<std::int64_t, RamifiedElem>& terms() const { return terms_; }

    bool is_zero() const; // no visibly nonzero coefficient
    RamifiedElem coeff(std::int64_t j) const;
    void set_coeff(std::int64_t j, const RamifiedElem& c);

    TateElem operator+(const TateElem& o) const;
    TateElem operator-(const TateElem& o) const;
    TateElem operator*(const TateElem& o) const;

    std::string str() const;

private:
    RFieldPtr fld_;
    std::map<std::int64_t, RamifiedElem> terms_; // exact zeros dropped
};

// Gauss-norm degree: minimum coefficient valuation. Throws std::domain_error
// when the coefficients cannot be separated from zero at working precision.
ValExp spectral_degree(const TateElem& a);

struct GradedElem {
    ValExp degree;
    LaurentPoly symbol; // over F_p; t-exponent = pi-weight, z-exponent kept
};

// Leading homogeneous part: residues of the coefficients of minimal
// valuation, placed in the graded component of that weight.
GradedElem principal_symbol(const TateElem& a);

} // namespace picdisc
