#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picdisc/derivation.hpp"
#include "picdisc/laurent.hpp"
#include "picdisc/trunc.hpp"

namespace picdisc {

// Logarithmic derivative: value = apply(f)/f, coefficientwise exact.
struct LogDerivElem {
    TruncElem<LaurentPoly> value;
    std::optional<LaurentPoly> argument;
};

// Throws when some coefficient of apply(f)/f is not in the ring ("not in L_A").
LogDerivElem log_derivative(const HigherDerivation& hd, const LaurentPoly& f);

// The subgroup of classes coming from units: powers of apply(t)/t, in order
// of exponent 0 .. p^depth - 1.
std::vector<TruncElem<LaurentPoly>> unit_log_group(const HigherDerivation& hd);

// Least j >= 1 with c^j in the unit log subgroup; this is the order of the
// Picard class attached to the disc datum c. Always divides p^depth.
std::uint64_t class_order(const TruncElem<LaurentPoly>& c);

struct Decomposition {
    std::uint64_t j = 0;
    std::uint64_t i = 0;
};

// Writes apply(f)/f as c^j * (apply(t)/t)^i for an extended derivation.
// nullopt when f does not define a unit class (the division fails).
std::optional<Decomposition> decompose(const HigherDerivation& hd, const LaurentPoly& f);

/*
 * Divisor on k[t^{+-1}]: finite multiplicity map on monic irreducibles
 * other than t (t is a unit). Also used for the index-p^m Laurent subring
 * after the change of variable s = t^{p^m}.
 */
class DivisorOnLaurent {
public:
    explicit DivisorOnLaurent(FieldPtr fld) : fld_(std::move(fld)) {}

    const FieldPtr& field() const { return fld_; }
    const std::map<FqPoly, std::int64_t, FqPolyLess>& terms() const { return terms_; }

    void add(const FqPoly& prime, std::int64_t mult);

    DivisorOnLaurent operator+(const DivisorOnLaurent& o) const;
    DivisorOnLaurent operator-(const DivisorOnLaurent& o) const;
    bool operator==(const DivisorOnLaurent& o) const;
    bool operator!=(const DivisorOnLaurent& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldPtr fld_;
    std::map<FqPoly, std::int64_t, FqPolyLess> terms_;
};

// Principal divisor of a nonzero z-free element.
DivisorOnLaurent divisor(const LaurentPoly& f, std::uint64_t seed = 0);

// Pullback of a subring divisor along s = t^{p^m}: each prime g goes to its
// descended prime with multiplicity scaled by p^m.
DivisorOnLaurent ramification_map(const DivisorOnLaurent& sub, std::uint32_t m);

// Image of a subring divisor class under the descent map: pull back, write
// as the divisor of a ratio of polynomials, take its logarithmic derivative.
LogDerivElem phi_map(const HigherDerivation& hd, const DivisorOnLaurent& sub);

} // namespace picdisc
