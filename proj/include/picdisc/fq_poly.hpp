#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "picdisc/fq.hpp"

namespace picdisc {

// Dense univariate polynomial over F_q, coefficients constant term first.
class FqPoly {
public:
    explicit FqPoly(FieldPtr fld) : fld_(std::move(fld)) {}
    FqPoly(FieldPtr fld, std::vector<FqElem> coeffs);

    static FqPoly monomial(const FieldPtr& fld, const FqElem& c, std::size_t deg);
    static FqPoly variable(const FieldPtr& fld);
    static FqPoly constant(const FqElem& c);

    const FieldPtr& field() const { return fld_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    FqElem coeff(std::size_t i) const;
    FqElem lead() const;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator-() const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly operator*(const FqElem& s) const;

    std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
    FqPoly operator/(const FqPoly& d) const { return divmod(d).first; }
    FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }

    FqPoly monic() const;
    FqPoly derivative() const;
    FqElem eval(const FqElem& x) const;
    // g(t^k)
    FqPoly subst_t_pow(std::uint64_t k) const;

    bool operator==(const FqPoly& o) const;
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim();

    FieldPtr fld_;
    std::vector<FqElem> c_;
};

FqPoly poly_gcd(FqPoly a, FqPoly b);
FqPoly poly_powmod(FqPoly base, const mpz_class& e, const FqPoly& mod);

// Canonical order: by degree, ties by coefficient codes from the constant
// term up. Gives factorization output and divisor keys a stable order.
bool poly_less(const FqPoly& a, const FqPoly& b);

struct FqPolyLess {
    bool operator()(const FqPoly& a, const FqPoly& b) const { return poly_less(a, b); }
};

struct Factorization {
    FqElem unit;
    std::vector<std::pair<FqPoly, std::uint64_t>> factors; // monic irreducibles, sorted
};

// Complete factorization over F_q. The splitting stage draws from a seeded
// deterministic stream, so equal inputs and seeds give equal transcripts.
Factorization poly_factor(const FqPoly& g, std::uint64_t seed = 0);

// For monic g over F_q and s = t^{p^m}: the unique monic h with
// h(t)^{p^m} = g(t^{p^m}). Coefficientwise inverse Frobenius.
FqPoly frobenius_descend(const FqPoly& g, std::uint32_t m);

} // namespace picdisc
