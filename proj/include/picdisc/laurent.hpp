#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "picdisc/fq.hpp"
#include "picdisc/fq_poly.hpp"

namespace picdisc {

struct LExp {
    std::int64_t t = 0;
    std::int64_t z = 0;
    auto operator<=>(const LExp&) const = default;
};

/*
 * Element of k[t^{+-1}][z]: finitely many terms c * t^a * z^b with b >= 0.
 * Units are the single terms c * t^a with b = 0.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(FieldPtr fld) : fld_(std::move(fld)) {}

    static LaurentPoly zero(const FieldPtr& fld) { return LaurentPoly(fld); }
    static LaurentPoly one(const FieldPtr& fld);
    static LaurentPoly term(const FqElem& c, std::int64_t et, std::int64_t ez = 0);
    static LaurentPoly t_power(const FieldPtr& fld, std::int64_t e);
    static LaurentPoly var_z(const FieldPtr& fld);
    static LaurentPoly from_poly(const FqPoly& g);

    const FieldPtr& field() const { return fld_; }
    const std::map<LExp, FqElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_unit() const;
    bool has_z() const;
    std::int64_t z_degree() const; // -1 for zero
    LaurentPoly z_coeff(std::int64_t j) const;
    std::int64_t min_t_exp() const;

    FqElem coeff(std::int64_t et, std::int64_t ez = 0) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const FqElem& s) const;
    LaurentPoly inverse() const;

    // g(t) -> g(t^k); z is untouched
    LaurentPoly subst_t_pow(std::int64_t k) const;

    // z-free element as t^shift * poly with poly(0) != 0
    std::pair<FqPoly, std::int64_t> to_poly_parts() const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly zero_like() const { return LaurentPoly(fld_); }
    LaurentPoly one_like() const { return one(fld_); }

    std::string str() const;

private:
    void insert_term(const LExp& e, const FqElem& c);

    FieldPtr fld_;
    std::map<LExp, FqElem> terms_; // no zero coefficients stored

    friend std::optional<LaurentPoly> divide_exact(const LaurentPoly&, const LaurentPoly&);
};

// Quotient when the division is exact in k[t^{+-1}][z], nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

} // namespace picdisc
