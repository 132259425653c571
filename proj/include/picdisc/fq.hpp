#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace picdisc {

class FqField;
class FqElem;
using FieldPtr = std::shared_ptr<const FqField>;

/*
 * Finite field F_q, q = p^f, as F_p[x] modulo a monic irreducible polynomial.
 * Fields are shared immutable contexts; elements hold a pointer to theirs.
 * Two fields are interchangeable when p and modulus agree.
 */
class FqField : public std::enable_shared_from_this<FqField> {
public:
    // Default modulus: the deterministic first irreducible of degree f in the
    // base-p ordering of coefficient vectors. Requires q <= 64.
    static FieldPtr make(std::uint32_t p, std::uint32_t f);

    // Explicit monic modulus, constant term first. Checked for irreducibility.
    static FieldPtr make(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    FqElem zero() const;
    FqElem one() const;
    // Integer code: base-p digit vector, least significant digit = constant.
    FqElem from_code(std::uint64_t code) const;
    // Prime-subfield element v mod p (v may be negative).
    FqElem from_int(std::int64_t v) const;
    // Class of x; equals from_code(p) when f > 1, throws for prime fields.
    FqElem gen() const;

    bool same(const FqField& other) const {
        return p_ == other.p_ && mod_ == other.mod_;
    }

private:
    FqField(std::uint32_t p, std::vector<std::uint32_t> mod);

    std::uint32_t p_;
    std::uint32_t f_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_; // length f+1, monic

    friend class FqElem;
};

class FqElem {
public:
    FqElem() = default; // unattached; usable only as assignment target

    const FieldPtr& field() const { return fld_; }
    bool attached() const { return static_cast<bool>(fld_); }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const { return !is_zero(); }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem inverse() const;
    FqElem pow(std::uint64_t n) const;

    // x -> x^p and its m-fold iterate / inverse iterate.
    FqElem frobenius(std::uint32_t m = 1) const;
    FqElem frobenius_inverse(std::uint32_t m = 1) const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    // Total order by integer code; used for canonical sorting only.
    std::uint64_t code() const;
    bool operator<(const FqElem& o) const { return code() < o.code(); }

    std::string str() const;

    FqElem zero_like() const { return fld_->zero(); }
    FqElem one_like() const { return fld_->one(); }

private:
    FqElem(FieldPtr fld, std::vector<std::uint32_t> repr)
        : fld_(std::move(fld)), repr_(std::move(repr)) {}

    void check_compatible(const FqElem& o) const;

    FieldPtr fld_;
    std::vector<std::uint32_t> repr_; // length f, entries in [0, p)

    friend class FqField;
};

} // namespace picdisc
