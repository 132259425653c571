#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace picdisc {

/*
 * Truncated polynomial ring R[T]/(T^{m+1}) with coefficients in any
 * commutative ring type R exposing +, -, *, is_zero, is_unit, inverse,
 * zero_like, one_like and ==.
 */
template <class R>
class TruncElem {
public:
    explicit TruncElem(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("truncated element needs at least rank 0");
    }

    static TruncElem constant(const R& a0, std::size_t rank) {
        std::vector<R> v(rank + 1, a0.zero_like());
        v[0] = a0;
        return TruncElem(std::move(v));
    }

    static TruncElem one(const R& like, std::size_t rank) {
        return constant(like.one_like(), rank);
    }

    std::size_t rank() const { return c_.size() - 1; }
    const R& coeff(std::size_t j) const {
        if (j >= c_.size())
            throw std::invalid_argument("coefficient index beyond rank");
        return c_[j];
    }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_unit() const { return c_[0].is_unit(); }

    TruncElem operator+(const TruncElem& o) const {
        check_rank(o);
        std::vector<R> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.c_[i];
        return TruncElem(std::move(r));
    }

    TruncElem operator-(const TruncElem& o) const {
        check_rank(o);
        std::vector<R> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - o.c_[i];
        return TruncElem(std::move(r));
    }

    TruncElem operator*(const TruncElem& o) const {
        check_rank(o);
        std::vector<R> r(c_.size(), c_[0].zero_like());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return TruncElem(std::move(r));
    }

    TruncElem inv() const {
        if (!c_[0].is_unit())
            throw std::invalid_argument("not a unit in truncation");
        std::vector<R> b(c_.size(), c_[0].zero_like());
        b[0] = c_[0].inverse();
        for (std::size_t k = 1; k < c_.size(); ++k) {
            R acc = c_[0].zero_like();
            for (std::size_t j = 1; j <= k; ++j)
                acc = acc + c_[j] * b[k - j];
            b[k] = c_[0].zero_like() - b[0] * acc;
        }
        return TruncElem(std::move(b));
    }

    TruncElem pow(std::uint64_t n) const {
        TruncElem r = one(c_[0], rank());
        TruncElem base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const TruncElem& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const TruncElem& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(" + c_[0].str() + ")";
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            s += " + (" + c_[i].str() + ")*T";
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void check_rank(const TruncElem& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("rank mismatch in truncated ring");
    }

    std::vector<R> c_;
};

} // namespace picdisc
