#include "picdisc/fq.hpp"

#include <stdexcept>

namespace picdisc {

namespace {

using Vec = std::vector<std::uint32_t>;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void fp_trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Dense F_p[x] arithmetic on coefficient vectors, constant term first.
// Only used for modulus bookkeeping; element arithmetic lives in FqElem.
Vec fp_mul(const Vec& a, const Vec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    fp_trim(r);
    return r;
}

// Remainder modulo a monic divisor.
Vec fp_rem(Vec a, const Vec& mod, std::uint32_t p) {
    fp_trim(a);
    const std::size_t d = mod.size() - 1;
    while (a.size() > d) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        if (lead != 0) {
            for (std::size_t j = 0; j < d; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * mod[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.size() <= d) break;
    }
    return a;
}

Vec fp_powmod(Vec base, std::uint64_t e, const Vec& mod, std::uint32_t p) {
    Vec r{1};
    base = fp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) r = fp_rem(fp_mul(r, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

Vec fp_sub(Vec a, const Vec& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

Vec fp_gcd(Vec a, Vec b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        std::uint32_t lead = b.back();
        if (lead != 1) {
            // scale by lead^{-1}
            std::uint64_t inv = 1, base = lead, e = p - 2;
            while (e > 0) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
        }
        Vec r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test for a monic polynomial over F_p.
bool fp_irreducible(const Vec& g, std::uint32_t p) {
    const std::size_t f = g.size() - 1;
    if (f == 0) return false;
    Vec x{0, 1};
    // h_j = x^{p^j} mod g, computed by iterated p-th powers
    std::vector<Vec> frob(f + 1);
    frob[0] = fp_rem(x, g, p);
    for (std::size_t j = 1; j <= f; ++j)
        frob[j] = fp_powmod(frob[j - 1], p, g, p);
    if (fp_sub(frob[f], frob[0], p) != Vec{}) return false;
    for (std::size_t l = 2; l <= f; ++l) {
        if (f % l != 0) continue;
        bool l_prime = is_prime_u32(static_cast<std::uint32_t>(l));
        if (!l_prime) continue;
        Vec d = fp_gcd(g, fp_sub(frob[f / l], frob[0], p), p);
        if (d.size() != 1) return false;
    }
    return true;
}

} // namespace

FqField::FqField(std::uint32_t p, Vec mod) : p_(p), mod_(std::move(mod)) {
    if (!is_prime_u32(p_))
        throw std::invalid_argument("characteristic must be prime");
    if (mod_.size() < 2)
        throw std::invalid_argument("modulus must have degree at least 1");
    if (mod_.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    for (auto c : mod_)
        if (c >= p_)
            throw std::invalid_argument("modulus coefficient out of range");
    if (!fp_irreducible(mod_, p_))
        throw std::invalid_argument("modulus is not irreducible");
    f_ = static_cast<std::uint32_t>(mod_.size() - 1);
    q_ = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
        if (q_ > (1ULL << 62) / p_)
            throw std::invalid_argument("field too large");
        q_ *= p_;
    }
}

FieldPtr FqField::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    return FieldPtr(new FqField(p, std::move(modulus)));
}

FieldPtr FqField::make(std::uint32_t p, std::uint32_t f) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("characteristic must be prime");
    if (f == 0)
        throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) q *= p;
    if (q > 64)
        throw std::invalid_argument("default modulus table covers q <= 64 only; pass a modulus");
    // first irreducible in base-p counting order of the lower coefficients
    for (std::uint64_t c = 0; c < q; ++c) {
        Vec cand(f + 1, 0);
        std::uint64_t v = c;
        for (std::uint32_t i = 0; i < f; ++i) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        cand[f] = 1;
        if (fp_irreducible(cand, p))
            return FieldPtr(new FqField(p, std::move(cand)));
    }
    throw std::logic_error("no irreducible modulus found");
}

FqElem FqField::zero() const {
    return FqElem(shared_from_this(), Vec(f_, 0));
}

FqElem FqField::one() const {
    Vec r(f_, 0);
    r[0] = 1 % p_;
    return FqElem(shared_from_this(), std::move(r));
}

FqElem FqField::from_code(std::uint64_t code) const {
    if (code >= q_)
        throw std::invalid_argument("element code out of range");
    Vec r(f_, 0);
    for (std::uint32_t i = 0; i < f_; ++i) {
        r[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return FqElem(shared_from_this(), std::move(r));
}

FqElem FqField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    Vec r(f_, 0);
    r[0] = static_cast<std::uint32_t>(m);
    return FqElem(shared_from_this(), std::move(r));
}

FqElem FqField::gen() const {
    if (f_ == 1)
        throw std::invalid_argument("prime field has no generator over itself");
    return from_code(p_);
}

void FqElem::check_compatible(const FqElem& o) const {
    if (!fld_ || !o.fld_)
        throw std::invalid_argument("unattached field element");
    if (fld_.get() != o.fld_.get() && !fld_->same(*o.fld_))
        throw std::invalid_argument("field mismatch");
}

bool FqElem::is_zero() const {
    for (auto c : repr_)
        if (c != 0) return false;
    return true;
}

bool FqElem::is_one() const {
    if (repr_.empty() || repr_[0] != 1 % fld_->p_) return false;
    for (std::size_t i = 1; i < repr_.size(); ++i)
        if (repr_[i] != 0) return false;
    return true;
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_compatible(o);
    Vec r(repr_);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] + o.repr_[i]) % fld_->p_;
    return FqElem(fld_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_compatible(o);
    Vec r(repr_);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] + fld_->p_ - o.repr_[i]) % fld_->p_;
    return FqElem(fld_, std::move(r));
}

FqElem FqElem::operator-() const {
    Vec r(repr_);
    for (auto& c : r) c = (fld_->p_ - c) % fld_->p_;
    return FqElem(fld_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
    check_compatible(o);
    const std::uint32_t p = fld_->p_;
    const std::uint32_t f = fld_->f_;
    Vec prod(2 * f - 1 > 0 ? 2 * f - 1 : 1, 0);
    for (std::uint32_t i = 0; i < f; ++i) {
        if (repr_[i] == 0) continue;
        for (std::uint32_t j = 0; j < f; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(repr_[i]) * o.repr_[j]) % p);
    }
    // reduce modulo the monic modulus
    for (std::uint32_t k = static_cast<std::uint32_t>(prod.size()); k-- > f;) {
        const std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t j = 0; j < f; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * fld_->mod_[j] % p;
            prod[k - f + j] = static_cast<std::uint32_t>((prod[k - f + j] + p - sub) % p);
        }
    }
    prod.resize(f);
    return FqElem(fld_, std::move(prod));
}

FqElem FqElem::pow(std::uint64_t n) const {
    FqElem r = fld_->one();
    FqElem b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FqElem FqElem::inverse() const {
    if (is_zero())
        throw std::invalid_argument("zero is not invertible");
    // x^(q-2); q <= 2^62 so the exponent fits
    return pow(fld_->q_ - 2);
}

FqElem FqElem::frobenius(std::uint32_t m) const {
    FqElem r = *this;
    for (std::uint32_t i = 0; i < m % fld_->f_; ++i)
        r = r.pow(fld_->p_);
    return r;
}

FqElem FqElem::frobenius_inverse(std::uint32_t m) const {
    return frobenius((fld_->f_ - m % fld_->f_) % fld_->f_);
}

bool FqElem::operator==(const FqElem& o) const {
    check_compatible(o);
    return repr_ == o.repr_;
}

std::uint64_t FqElem::code() const {
    std::uint64_t c = 0;
    for (std::size_t i = repr_.size(); i-- > 0;)
        c = c * fld_->p_ + repr_[i];
    return c;
}

std::string FqElem::str() const {
    return std::to_string(code());
}

} // namespace picdisc
