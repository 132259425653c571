#include "picdisc/padic.hpp"

#include <numeric>
#include <stdexcept>

namespace picdisc {

namespace {

constexpr std::int64_t kSat = RamifiedElem::kExactPrec;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a >= kSat || b >= kSat) return kSat;
    return a + b;
}

std::int64_t sat_min(std::int64_t a, std::int64_t b) { return a < b ? a : b; }

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

ValExp ValExp::make(std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    return ValExp{n, d};
}

ValExp ValExp::operator+(const ValExp& o) const {
    return make(num * o.den + o.num * den, den * o.den);
}

ValExp ValExp::operator-(const ValExp& o) const {
    return make(num * o.den - o.num * den, den * o.den);
}

ValExp ValExp::scaled(std::int64_t k) const { return make(num * k, den); }

ValExp ValExp::divided(std::int64_t k) const { return make(num, den * k); }

bool ValExp::operator<(const ValExp& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string ValExp::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

ValExp val_min(const ValExp& a, const ValExp& b) { return a < b ? a : b; }

RamifiedField::RamifiedField(std::uint32_t p, std::vector<std::int64_t> eis,
                             std::int64_t prec)
    : p_(p), eis_(std::move(eis)), prec_(prec) {
    if (!is_prime_u32(p_))
        throw std::invalid_argument("characteristic must be prime");
    if (eis_.size() < 2)
        throw std::invalid_argument("defining polynomial must have degree at least 1");
    if (eis_.back() != 1)
        throw std::invalid_argument("defining polynomial must be monic");
    e_ = static_cast<std::uint32_t>(eis_.size() - 1);
    const std::int64_t ip = static_cast<std::int64_t>(p_);
    for (std::uint32_t i = 0; i < e_; ++i)
        if (eis_[i] % ip != 0)
            throw std::invalid_argument("lower coefficients must be divisible by p");
    if ((eis_[0] / ip) % ip == 0)
        throw std::invalid_argument("constant coefficient must have valuation exactly 1");
    if (prec_ < 1 || prec_ > (std::int64_t{1} << 20))
        throw std::invalid_argument("precision out of range");

    kcap_ = (prec_ + e_ - 1) / e_ + 4;
    mpz_ui_pow_ui(pcap_.get_mpz_t(), p_, static_cast<unsigned long>(kcap_));

    // p/pi = -(p/a_0) * (pi^{e-1} + a_{e-1} pi^{e-2} + ... + a_1)
    mpz_class b(eis_[0] / ip);
    mpz_class binv;
    if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), pcap_.get_mpz_t()) == 0)
        throw std::logic_error("unit inversion failed");
    p_over_pi_.assign(e_, mpz_class(0));
    for (std::uint32_t i = 0; i < e_; ++i) {
        mpz_class v = -binv * mpz_class(eis_[i + 1]);
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), pcap_.get_mpz_t());
        p_over_pi_[i] = v;
    }
}

RFieldPtr RamifiedField::make(std::uint32_t p, std::vector<std::int64_t> eisenstein,
                              std::int64_t prec) {
    return RFieldPtr(new RamifiedField(p, std::move(eisenstein), prec));
}

RFieldPtr RamifiedField::qp(std::uint32_t p, std::int64_t prec) {
    return make(p, {-static_cast<std::int64_t>(p), 1}, prec);
}

void RamifiedField::vec_reduce(std::vector<mpz_class>& a) const {
    for (auto& c : a)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pcap_.get_mpz_t());
}

std::vector<mpz_class> RamifiedField::vec_mul(const std::vector<mpz_class>& a,
                                              const std::vector<mpz_class>& b) const {
    std::vector<mpz_class> r(2 * e_ - 1, mpz_class(0));
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            r[i + j] += a[i] * b[j];
    }
    for (std::uint32_t k = static_cast<std::uint32_t>(r.size()); k-- > e_;) {
        if (r[k] == 0) continue;
        const mpz_class c = r[k];
        r[k] = 0;
        for (std::uint32_t j = 0; j < e_; ++j)
            r[k - e_ + j] -= c * mpz_class(eis_[j]);
    }
    r.resize(e_);
    vec_reduce(r);
    return r;
}

std::vector<mpz_class> RamifiedField::vec_mul_pi(std::vector<mpz_class> a) const {
    std::vector<mpz_class> r(e_, mpz_class(0));
    const mpz_class& top = a[e_ - 1];
    r[0] = -top * mpz_class(eis_[0]);
    for (std::uint32_t i = 1; i < e_; ++i)
        r[i] = a[i - 1] - top * mpz_class(eis_[i]);
    vec_reduce(r);
    return r;
}

std::vector<mpz_class> RamifiedField::vec_div_pi(const std::vector<mpz_class>& a) const {
    if (mpz_divisible_ui_p(a[0].get_mpz_t(), p_) == 0)
        throw std::logic_error("digit not divisible by p");
    std::vector<mpz_class> r(e_, mpz_class(0));
    for (std::uint32_t i = 0; i + 1 < e_; ++i) r[i] = a[i + 1];
    if (a[0] != 0) {
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), a[0].get_mpz_t(), p_);
        for (std::uint32_t i = 0; i < e_; ++i) r[i] += q * p_over_pi_[i];
    }
    vec_reduce(r);
    return r;
}

std::int64_t RamifiedField::vec_val(const std::vector<mpz_class>& a,
                                    std::int64_t bound) const {
    std::int64_t w = bound;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        mpz_class rem;
        const std::int64_t vp = static_cast<std::int64_t>(
            mpz_remove(rem.get_mpz_t(), a[i].get_mpz_t(), mpz_class(p_).get_mpz_t()));
        const std::int64_t cand = vp * e_ + i;
        if (cand < w) w = cand;
    }
    return w;
}

std::vector<mpz_class> RamifiedField::vec_inv(const std::vector<mpz_class>& a) const {
    std::vector<mpz_class> y(e_, mpz_class(0));
    if (mpz_invert(y[0].get_mpz_t(), a[0].get_mpz_t(), pcap_.get_mpz_t()) == 0)
        throw std::logic_error("unit inversion failed");
    std::int64_t iters = 2;
    for (std::int64_t span = 1; span < kcap_ * static_cast<std::int64_t>(e_); span *= 2)
        ++iters;
    for (std::int64_t it = 0; it < iters; ++it) {
        std::vector<mpz_class> ay = vec_mul(a, y);
        // y <- y * (2 - a*y)
        for (auto& c : ay) c = -c;
        ay[0] += 2;
        vec_reduce(ay);
        y = vec_mul(y, ay);
    }
    return y;
}

RamifiedElem RamifiedField::make_elem(std::int64_t shift, std::vector<mpz_class> digits,
                                      std::int64_t nabs) const {
    if (digits.size() != e_)
        throw std::invalid_argument("digit vector has wrong length");
    vec_reduce(digits);
    std::int64_t rel = nabs >= kSat ? prec_ : nabs - shift;
    if (rel > prec_) rel = prec_;
    auto self = shared_from_this();
    if (rel <= 0)
        return RamifiedElem(self, true, 0, {}, shift + rel);
    const std::int64_t w = vec_val(digits, rel);
    if (w >= rel)
        return RamifiedElem(self, true, 0, {}, shift + rel);
    for (std::int64_t i = 0; i < w; ++i) digits = vec_div_pi(digits);
    return RamifiedElem(self, false, shift + w, std::move(digits), shift + rel);
}

RamifiedElem RamifiedField::zero() const {
    return RamifiedElem(shared_from_this(), true, 0, {}, kSat);
}

RamifiedElem RamifiedField::one() const { return from_int(1); }

RamifiedElem RamifiedField::from_int(std::int64_t v) const {
    return from_mpz(mpz_class(static_cast<long>(v)));
}

RamifiedElem RamifiedField::from_mpz(const mpz_class& v) const {
    if (v == 0) return zero();
    std::vector<mpz_class> d(e_, mpz_class(0));
    d[0] = v;
    return make_elem(0, std::move(d), kSat);
}

RamifiedElem RamifiedField::pi(std::int64_t k) const {
    std::vector<mpz_class> d(e_, mpz_class(0));
    d[0] = 1;
    return make_elem(k, std::move(d), kSat);
}

bool RamifiedElem::exact_zero() const { return zero_ && nabs_ >= kSat / 2; }

std::int64_t RamifiedElem::shift() const {
    if (zero_)
        throw std::domain_error("precision exhausted");
    return shift_;
}

ValExp RamifiedElem::valuation() const {
    if (exact_zero())
        throw std::invalid_argument("valuation of zero");
    if (zero_)
        throw std::domain_error("precision exhausted");
    return ValExp::make(shift_, fld_->e());
}

void RamifiedElem::check_compatible(const RamifiedElem& o) const {
    if (!fld_ || !o.fld_)
        throw std::invalid_argument("unattached element");
    if (fld_.get() != o.fld_.get() && !fld_->same(*o.fld_))
        throw std::invalid_argument("field mismatch");
}

RamifiedElem RamifiedElem::operator+(const RamifiedElem& o) const {
    check_compatible(o);
    if (zero_ && o.zero_)
        return RamifiedElem(fld_, true, 0, {}, sat_min(nabs_, o.nabs_));
    if (zero_) return o.truncated(nabs_);
    if (o.zero_) return truncated(o.nabs_);
    const std::int64_t s = sat_min(shift_, o.shift_);
    std::vector<mpz_class> a = u_;
    for (std::int64_t i = 0; i < shift_ - s; ++i) a = fld_->vec_mul_pi(std::move(a));
    std::vector<mpz_class> b = o.u_;
    for (std::int64_t i = 0; i < o.shift_ - s; ++i) b = fld_->vec_mul_pi(std::move(b));
    for (std::uint32_t i = 0; i < fld_->e(); ++i) a[i] += b[i];
    return fld_->make_elem(s, std::move(a), sat_min(nabs_, o.nabs_));
}

RamifiedElem RamifiedElem::operator-() const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    if (zero_) return *this;
    std::vector<mpz_class> a = u_;
    for (auto& c : a) c = -c;
    return fld_->make_elem(shift_, std::move(a), nabs_);
}

RamifiedElem RamifiedElem::operator-(const RamifiedElem& o) const {
    return *this + (-o);
}

RamifiedElem RamifiedElem::operator*(const RamifiedElem& o) const {
    check_compatible(o);
    const std::int64_t wa = zero_ ? nabs_ : shift_;
    const std::int64_t wb = o.zero_ ? o.nabs_ : o.shift_;
    const std::int64_t n = sat_min(sat_add(wa, o.nabs_), sat_add(wb, nabs_));
    if (zero_ || o.zero_)
        return RamifiedElem(fld_, true, 0, {}, n);
    return fld_->make_elem(shift_ + o.shift_, fld_->vec_mul(u_, o.u_), n);
}

RamifiedElem RamifiedElem::inverse() const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    if (exact_zero())
        throw std::invalid_argument("division by zero");
    if (zero_)
        throw std::domain_error("precision exhausted");
    const std::int64_t rel = nabs_ - shift_;
    return fld_->make_elem(-shift_, fld_->vec_inv(u_), -shift_ + rel);
}

RamifiedElem RamifiedElem::pow(std::int64_t n) const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    RamifiedElem base = n < 0 ? inverse() : *this;
    std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n);
    RamifiedElem r = fld_->one();
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

RamifiedElem RamifiedElem::mul_pi(std::int64_t k) const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    if (zero_)
        return RamifiedElem(fld_, true, 0, {}, sat_add(nabs_, k));
    return RamifiedElem(fld_, false, shift_ + k, u_, nabs_ + k);
}

RamifiedElem RamifiedElem::truncated(std::int64_t nabs) const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    const std::int64_t n = sat_min(nabs_, nabs);
    if (zero_)
        return RamifiedElem(fld_, true, 0, {}, n);
    if (shift_ >= n)
        return RamifiedElem(fld_, true, 0, {}, n);
    return RamifiedElem(fld_, false, shift_, u_, n);
}

std::uint32_t RamifiedElem::unit_residue() const {
    if (!is_unit())
        throw std::invalid_argument("residue of a non-unit");
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), u_[0].get_mpz_t(), fld_->p());
    return static_cast<std::uint32_t>(r.get_ui());
}

RamifiedElem RamifiedElem::zero_like() const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    return fld_->zero();
}

RamifiedElem RamifiedElem::one_like() const {
    if (!fld_)
        throw std::invalid_argument("unattached element");
    return fld_->one();
}

std::string RamifiedElem::str() const {
    if (!fld_) return "<unattached>";
    if (exact_zero()) return "0";
    if (zero_) return "O(pi^" + std::to_string(nabs_) + ")";
    const std::int64_t rel = nabs_ - shift_;
    std::int64_t dcap = (rel + fld_->e() - 1) / fld_->e() + 1;
    if (dcap > fld_->digit_cap()) dcap = fld_->digit_cap();
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), fld_->p(), static_cast<unsigned long>(dcap));
    std::string s = "(";
    for (std::uint32_t i = 0; i < fld_->e(); ++i) {
        mpz_class d;
        mpz_mod(d.get_mpz_t(), u_[i].get_mpz_t(), m.get_mpz_t());
        if (i > 0) s += " + ";
        s += d.get_str();
        if (i == 1) s += "*pi";
        else if (i > 1) s += "*pi^" + std::to_string(i);
    }
    s += ")";
    if (shift_ != 0) s += "*pi^" + std::to_string(shift_);
    s += " + O(pi^" + std::to_string(nabs_) + ")";
    return s;
}

} // namespace picdisc
