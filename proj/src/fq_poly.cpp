#include "picdisc/fq_poly.hpp"

#include <map>
#include <stdexcept>

#include "picdisc/rng.hpp"

namespace picdisc {

FqPoly::FqPoly(FieldPtr fld, std::vector<FqElem> coeffs)
    : fld_(std::move(fld)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.attached() || !c.field()->same(*fld_))
            throw std::invalid_argument("coefficient from wrong field");
    trim();
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::monomial(const FieldPtr& fld, const FqElem& c, std::size_t deg) {
    std::vector<FqElem> v(deg + 1, fld->zero());
    v[deg] = c;
    return FqPoly(fld, std::move(v));
}

FqPoly FqPoly::variable(const FieldPtr& fld) {
    return monomial(fld, fld->one(), 1);
}

FqPoly FqPoly::constant(const FqElem& c) {
    return monomial(c.field(), c, 0);
}

FqElem FqPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return fld_->zero();
}

FqElem FqPoly::lead() const {
    if (c_.empty())
        throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), fld_->zero());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(i) + o.coeff(i);
    return FqPoly(fld_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), fld_->zero());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(i) - o.coeff(i);
    return FqPoly(fld_, std::move(r));
}

FqPoly FqPoly::operator-() const {
    std::vector<FqElem> r(c_);
    for (auto& c : r) c = -c;
    return FqPoly(fld_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(fld_);
    std::vector<FqElem> r(c_.size() + o.c_.size() - 1, fld_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return FqPoly(fld_, std::move(r));
}

FqPoly FqPoly::operator*(const FqElem& s) const {
    std::vector<FqElem> r(c_);
    for (auto& c : r) c = c * s;
    return FqPoly(fld_, std::move(r));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
    if (d.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    FqPoly rem = *this;
    if (degree() < d.degree()) return {FqPoly(fld_), rem};
    const FqElem dlead_inv = d.lead().inverse();
    std::vector<FqElem> q(static_cast<std::size_t>(degree() - d.degree()) + 1, fld_->zero());
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        const FqElem fac = rem.lead() * dlead_inv;
        q[shift] = fac;
        rem = rem - FqPoly::monomial(fld_, fac, shift) * d;
    }
    return {FqPoly(fld_, std::move(q)), rem};
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(fld_);
    std::vector<FqElem> r(c_.size() - 1, fld_->zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * fld_->from_int(static_cast<std::int64_t>(i));
    return FqPoly(fld_, std::move(r));
}

FqElem FqPoly::eval(const FqElem& x) const {
    FqElem acc = fld_->zero();
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

FqPoly FqPoly::subst_t_pow(std::uint64_t k) const {
    if (k == 0)
        throw std::invalid_argument("substitution exponent must be positive");
    if (is_zero()) return *this;
    std::vector<FqElem> r(static_cast<std::size_t>(degree()) * k + 1, fld_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i * k] = c_[i];
    return FqPoly(fld_, std::move(r));
}

bool FqPoly::operator==(const FqPoly& o) const {
    if (degree() != o.degree()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string FqPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i == 1) s += "*t";
        else if (i > 1) s += "*t^" + std::to_string(i);
    }
    return s;
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FqPoly poly_powmod(FqPoly base, const mpz_class& e, const FqPoly& mod) {
    FqPoly r = FqPoly::constant(base.field()->one());
    r = r % mod;
    base = base % mod;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * base) % mod;
    }
    return r;
}

bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::int64_t i = 0; i <= a.degree(); ++i) {
        const std::uint64_t ca = a.coeff(static_cast<std::size_t>(i)).code();
        const std::uint64_t cb = b.coeff(static_cast<std::size_t>(i)).code();
        if (ca != cb) return ca < cb;
    }
    return false;
}

namespace {

// Coefficientwise p-th root of a polynomial whose exponents are multiples
// of p. Valid over a finite field, where Frobenius is bijective.
FqPoly poly_pth_root(const FqPoly& f) {
    const auto& fld = f.field();
    const std::uint32_t p = fld->p();
    std::vector<FqElem> r(static_cast<std::size_t>(f.degree()) / p + 1, fld->zero());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i) {
        const FqElem c = f.coeff(i);
        if (c.is_zero()) continue;
        if (i % p != 0)
            throw std::logic_error("not a p-th power");
        r[i / p] = c.frobenius_inverse(1);
    }
    return FqPoly(fld, std::move(r));
}

void squarefree_parts(const FqPoly& f, std::uint64_t mult,
                      std::vector<std::pair<FqPoly, std::uint64_t>>& out) {
    const std::uint32_t p = f.field()->p();
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_parts(poly_pth_root(f), mult * p, out);
        return;
    }
    FqPoly c = poly_gcd(f, d);
    FqPoly w = f / c;
    std::uint64_t i = 1;
    while (!w.is_one()) {
        FqPoly y = poly_gcd(w, c);
        FqPoly z = w / y;
        if (!z.is_one()) out.emplace_back(z, mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one())
        squarefree_parts(poly_pth_root(c), mult * p, out);
}

// f squarefree: peel off the product of irreducibles of each degree d.
std::vector<std::pair<FqPoly, std::uint64_t>> distinct_degree(FqPoly f) {
    const auto& fld = f.field();
    std::vector<std::pair<FqPoly, std::uint64_t>> out;
    FqPoly h = FqPoly::variable(fld) % f;
    const mpz_class q(static_cast<unsigned long>(fld->q()));
    std::uint64_t d = 0;
    while (f.degree() > 0 && 2 * (d + 1) <= static_cast<std::uint64_t>(f.degree())) {
        ++d;
        h = poly_powmod(h, q, f);
        FqPoly g = poly_gcd(h - FqPoly::variable(fld), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, static_cast<std::uint64_t>(f.degree()));
    return out;
}

FqPoly random_nonconstant(const FieldPtr& fld, std::int64_t below_degree, SeededRng& rng) {
    while (true) {
        std::vector<FqElem> c;
        c.reserve(static_cast<std::size_t>(below_degree));
        for (std::int64_t i = 0; i < below_degree; ++i)
            c.push_back(fld->from_code(rng.below(fld->q())));
        FqPoly r(fld, std::move(c));
        if (r.degree() >= 1) return r;
    }
}

// Cantor-Zassenhaus splitting of a squarefree product of irreducibles of
// equal degree d.
void equal_degree(const FqPoly& f, std::uint64_t d, SeededRng& rng,
                  std::vector<FqPoly>& out) {
    if (static_cast<std::uint64_t>(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& fld = f.field();
    const std::uint32_t p = fld->p();
    while (true) {
        FqPoly r = random_nonconstant(fld, f.degree(), rng);
        FqPoly g(fld);
        if (p != 2) {
            mpz_class qd;
            mpz_class q(static_cast<unsigned long>(fld->q()));
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
            mpz_class e = (qd - 1) / 2;
            FqPoly s = poly_powmod(r, e, f);
            g = poly_gcd(s - FqPoly::constant(fld->one()), f);
        } else {
            // absolute trace to F_2 of r, root by root
            const std::uint64_t bits = static_cast<std::uint64_t>(fld->f()) * d;
            FqPoly s(fld);
            FqPoly term = r % f;
            for (std::uint64_t i = 0; i < bits; ++i) {
                s = s + term;
                term = (term * term) % f;
            }
            g = poly_gcd(s, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization poly_factor(const FqPoly& g, std::uint64_t seed) {
    if (g.is_zero())
        throw std::invalid_argument("zero has no factorization");
    const auto& fld = g.field();
    Factorization res{g.lead(), {}};
    FqPoly f = g.monic();
    if (f.degree() == 0) return res;

    SeededRng rng(seed ^ 0x66616374ULL);
    std::vector<std::pair<FqPoly, std::uint64_t>> sqf;
    squarefree_parts(f, 1, sqf);

    std::map<FqPoly, std::uint64_t, FqPolyLess> acc;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [piece, d] : distinct_degree(part)) {
            std::vector<FqPoly> irr;
            equal_degree(piece, d, rng, irr);
            for (const auto& h : irr)
                acc[h] += mult;
        }
    }
    res.factors.assign(acc.begin(), acc.end());
    return res;
}

FqPoly frobenius_descend(const FqPoly& g, std::uint32_t m) {
    if (m == 0)
        throw std::invalid_argument("descent depth must be positive");
    if (g.is_zero()) return g;
    std::vector<FqElem> r;
    r.reserve(static_cast<std::size_t>(g.degree()) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(g.degree()); ++i)
        r.push_back(g.coeff(i).frobenius_inverse(m));
    return FqPoly(g.field(), std::move(r));
}

} // namespace picdisc
