#include "picdisc/laurent.hpp"

#include <stdexcept>

namespace picdisc {

LaurentPoly LaurentPoly::one(const FieldPtr& fld) {
    return term(fld->one(), 0, 0);
}

LaurentPoly LaurentPoly::term(const FqElem& c, std::int64_t et, std::int64_t ez) {
    if (!c.attached())
        throw std::invalid_argument("unattached coefficient");
    if (ez < 0)
        throw std::invalid_argument("negative z exponent");
    LaurentPoly r(c.field());
    if (!c.is_zero()) r.terms_.emplace(LExp{et, ez}, c);
    return r;
}

LaurentPoly LaurentPoly::t_power(const FieldPtr& fld, std::int64_t e) {
    return term(fld->one(), e, 0);
}

LaurentPoly LaurentPoly::var_z(const FieldPtr& fld) {
    return term(fld->one(), 0, 1);
}

LaurentPoly LaurentPoly::from_poly(const FqPoly& g) {
    LaurentPoly r(g.field());
    for (std::int64_t i = 0; i <= g.degree(); ++i) {
        const FqElem c = g.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) r.terms_.emplace(LExp{i, 0}, c);
    }
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == LExp{0, 0} &&
           terms_.begin()->second.is_one();
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && terms_.begin()->first.z == 0;
}

bool LaurentPoly::has_z() const {
    for (const auto& [e, c] : terms_)
        if (e.z > 0) return true;
    return false;
}

std::int64_t LaurentPoly::z_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_)
        if (e.z > d) d = e.z;
    return d;
}

LaurentPoly LaurentPoly::z_coeff(std::int64_t j) const {
    LaurentPoly r(fld_);
    for (const auto& [e, c] : terms_)
        if (e.z == j) r.terms_.emplace(LExp{e.t, 0}, c);
    return r;
}

std::int64_t LaurentPoly::min_t_exp() const {
    if (terms_.empty())
        throw std::invalid_argument("zero element has no exponent range");
    std::int64_t m = terms_.begin()->first.t;
    for (const auto& [e, c] : terms_)
        if (e.t < m) m = e.t;
    return m;
}

FqElem LaurentPoly::coeff(std::int64_t et, std::int64_t ez) const {
    auto it = terms_.find(LExp{et, ez});
    if (it == terms_.end()) return fld_->zero();
    return it->second;
}

void LaurentPoly::insert_term(const LExp& e, const FqElem& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    FqElem s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(fld_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(fld_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.insert_term(LExp{ea.t + eb.t, ea.z + eb.z}, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const FqElem& s) const {
    LaurentPoly r(fld_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
        FqElem v = c * s;
        if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_unit())
        throw std::invalid_argument("not a unit");
    const auto& [e, c] = *terms_.begin();
    return term(c.inverse(), -e.t, 0);
}

LaurentPoly LaurentPoly::subst_t_pow(std::int64_t k) const {
    if (k == 0)
        throw std::invalid_argument("substitution exponent must be nonzero");
    LaurentPoly r(fld_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(LExp{e.t * k, e.z}, c);
    return r;
}

std::pair<FqPoly, std::int64_t> LaurentPoly::to_poly_parts() const {
    if (has_z())
        throw std::invalid_argument("element is not z-free");
    if (is_zero()) return {FqPoly(fld_), 0};
    const std::int64_t shift = min_t_exp();
    std::int64_t top = shift;
    for (const auto& [e, c] : terms_)
        if (e.t > top) top = e.t;
    std::vector<FqElem> coeffs(static_cast<std::size_t>(top - shift) + 1, fld_->zero());
    for (const auto& [e, c] : terms_)
        coeffs[static_cast<std::size_t>(e.t - shift)] = c;
    return {FqPoly(fld_, std::move(coeffs)), shift};
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (e.t != 0) s += "*t^" + std::to_string(e.t);
        if (e.z == 1) s += "*z";
        else if (e.z > 1) s += "*z^" + std::to_string(e.z);
    }
    return s;
}

namespace {

// Exact quotient of z-free elements. Since t is a unit, this is polynomial
// divisibility of the t-coprime parts plus an exponent shift.
std::optional<LaurentPoly> divide_exact_t(const LaurentPoly& num, const LaurentPoly& den) {
    auto [np, ns] = num.to_poly_parts();
    auto [dp, ds] = den.to_poly_parts();
    auto [q, r] = np.divmod(dp);
    if (!r.is_zero()) return std::nullopt;
    return LaurentPoly::from_poly(q) * LaurentPoly::t_power(num.field(), ns - ds);
}

} // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw std::invalid_argument("division by zero");
    if (num.is_zero()) return num;
    const std::int64_t dz = den.z_degree();
    if (dz == 0 && !den.has_z() && !num.has_z())
        return divide_exact_t(num, den);

    const LaurentPoly dtop = den.z_coeff(dz);
    LaurentPoly rem = num;
    LaurentPoly quot(num.field());
    while (!rem.is_zero()) {
        const std::int64_t rz = rem.z_degree();
        if (rz < dz) return std::nullopt;
        auto q = divide_exact_t(rem.z_coeff(rz), dtop);
        if (!q) return std::nullopt;
        const LaurentPoly piece =
            *q * LaurentPoly::term(num.field()->one(), 0, rz - dz);
        quot = quot + piece;
        rem = rem - piece * den;
    }
    return quot;
}

} // namespace picdisc
