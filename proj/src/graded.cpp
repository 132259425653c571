#include "picdisc/graded.hpp"

#include <stdexcept>

namespace picdisc {

TateElem TateElem::term(const RamifiedElem& c, std::int64_t zexp) {
    if (!c.attached())
        throw std::invalid_argument("unattached coefficient");
    if (zexp < 0)
        throw std::invalid_argument("negative z exponent");
    TateElem r(c.field());
    if (!c.exact_zero()) r.terms_.emplace(zexp, c);
    return r;
}

bool TateElem::is_zero() const {
    for (const auto& [j, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

RamifiedElem TateElem::coeff(std::int64_t j) const {
    auto it = terms_.find(j);
    if (it == terms_.end()) return fld_->zero();
    return it->second;
}

void TateElem::set_coeff(std::int64_t j, const RamifiedElem& c) {
    if (j < 0)
        throw std::invalid_argument("negative z exponent");
    if (c.exact_zero())
        terms_.erase(j);
    else
        terms_[j] = c;
}

TateElem TateElem::operator+(const TateElem& o) const {
    TateElem r = *this;
    for (const auto& [j, c] : o.terms_)
        r.set_coeff(j, r.coeff(j) + c);
    return r;
}

TateElem TateElem::operator-(const TateElem& o) const {
    TateElem r = *this;
    for (const auto& [j, c] : o.terms_)
        r.set_coeff(j, r.coeff(j) - c);
    return r;
}

TateElem TateElem::operator*(const TateElem& o) const {
    TateElem r(fld_);
    for (const auto& [ja, ca] : terms_)
        for (const auto& [jb, cb] : o.terms_)
            r.set_coeff(ja + jb, r.coeff(ja + jb) + ca * cb);
    return r;
}

std::string TateElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [j, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (j == 1) s += "*z";
        else if (j > 1) s += "*z^" + std::to_string(j);
    }
    return s;
}

ValExp spectral_degree(const TateElem& a) {
    bool found = false;
    std::int64_t best = 0;
    for (const auto& [j, c] : a.terms()) {
        if (c.is_zero()) continue;
        const std::int64_t s = c.shift();
        if (!found || s < best) {
            best = s;
            found = true;
        }
    }
    if (!found)
        throw std::domain_error("zero-indistinguishable at working precision");
    for (const auto& [j, c] : a.terms()) {
        if (!c.is_zero()) continue;
        if (c.abs_prec() < best)
            throw std::domain_error("zero-indistinguishable at working precision");
    }
    return ValExp::make(best, a.field()->e());
}

GradedElem principal_symbol(const TateElem& a) {
    const ValExp deg = spectral_degree(a);
    std::int64_t w = 0;
    bool found = false;
    for (const auto& [j, c] : a.terms()) {
        if (c.is_zero()) continue;
        if (!found || c.shift() < w) {
            w = c.shift();
            found = true;
        }
    }
    const FieldPtr res_field = FqField::make(a.field()->p(), 1);
    LaurentPoly sym = LaurentPoly::zero(res_field);
    for (const auto& [j, c] : a.terms()) {
        if (c.is_zero()) continue;
        if (c.shift() != w) continue;
        const RamifiedElem u = c.mul_pi(-c.shift());
        const FqElem r = res_field->from_int(static_cast<std::int64_t>(u.unit_residue()));
        sym = sym + LaurentPoly::term(r, w, j);
    }
    return GradedElem{deg, sym};
}

} // namespace picdisc
