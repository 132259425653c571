#include "picdisc/picard.hpp"

#include <stdexcept>

namespace picdisc {

namespace {

std::uint64_t p_power(std::uint32_t p, std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n; ++i) r *= p;
    return r;
}

// depth from a truncated element: rank + 1 must be a power of p
std::uint32_t depth_of_rank(std::uint32_t p, std::size_t rank) {
    std::uint64_t pn = 1;
    std::uint32_t d = 0;
    while (pn < rank + 1) {
        pn *= p;
        ++d;
    }
    if (pn != rank + 1)
        throw std::invalid_argument("rank must be p^m - 1");
    return d;
}

} // namespace

LogDerivElem log_derivative(const HigherDerivation& hd, const LaurentPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("zero has no logarithmic derivative");
    const TruncElem<LaurentPoly> df = hd.apply(f);
    std::vector<LaurentPoly> out;
    out.reserve(hd.rank() + 1);
    for (std::size_t j = 0; j <= hd.rank(); ++j) {
        auto q = divide_exact(df.coeff(j), f);
        if (!q)
            throw std::domain_error("not in L_A");
        out.push_back(*q);
    }
    return LogDerivElem{TruncElem<LaurentPoly>(std::move(out)), f};
}

std::vector<TruncElem<LaurentPoly>> unit_log_group(const HigherDerivation& hd) {
    const TruncElem<LaurentPoly> w0 = log_derivative(hd, LaurentPoly::t_power(hd.field(), 1)).value;
    const std::uint64_t n = hd.index();
    std::vector<TruncElem<LaurentPoly>> out;
    out.reserve(n);
    TruncElem<LaurentPoly> cur = TruncElem<LaurentPoly>::one(w0.coeff(0), hd.rank());
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(cur);
        if (i + 1 < n) cur = cur * w0;
    }
    return out;
}

std::uint64_t class_order(const TruncElem<LaurentPoly>& c) {
    if (!c.coeff(0).is_one())
        throw std::invalid_argument("c_0 must be 1");
    for (std::size_t j = 0; j <= c.rank(); ++j)
        if (c.coeff(j).has_z())
            throw std::invalid_argument("disc datum must be z-free");
    const FieldPtr& k = c.coeff(0).field();
    const std::uint32_t depth = depth_of_rank(k->p(), c.rank());
    const HigherDerivation hd = HigherDerivation::standard(k, depth);
    const auto lprime = unit_log_group(hd);
    const std::uint64_t pm = p_power(k->p(), depth);

    TruncElem<LaurentPoly> cj = c;
    for (std::uint64_t j = 1; j <= pm; ++j) {
        for (const auto& w : lprime)
            if (cj == w) return j;
        cj = cj * c;
    }
    throw std::logic_error("class order exceeded the subring index");
}

std::optional<Decomposition> decompose(const HigherDerivation& hd, const LaurentPoly& f) {
    const TruncElem<LaurentPoly>& c = hd.z_datum();
    if (f.is_zero())
        throw std::invalid_argument("zero has no logarithmic derivative");
    const TruncElem<LaurentPoly> df = hd.apply(f);
    std::vector<LaurentPoly> ratio;
    ratio.reserve(hd.rank() + 1);
    for (std::size_t j = 0; j <= hd.rank(); ++j) {
        auto q = divide_exact(df.coeff(j), f);
        if (!q) return std::nullopt;
        ratio.push_back(*q);
    }
    const TruncElem<LaurentPoly> target(std::move(ratio));

    const auto w0 = log_derivative(hd, LaurentPoly::t_power(hd.field(), 1)).value;
    const std::uint64_t pm = hd.index();
    TruncElem<LaurentPoly> cj = TruncElem<LaurentPoly>::one(c.coeff(0), hd.rank());
    for (std::uint64_t j = 0; j < pm; ++j) {
        TruncElem<LaurentPoly> w = cj;
        for (std::uint64_t i = 0; i < pm; ++i) {
            if (w == target) return Decomposition{j, i};
            w = w * w0;
        }
        cj = cj * c;
    }
    throw std::logic_error("integral logarithmic derivative outside c^j * w^i");
}

void DivisorOnLaurent::add(const FqPoly& prime, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms_.find(prime);
    if (it == terms_.end()) {
        terms_.emplace(prime, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
}

DivisorOnLaurent DivisorOnLaurent::operator+(const DivisorOnLaurent& o) const {
    DivisorOnLaurent r = *this;
    for (const auto& [g, m] : o.terms_) r.add(g, m);
    return r;
}

DivisorOnLaurent DivisorOnLaurent::operator-(const DivisorOnLaurent& o) const {
    DivisorOnLaurent r = *this;
    for (const auto& [g, m] : o.terms_) r.add(g, -m);
    return r;
}

bool DivisorOnLaurent::operator==(const DivisorOnLaurent& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

std::string DivisorOnLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, m] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(m) + "*(" + g.str() + ")";
    }
    return s;
}

DivisorOnLaurent divisor(const LaurentPoly& f, std::uint64_t seed) {
    if (f.is_zero())
        throw std::invalid_argument("zero has no divisor");
    if (f.has_z())
        throw std::invalid_argument("divisor requires a z-free element");
    auto [poly, shift] = f.to_poly_parts();
    (void)shift;
    DivisorOnLaurent d(f.field());
    for (const auto& [g, mult] : poly_factor(poly, seed).factors) {
        if (g.degree() == 1 && g.coeff(0).is_zero()) continue; // the prime t is a unit here
        d.add(g, static_cast<std::int64_t>(mult));
    }
    return d;
}

DivisorOnLaurent ramification_map(const DivisorOnLaurent& sub, std::uint32_t m) {
    if (m == 0)
        throw std::invalid_argument("descent depth must be positive");
    const std::uint64_t pm = p_power(sub.field()->p(), m);
    DivisorOnLaurent r(sub.field());
    for (const auto& [g, mult] : sub.terms())
        r.add(frobenius_descend(g, m), mult * static_cast<std::int64_t>(pm));
    return r;
}

LogDerivElem phi_map(const HigherDerivation& hd, const DivisorOnLaurent& sub) {
    const DivisorOnLaurent pulled = ramification_map(sub, hd.depth());
    LaurentPoly num = LaurentPoly::one(hd.field());
    LaurentPoly den = LaurentPoly::one(hd.field());
    for (const auto& [g, mult] : pulled.terms()) {
        const LaurentPoly lg = LaurentPoly::from_poly(g);
        LaurentPoly acc = LaurentPoly::one(hd.field());
        const std::uint64_t k = static_cast<std::uint64_t>(mult > 0 ? mult : -mult);
        for (std::uint64_t i = 0; i < k; ++i) acc = acc * lg;
        if (mult > 0)
            num = num * acc;
        else
            den = den * acc;
    }
    const LogDerivElem ln = log_derivative(hd, num);
    const LogDerivElem ld = log_derivative(hd, den);
    LogDerivElem out{ln.value * ld.value.inv(), std::nullopt};
    if (den.is_one()) out.argument = num;
    return out;
}

} // namespace picdisc
