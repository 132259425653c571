#include "picdisc/power_series.hpp"

#include <map>
#include <stdexcept>

namespace picdisc {

namespace {

struct BasisTable {
    std::vector<PowSeries::Exps> monomials;
    std::vector<std::size_t> lookup; // stride (cap+1)^2, (cap+1), 1
    int cap = 0;

    std::size_t rank(const PowSeries::Exps& e) const {
        const std::size_t s = static_cast<std::size_t>(cap + 1);
        return (static_cast<std::size_t>(e[0]) * s + e[1]) * s + e[2];
    }
};

const BasisTable& basis_table(int nvars, int cap) {
    static std::map<std::pair<int, int>, BasisTable> cache;
    auto key = std::make_pair(nvars, cap);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    BasisTable t;
    t.cap = cap;
    const std::size_t s = static_cast<std::size_t>(cap + 1);
    t.lookup.assign(s * s * s, SIZE_MAX);
    for (int d = 0; d <= cap; ++d) {
        PowSeries::Exps e{0, 0, 0};
        // enumerate tuples of total degree d, lexicographic in (e0, e1)
        for (int a = d; a >= 0; --a) {
            if (nvars == 1 && a != d) continue;
            for (int b = d - a; b >= 0; --b) {
                if (nvars <= 2 && b != d - a) continue;
                e = {a, b, d - a - b};
                if (nvars < 3 && e[2] != 0) continue;
                if (nvars < 2 && e[1] != 0) continue;
                t.lookup[t.rank(e)] = t.monomials.size();
                t.monomials.push_back(e);
            }
        }
    }
    return cache.emplace(key, std::move(t)).first->second;
}

} // namespace

PowSeries::PowSeries(RFieldPtr fld, int nvars, int cap)
    : fld_(std::move(fld)), nvars_(nvars), cap_(cap) {
    if (!fld_)
        throw std::invalid_argument("power series needs a field");
    if (nvars_ < 1 || nvars_ > 3)
        throw std::invalid_argument("one to three variables supported");
    if (cap_ < 1 || cap_ > 64)
        throw std::invalid_argument("degree cap out of range");
    c_.assign(basis_table(nvars_, cap_).monomials.size(), fld_->zero());
}

const std::vector<PowSeries::Exps>& PowSeries::basis(int nvars, int cap) {
    return basis_table(nvars, cap).monomials;
}

std::size_t PowSeries::index_of(const Exps& e) const {
    for (int i = 0; i < 3; ++i) {
        if (e[i] < 0 || (i >= nvars_ && e[i] != 0))
            throw std::invalid_argument("exponent outside variable range");
    }
    if (e[0] + e[1] + e[2] > cap_)
        throw std::invalid_argument("exponent beyond degree cap");
    const BasisTable& t = basis_table(nvars_, cap_);
    return t.lookup[t.rank(e)];
}

PowSeries PowSeries::variable(const RFieldPtr& fld, int nvars, int which, int cap) {
    PowSeries r(fld, nvars, cap);
    if (which < 0 || which >= nvars)
        throw std::invalid_argument("variable index out of range");
    Exps e{0, 0, 0};
    e[which] = 1;
    r.set_coeff(e, fld->one());
    return r;
}

PowSeries PowSeries::constant(const RamifiedElem& c, int nvars, int cap) {
    PowSeries r(c.field(), nvars, cap);
    r.set_coeff({0, 0, 0}, c);
    return r;
}

RamifiedElem PowSeries::coeff(const Exps& e) const { return c_[index_of(e)]; }

RamifiedElem PowSeries::coeff1(int d) const { return coeff({d, 0, 0}); }

void PowSeries::set_coeff(const Exps& e, const RamifiedElem& v) {
    if (!v.attached() || !v.field()->same(*fld_))
        throw std::invalid_argument("coefficient from wrong field");
    c_[index_of(e)] = v;
}

void PowSeries::check_shape(const PowSeries& o) const {
    if (nvars_ != o.nvars_ || cap_ != o.cap_)
        throw std::invalid_argument("series shape mismatch");
    if (!fld_->same(*o.fld_))
        throw std::invalid_argument("field mismatch");
}

PowSeries PowSeries::operator+(const PowSeries& o) const {
    check_shape(o);
    PowSeries r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PowSeries PowSeries::operator-(const PowSeries& o) const {
    check_shape(o);
    PowSeries r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

PowSeries PowSeries::operator-() const {
    PowSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowSeries PowSeries::operator*(const PowSeries& o) const {
    check_shape(o);
    const auto& mono = basis_table(nvars_, cap_).monomials;
    PowSeries r(fld_, nvars_, cap_);
    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].exact_zero()) ia.push_back(i);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        if (!o.c_[i].exact_zero()) ib.push_back(i);
    const BasisTable& t = basis_table(nvars_, cap_);
    for (std::size_t i : ia) {
        const Exps& ea = mono[i];
        const int da = ea[0] + ea[1] + ea[2];
        for (std::size_t j : ib) {
            const Exps& eb = mono[j];
            const int db = eb[0] + eb[1] + eb[2];
            if (da + db > cap_) continue;
            const Exps es{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            const std::size_t k = t.lookup[t.rank(es)];
            r.c_[k] = r.c_[k] + c_[i] * o.c_[j];
        }
    }
    return r;
}

PowSeries PowSeries::scaled(const RamifiedElem& s) const {
    PowSeries r = *this;
    for (auto& c : r.c_)
        if (!c.exact_zero()) c = c * s;
    return r;
}

PowSeries PowSeries::pow_trunc(std::uint64_t n) const {
    PowSeries r = constant(fld_->one(), nvars_, cap_);
    PowSeries b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

PowSeries PowSeries::subst(const std::vector<PowSeries>& args) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw std::invalid_argument("one substitution argument per variable");
    for (const auto& a : args) {
        a.check_shape(args[0]);
        if (!a.field()->same(*fld_))
            throw std::invalid_argument("field mismatch");
        if (a.cap() != cap_)
            throw std::invalid_argument("substitution must preserve the degree cap");
        if (!a.coeff({0, 0, 0}).is_zero())
            throw std::invalid_argument("substitution needs vanishing constant terms");
    }
    const int out_vars = args[0].nvars();
    const PowSeries one_out = constant(fld_->one(), out_vars, cap_);

    // powers of each argument, computed on demand
    std::vector<std::vector<PowSeries>> pows(args.size());
    auto power = [&](std::size_t which, int d) -> const PowSeries& {
        auto& list = pows[which];
        if (list.empty()) list.push_back(one_out);
        while (static_cast<int>(list.size()) <= d)
            list.push_back(list.back() * args[which]);
        return list[static_cast<std::size_t>(d)];
    };

    const auto& mono = basis_table(nvars_, cap_).monomials;
    PowSeries res(fld_, out_vars, cap_);
    // group by the exponent of the first variable to share multiplications
    std::map<int, PowSeries> grouped;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].exact_zero()) continue;
        const Exps& e = mono[i];
        PowSeries tail = one_out;
        if (nvars_ >= 2 && e[1] > 0) tail = power(1, e[1]);
        if (nvars_ >= 3 && e[2] > 0) tail = tail * power(2, e[2]);
        PowSeries piece = tail.scaled(c_[i]);
        auto it = grouped.find(e[0]);
        if (it == grouped.end())
            grouped.emplace(e[0], std::move(piece));
        else
            it->second = it->second + piece;
    }
    for (const auto& [d0, part] : grouped) {
        if (d0 == 0)
            res = res + part;
        else
            res = res + power(0, d0) * part;
    }
    return res;
}

PowSeries PowSeries::promoted(int nvars, const std::vector<int>& slots) const {
    if (static_cast<int>(slots.size()) != nvars_)
        throw std::invalid_argument("one slot per variable");
    for (int s : slots)
        if (s < 0 || s >= nvars)
            throw std::invalid_argument("slot out of range");
    const auto& mono = basis_table(nvars_, cap_).monomials;
    PowSeries r(fld_, nvars, cap_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].exact_zero()) continue;
        const Exps& e = mono[i];
        Exps out{0, 0, 0};
        for (int v = 0; v < nvars_; ++v) out[slots[static_cast<std::size_t>(v)]] += e[v];
        r.set_coeff(out, c_[i]);
    }
    return r;
}

bool PowSeries::operator==(const PowSeries& o) const {
    check_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string PowSeries::str() const {
    const auto& mono = basis_table(nvars_, cap_).monomials;
    static const char* names[3] = {"X", "Y", "Z"};
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + c_[i].str() + "]";
        for (int v = 0; v < nvars_; ++v) {
            if (mono[i][v] == 0) continue;
            s += "*";
            s += names[v];
            if (mono[i][v] > 1) s += "^" + std::to_string(mono[i][v]);
        }
    }
    if (s.empty()) return "0";
    return s;
}

} // namespace picdisc
