#include "picdisc/derivation.hpp"

#include <stdexcept>

namespace picdisc {

namespace {

std::uint64_t checked_p_power(std::uint32_t p, std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (r > (1ULL << 40) / p)
            throw std::invalid_argument("rank too large");
        r *= p;
    }
    return r;
}

} // namespace

HigherDerivation::HigherDerivation(FieldPtr fld, std::uint32_t depth,
                                   TruncElem<LaurentPoly> image_t,
                                   std::optional<TruncElem<LaurentPoly>> z_datum)
    : fld_(std::move(fld)),
      depth_(depth),
      image_t_(std::move(image_t)),
      image_t_inv_(image_t_.inv()),
      z_datum_(std::move(z_datum)) {}

HigherDerivation HigherDerivation::standard(const FieldPtr& k, std::uint32_t depth) {
    if (depth == 0)
        throw std::invalid_argument("depth must be positive");
    const std::uint64_t pm = checked_p_power(k->p(), depth);
    const std::size_t rank = static_cast<std::size_t>(pm - 1);
    std::vector<LaurentPoly> img(rank + 1, LaurentPoly::zero(k));
    img[0] = LaurentPoly::t_power(k, 1);
    if (rank >= 1) img[1] = LaurentPoly::one(k);
    return HigherDerivation(k, depth, TruncElem<LaurentPoly>(std::move(img)), std::nullopt);
}

HigherDerivation HigherDerivation::extend_to_disc(const TruncElem<LaurentPoly>& c) const {
    if (c.rank() != rank())
        throw std::invalid_argument("rank mismatch in truncated ring");
    if (!c.coeff(0).is_one())
        throw std::invalid_argument("c_0 must be 1");
    for (std::size_t j = 0; j <= c.rank(); ++j)
        if (c.coeff(j).has_z())
            throw std::invalid_argument("disc datum must be z-free");
    return HigherDerivation(fld_, depth_, image_t_, c);
}

std::uint64_t HigherDerivation::index() const {
    return checked_p_power(fld_->p(), depth_);
}

const TruncElem<LaurentPoly>& HigherDerivation::z_datum() const {
    if (!z_datum_)
        throw std::invalid_argument("derivation is not extended to the disc");
    return *z_datum_;
}

TruncElem<LaurentPoly> HigherDerivation::image_of_term(const FqElem& c, std::int64_t et,
                                                       std::int64_t ez) const {
    TruncElem<LaurentPoly> acc =
        TruncElem<LaurentPoly>::constant(LaurentPoly::term(c, 0, 0), rank());
    if (et > 0)
        acc = acc * image_t_.pow(static_cast<std::uint64_t>(et));
    else if (et < 0)
        acc = acc * image_t_inv_.pow(static_cast<std::uint64_t>(-et));
    if (ez > 0) {
        if (!z_datum_)
            throw std::invalid_argument("element uses z but derivation has no z image");
        // image of z is c*z, so image of z^b picks up a factor z^b
        const LaurentPoly zb = LaurentPoly::term(fld_->one(), 0, ez);
        TruncElem<LaurentPoly> zpart =
            z_datum_->pow(static_cast<std::uint64_t>(ez)) *
            TruncElem<LaurentPoly>::constant(zb, rank());
        acc = acc * zpart;
    }
    return acc;
}

TruncElem<LaurentPoly> HigherDerivation::apply(const LaurentPoly& f) const {
    TruncElem<LaurentPoly> acc =
        TruncElem<LaurentPoly>::constant(LaurentPoly::zero(fld_), rank());
    for (const auto& [e, c] : f.terms())
        acc = acc + image_of_term(c, e.t, e.z);
    return acc;
}

bool HigherDerivation::convolution_check(const LaurentPoly& a, const LaurentPoly& b) const {
    return apply(a * b) == apply(a) * apply(b);
}

HigherDerivation::HypResult HigherDerivation::hyp_check(std::uint64_t extension_index) const {
    HypResult res{0, 0, false};
    for (std::size_t j = 1; j <= rank(); ++j) {
        const bool t_hit = !image_t_.coeff(j).is_zero();
        const bool z_hit = z_datum_ && !z_datum_->coeff(j).is_zero();
        if (t_hit || z_hit) {
            res.mu = j;
            break;
        }
    }
    std::uint64_t pn = 1;
    while (pn <= rank()) {
        pn *= fld_->p();
        ++res.n;
    }
    const bool witness = res.mu > 0 && image_t_.coeff(res.mu).is_unit();
    res.holds = witness && extension_index == pn;
    return res;
}

bool HigherDerivation::is_constant(const LaurentPoly& f) const {
    const TruncElem<LaurentPoly> d = apply(f);
    for (std::size_t j = 1; j <= rank(); ++j)
        if (!d.coeff(j).is_zero()) return false;
    return true;
}

} // namespace picdisc
