#pragma once

#include <cstdint>
#include <optional>

#include "picdisc/laurent.hpp"
#include "picdisc/trunc.hpp"

namespace picdisc {

/*
 * Higher derivation of rank p^depth - 1 on k[t^{+-1}], optionally extended
 * to the disc ring k[t^{+-1}][z]. Internally a ring homomorphism into the
 * truncated polynomial ring, determined by the images of t and z. The
 * standard derivation sends t to t + T; an extension sends z to c*z for a
 * unit datum c with constant coefficient 1.
 */
class HigherDerivation {
public:
    static HigherDerivation standard(const FieldPtr& k, std::uint32_t depth);

    HigherDerivation extend_to_disc(const TruncElem<LaurentPoly>& c) const;

    const FieldPtr& field() const { return fld_; }
    std::uint32_t depth() const { return depth_; }
    std::size_t rank() const { return image_t_.rank(); }
    std::uint64_t index() const; // p^depth
    bool extended() const { return z_datum_.has_value(); }
    const TruncElem<LaurentPoly>& image_t() const { return image_t_; }
    const TruncElem<LaurentPoly>& z_datum() const;

    TruncElem<LaurentPoly> apply(const LaurentPoly& f) const;

    bool convolution_check(const LaurentPoly& a, const LaurentPoly& b) const;

    struct HypResult {
        std::uint64_t mu;
        std::uint32_t n;
        bool holds;
    };
    // mu: first nonvanishing level; n: least n' with rank < p^{n'}.
    // holds when the claimed subring index equals p^n and level mu takes a
    // unit value on a generator.
    HypResult hyp_check(std::uint64_t extension_index) const;

    bool is_constant(const LaurentPoly& f) const;

private:
    HigherDerivation(FieldPtr fld, std::uint32_t depth, TruncElem<LaurentPoly> image_t,
                     std::optional<TruncElem<LaurentPoly>> z_datum);

    TruncElem<LaurentPoly> image_of_term(const FqElem& c, std::int64_t et,
                                         std::int64_t ez) const;

    FieldPtr fld_;
    std::uint32_t depth_;
    TruncElem<LaurentPoly> image_t_;
    TruncElem<LaurentPoly> image_t_inv_;
    std::optional<TruncElem<LaurentPoly>> z_datum_;
};

} // namespace picdisc
