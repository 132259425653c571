#include "picdisc/encode.hpp"

#include <cctype>
#include <stdexcept>

namespace picdisc {

namespace {

std::string format_term(const FqElem& c, std::int64_t et, std::int64_t ez) {
    std::string s = c.str();
    if (et != 0) {
        s += "*t";
        if (et != 1) s += "^" + std::to_string(et);
    }
    if (ez != 0) {
        s += "*z";
        if (ez != 1) s += "^" + std::to_string(ez);
    }
    return s;
}

struct Lexer {
    explicit Lexer(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("expected '") + c + "' at offset " +
                                        std::to_string(pos));
    }

    bool accept_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        const std::size_t end = pos + w.size();
        if (end < text.size() &&
            std::isalnum(static_cast<unsigned char>(text[end])))
            return false;
        pos = end;
        return true;
    }

    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected a number at offset " + std::to_string(pos));
        return text.substr(start, pos - start);
    }

    std::int64_t read_signed_int() {
        bool neg = accept('-');
        if (!neg) accept('+');
        const std::string d = read_digits();
        if (d.size() > 18)
            throw std::invalid_argument("exponent too large");
        const std::int64_t v = std::stoll(d);
        return neg ? -v : v;
    }

    const std::string& text;
    std::size_t pos = 0;
};

std::int64_t read_exponent(Lexer& lx, bool allow_negative) {
    if (!lx.accept('^')) return 1;
    const std::int64_t e = lx.read_signed_int();
    if (!allow_negative && e < 0)
        throw std::invalid_argument("negative exponent not allowed here");
    return e;
}

} // namespace

std::string format_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += format_term(c, e.t, e.z);
    }
    return s;
}

std::string format_trunc(const TruncElem<LaurentPoly>& c) {
    std::string s;
    for (std::size_t j = 0; j <= c.rank(); ++j) {
        const LaurentPoly& a = c.coeff(j);
        if (a.is_zero() && j > 0) continue;
        if (!s.empty()) s += " + ";
        std::string part = format_laurent(a);
        if (j > 0) {
            if (a.terms().size() > 1) part = "(" + part + ")";
            part += "*T";
            if (j > 1) part += "^" + std::to_string(j);
        }
        s += part;
    }
    return s;
}

std::string format_tate(const TateElem& a) {
    if (a.terms().empty()) return "0";
    std::string s;
    for (const auto& [j, c] : a.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (j == 1) s += "*z";
        else if (j > 1) s += "*z^" + std::to_string(j);
    }
    return s;
}

namespace {

// one product of factors: code and/or t, z powers
struct LaurentTerm {
    FqElem coeff;
    std::int64_t et = 0;
    std::int64_t ez = 0;
};

LaurentTerm parse_laurent_factors(Lexer& lx, const FieldPtr& fld) {
    LaurentTerm term{fld->one(), 0, 0};
    bool first = true;
    while (true) {
        if (lx.peek_digit()) {
            const std::string d = lx.read_digits();
            if (d.size() > 18)
                throw std::invalid_argument("coefficient code too large");
            const std::uint64_t code = std::stoull(d);
            if (code >= fld->q())
                throw std::invalid_argument("coefficient code out of range");
            term.coeff = term.coeff * fld->from_code(code);
        } else if (lx.accept_word("t")) {
            term.et += read_exponent(lx, true);
        } else if (lx.accept_word("z")) {
            term.ez += read_exponent(lx, false);
        } else {
            if (first)
                throw std::invalid_argument("expected a term at offset " +
                                            std::to_string(lx.pos));
            break;
        }
        first = false;
        // leave the separator alone unless the next factor is ours
        const std::size_t save = lx.pos;
        if (!lx.accept('*')) break;
        if (!(lx.peek_digit() || lx.peek() == 't' || lx.peek() == 'z')) {
            lx.pos = save;
            break;
        }
    }
    return term;
}

} // namespace

LaurentPoly parse_laurent(const std::string& text, const FieldPtr& fld) {
    Lexer lx(text);
    LaurentPoly acc = LaurentPoly::zero(fld);
    bool neg = lx.accept('-');
    while (true) {
        const LaurentTerm term = parse_laurent_factors(lx, fld);
        FqElem c = neg ? -term.coeff : term.coeff;
        acc = acc + LaurentPoly::term(c, term.et, term.ez);
        if (lx.accept('+'))
            neg = false;
        else if (lx.accept('-'))
            neg = true;
        else
            break;
    }
    if (!lx.done())
        throw std::invalid_argument("trailing input at offset " + std::to_string(lx.pos));
    return acc;
}

TruncElem<LaurentPoly> parse_trunc(const std::string& text, const FieldPtr& fld,
                                   std::size_t rank) {
    Lexer lx(text);
    std::vector<LaurentPoly> coeffs(rank + 1, LaurentPoly::zero(fld));
    bool neg = lx.accept('-');
    while (true) {
        // product of parenthesized or simple factors, at most one T power
        LaurentPoly part = LaurentPoly::one(fld);
        std::int64_t tslot = 0;
        bool first = true;
        while (true) {
            if (lx.accept('(')) {
                std::size_t depth = 1;
                std::size_t start = lx.pos;
                while (lx.pos < lx.text.size() && depth > 0) {
                    if (lx.text[lx.pos] == '(') ++depth;
                    if (lx.text[lx.pos] == ')') --depth;
                    ++lx.pos;
                }
                if (depth != 0)
                    throw std::invalid_argument("unbalanced parentheses");
                part = part * parse_laurent(lx.text.substr(start, lx.pos - 1 - start), fld);
            } else if (lx.accept_word("T")) {
                tslot += read_exponent(lx, false);
            } else if (lx.peek_digit() || lx.peek() == 't' || lx.peek() == 'z') {
                const LaurentTerm term = parse_laurent_factors(lx, fld);
                part = part * LaurentPoly::term(term.coeff, term.et, term.ez);
            } else {
                if (first)
                    throw std::invalid_argument("expected a term at offset " +
                                                std::to_string(lx.pos));
                break;
            }
            first = false;
            if (!lx.accept('*')) break;
        }
        if (tslot > static_cast<std::int64_t>(rank))
            throw std::invalid_argument("T power beyond rank");
        if (neg) part = -part;
        coeffs[static_cast<std::size_t>(tslot)] =
            coeffs[static_cast<std::size_t>(tslot)] + part;
        if (lx.accept('+'))
            neg = false;
        else if (lx.accept('-'))
            neg = true;
        else
            break;
    }
    if (!lx.done())
        throw std::invalid_argument("trailing input at offset " + std::to_string(lx.pos));
    return TruncElem<LaurentPoly>(std::move(coeffs));
}

TateElem parse_tate(const std::string& text, const RFieldPtr& fld) {
    Lexer lx(text);
    TateElem acc(fld);
    bool neg = lx.accept('-');
    while (true) {
        RamifiedElem c = fld->one();
        std::int64_t zslot = 0;
        bool first = true;
        while (true) {
            if (lx.peek_digit()) {
                c = c * fld->from_mpz(mpz_class(lx.read_digits(), 10));
            } else if (lx.accept_word("pi")) {
                c = c.mul_pi(read_exponent(lx, true));
            } else if (lx.accept_word("z")) {
                zslot += read_exponent(lx, false);
            } else {
                if (first)
                    throw std::invalid_argument("expected a term at offset " +
                                                std::to_string(lx.pos));
                break;
            }
            first = false;
            if (!lx.accept('*')) break;
        }
        if (neg) c = -c;
        acc.set_coeff(zslot, acc.coeff(zslot) + c);
        if (lx.accept('+'))
            neg = false;
        else if (lx.accept('-'))
            neg = true;
        else
            break;
    }
    if (!lx.done())
        throw std::invalid_argument("trailing input at offset " + std::to_string(lx.pos));
    return acc;
}

RamifiedElem parse_ramified(const std::string& text, const RFieldPtr& fld) {
    const TateElem t = parse_tate(text, fld);
    for (const auto& [j, c] : t.terms())
        if (j != 0)
            throw std::invalid_argument("z is not allowed in a scalar");
    return t.coeff(0);
}

} // namespace picdisc
