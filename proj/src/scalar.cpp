#include "tmkit/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace tmkit {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

int QReal::sign() const {
    const int sa = a_ < 0 ? -1 : (a_ > 0 ? 1 : 0);
    const int sb = b_ < 0 ? -1 : (b_ > 0 ? 1 : 0);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against sqrt2*|b| via a^2 vs 2 b^2.
    // a^2 = 2 b^2 is impossible for nonzero rationals, so no tie case.
    const Rational a2 = a_ * a_;
    const Rational b2 = Rational(2) * b_ * b_;
    if (a2 > b2) return sa;
    return sb;
}

double QReal::to_double() const {
    static const double kSqrt2 = std::sqrt(2.0);
    return tmkit::to_double(a_) + tmkit::to_double(b_) * kSqrt2;
}

bool approx_eq(const Scalar& s, const Scalar& t, double tol) {
    return std::abs(s.re().to_double() - t.re().to_double()) <= tol &&
           std::abs(s.im().to_double() - t.im().to_double()) <= tol;
}

std::string qreal_text(const QReal& q) {
    if (q.b() == 0) return rational_text(q.a());
    const std::string rad = rational_text(q.b() < 0 ? -q.b() : q.b()) + "*sqrt2";
    if (q.a() == 0) return (q.b() < 0 ? "-" : "") + rad;
    return rational_text(q.a()) + (q.b() < 0 ? " - " : " + ") + rad;
}

namespace {

// One signed atom of the canonical form. `radical` marks a *sqrt2 factor,
// `imaginary` a trailing i.
struct Atom {
    Rational coeff;
    bool radical = false;
    bool imaginary = false;
};

void append_atom(std::string& out, const Rational& coeff, bool radical, bool imaginary) {
    const bool neg = coeff < 0;
    const Rational mag = neg ? -coeff : coeff;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    out += rational_text(mag);
    if (radical) out += "*sqrt2";
    if (imaginary) out += " i";
}

} // namespace

std::string scalar_text(const Scalar& s) {
    if (s.im().is_zero()) return qreal_text(s.re());
    std::string out;
    if (s.re().is_zero()) {
        out = "0";
    } else {
        if (s.re().a() != 0) append_atom(out, s.re().a(), false, false);
        if (s.re().b() != 0) append_atom(out, s.re().b(), true, false);
    }
    if (s.im().a() != 0) append_atom(out, s.im().a(), false, true);
    if (s.im().b() != 0) append_atom(out, s.im().b(), true, true);
    return out;
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            // Must not be a prefix of a longer identifier.
            const std::size_t end = pos + w.size();
            if (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
                return false;
            pos = end;
            return true;
        }
        return false;
    }
    std::optional<Int> integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return Int(std::string(text.substr(start, pos - start)));
    }
};

} // namespace

std::optional<Scalar> parse_scalar(std::string_view text, std::string* err) {
    const auto fail = [&](const std::string& msg) -> std::optional<Scalar> {
        if (err) *err = msg;
        return std::nullopt;
    };

    Lexer lex{text};
    Scalar total;
    bool first = true;
    while (true) {
        if (lex.done()) {
            if (first) return fail("empty scalar");
            break;
        }
        int sign = 1;
        if (lex.eat('+')) {
            if (first) return fail("leading '+' in scalar");
        } else if (lex.eat('-')) {
            sign = -1;
        } else if (!first) {
            return fail("expected '+' or '-' between scalar terms");
        }

        Rational coeff;
        bool radical = false;
        if (lex.eat_word("sqrt2")) {
            coeff = Rational(1);
            radical = true;
        } else if (lex.eat_word("i")) {
            total = total + Scalar::i(QReal(Rational(sign)));
            first = false;
            continue;
        } else {
            auto num = lex.integer();
            if (!num) return fail("expected a rational, 'sqrt2' or 'i' in scalar");
            if (lex.peek() == '.') return fail("decimal literals are not part of the field; use p/q");
            Int den{1};
            if (lex.eat('/')) {
                auto d = lex.integer();
                if (!d) return fail("expected denominator after '/'");
                if (*d == 0) return fail("zero denominator");
                den = *d;
            }
            coeff = Rational(*num, den);
            if (lex.eat('*')) {
                if (!lex.eat_word("sqrt2")) return fail("only sqrt2 may follow '*'");
                radical = true;
            }
        }
        if (sign < 0) coeff = -coeff;
        const QReal part = radical ? QReal::sqrt2(coeff) : QReal(coeff);
        if (lex.eat_word("i")) {
            total = total + Scalar::i(part);
        } else {
            total = total + Scalar(part);
        }
        first = false;
    }
    return total;
}

} // namespace tmkit
