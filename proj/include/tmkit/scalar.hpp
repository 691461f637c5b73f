#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tmkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

double to_double(const Rational& r);

/// "p" or "p/q", lowest terms, q > 0.
std::string rational_text(const Rational& r);

/**
 * QReal: an exact element a + b*sqrt(2) of the real quadratic field Q(sqrt2).
 *
 * Rationals are kept in lowest terms with positive denominator (boost::rational
 * maintains that), so equality is plain structural equality of (a, b).
 * Ordering is the exact numeric order; it is decidable because sqrt(2) is
 * irrational, so a + b*sqrt2 = 0 only when a = b = 0.
 */
class QReal {
  public:
    QReal() = default;
    QReal(int v) : a_(v) {} // NOLINT(google-explicit-constructor)
    QReal(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
    QReal(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QReal sqrt2(Rational coeff = Rational(1)) { return QReal(Rational(0), std::move(coeff)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign: -1, 0, or +1.
    int sign() const;

    friend QReal operator+(const QReal& x, const QReal& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QReal operator-(const QReal& x, const QReal& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QReal operator-(const QReal& x) { return {-x.a_, -x.b_}; }
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    friend QReal operator*(const QReal& x, const QReal& y) {
        return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }

    bool operator==(const QReal&) const = default;
    std::strong_ordering operator<=>(const QReal& other) const {
        switch ((*this - other).sign()) {
            case -1: return std::strong_ordering::less;
            case 0: return std::strong_ordering::equal;
            default: return std::strong_ordering::greater;
        }
    }

    double to_double() const;

  private:
    Rational a_{0};
    Rational b_{0};
};

/**
 * Scalar: an exact element of the field Q(sqrt2, i), stored as re + im*i with
 * QReal components. This is the amplitude/probability value type throughout.
 * Closed under add, sub, mul, negate and conjugate; no division is exposed.
 */
class Scalar {
  public:
    Scalar() = default;
    Scalar(int v) : re_(v) {} // NOLINT(google-explicit-constructor)
    Scalar(QReal re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    Scalar(QReal re, QReal im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i(QReal coeff = QReal(1)) { return {QReal(), std::move(coeff)}; }

    const QReal& re() const { return re_; }
    const QReal& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return {re_, -im_}; }
    QReal abs2() const { return re_ * re_ + im_ * im_; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
    friend Scalar operator-(const Scalar& x) { return {-x.re_, -x.im_}; }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }

    bool operator==(const Scalar&) const = default;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  private:
    QReal re_{};
    QReal im_{};
};

/// Componentwise |float(s) - float(t)| <= tol. tol must be positive.
bool approx_eq(const Scalar& s, const Scalar& t, double tol);

/// Canonical text: "0", "1/2", "1/2*sqrt2", "1 - 1/2*sqrt2".
std::string qreal_text(const QReal& q);

/// Canonical text: pure reals print as the QReal; anything with an imaginary
/// part prints both parts, e.g. "0 + 1/2*sqrt2 i", "1/2 - 1/2 i".
std::string scalar_text(const Scalar& s);

/// Parses the textual scalar form: signed atoms `R`, `R*sqrt2`, `R i`,
/// `R*sqrt2 i`, `sqrt2`, `i` joined by + or -. Returns nullopt and fills
/// *err on anything outside the field (decimals, other radicals, ...).
std::optional<Scalar> parse_scalar(std::string_view text, std::string* err = nullptr);

} // namespace tmkit
