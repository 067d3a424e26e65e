#pragma once

#include "qlogic/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace qlogic {

/// Gaussian rational re + im*i. Every state-space entry lives in this field.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse. Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Grammar: rational | [rational] ("+"|"-") [rational] "i", plus the bare
/// imaginary forms "i", "-i", "2i", "-1/3i" the printer emits.
Scalar parse_scalar(std::string_view text);

/// Canonical form: no "+0i", unit imaginary coefficient printed as "i".
std::string to_string(const Scalar& z);

std::ostream& operator<<(std::ostream& os, const Scalar& z);

} // namespace qlogic
