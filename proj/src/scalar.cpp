#include "qlogic/scalar.hpp"

#include "qlogic/error.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qlogic {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

// Digits only, no sign. `offset` is the 0-based position of `digits` in the
// original text, used for error positions.
Integer parse_digits(std::string_view digits, std::string_view whole, std::size_t offset) {
    if (digits.empty())
        throw ParseError("expected digits in " + quoted(whole), offset + 1);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(digits[k])))
            throw ParseError("unexpected character " + quoted(digits.substr(k, 1)) + " in " +
                                 quoted(whole),
                             offset + k + 1);
    }
    return Integer(std::string(digits), 10);
}

Rational parse_rational_at(std::string_view text, std::string_view whole, std::size_t offset) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto slash = text.find('/', pos);
    const auto num_text = text.substr(pos, slash == std::string_view::npos ? text.npos : slash - pos);
    Integer num = parse_digits(num_text, whole, offset + pos);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_digits(text.substr(slash + 1), whole, offset + slash + 1);
        if (den == 0)
            throw ParseError("zero denominator in " + quoted(text), offset + slash + 2);
    }
    if (negative)
        num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
    offset = 0;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::size_t offset = 0;
    auto body = trim(text, offset);
    return parse_rational_at(body, text, offset);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar Scalar::inverse() const {
    Rational n = norm2();
    if (sgn(n) == 0)
        throw std::domain_error("division by zero scalar");
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

Scalar parse_scalar(std::string_view text) {
    std::size_t offset = 0;
    const auto body = trim(text, offset);
    if (body.empty())
        throw ParseError("empty scalar", 1);
    if (body.back() != 'i')
        return Scalar(parse_rational_at(body, text, offset));

    const auto coef = body.substr(0, body.size() - 1);
    // The split between real and imaginary parts is the last sign that is not
    // the leading one.
    const auto split = coef.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) {
        if (coef.empty() || coef == "+")
            return Scalar(Rational(0), Rational(1));
        if (coef == "-")
            return Scalar(Rational(0), Rational(-1));
        return Scalar(Rational(0), parse_rational_at(coef, text, offset));
    }
    Rational re = parse_rational_at(coef.substr(0, split), text, offset);
    const auto mag = coef.substr(split + 1);
    Rational im(1);
    if (!mag.empty()) {
        if (mag.front() == '+' || mag.front() == '-')
            throw ParseError("unexpected sign " + quoted(mag.substr(0, 1)) + " in " + quoted(text),
                             offset + split + 2);
        im = parse_rational_at(mag, text, offset + split + 1);
    }
    if (coef[split] == '-')
        im = -im;
    return Scalar(std::move(re), std::move(im));
}

std::string to_string(const Scalar& z) {
    if (z.is_real())
        return to_string(z.re());
    const Rational mag = abs(z.im());
    std::string imag = (mag == 1 ? std::string() : to_string(mag)) + "i";
    if (sgn(z.re()) == 0)
        return (sgn(z.im()) < 0 ? "-" : "") + imag;
    return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << to_string(z); }

} // namespace qlogic
