#include "convsum/numeric.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <utility>

namespace convsum {

NumericMode NumericMode::exact() {
    NumericMode m;
    m.regime = Regime::ExactRational;
    m.comparison_tolerance = 0.0L;
    return m;
}

NumericMode NumericMode::floating(long double tol, unsigned bits) {
    NumericMode m;
    m.regime = Regime::Float;
    m.comparison_tolerance = tol;
    m.precision_bits = bits;
    return m;
}

void NumericMode::validate() const {
    if (is_exact()) {
        if (comparison_tolerance != 0.0L) {
            throw ModeUnsupported("exact mode requires comparison tolerance 0");
        }
        return;
    }
    if (comparison_tolerance <= 0.0L) {
        throw ModeUnsupported("float mode requires a positive comparison tolerance");
    }
    if (precision_bits < 53) {
        throw ModeUnsupported("float precision below 53 bits is not supported");
    }
    if (precision_bits > LDBL_MANT_DIG) {
        throw ModeUnsupported("float precision above " + std::to_string(LDBL_MANT_DIG) +
                              " significand bits is not available on this platform");
    }
}

Scalar Scalar::exact(Rational v) {
    Scalar s;
    s.exact_ = true;
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::approx(long double v) {
    Scalar s;
    s.exact_ = false;
    s.flt_ = v;
    return s;
}

Scalar Scalar::of(const Rational& v, const NumericMode& mode) {
    return mode.is_exact() ? exact(v) : approx(v.convert_to<long double>());
}

const Rational& Scalar::rational() const {
    if (!exact_) {
        throw ModeUnsupported("float scalar has no exact rational value");
    }
    return rat_;
}

long double Scalar::value() const {
    return exact_ ? rat_.convert_to<long double>() : flt_;
}

bool Scalar::is_zero() const {
    return exact_ ? rat_.is_zero() : flt_ == 0.0L;
}

int Scalar::sign() const {
    if (exact_) {
        return rat_.sign();
    }
    return flt_ > 0.0L ? 1 : (flt_ < 0.0L ? -1 : 0);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (exact_ && rhs.exact_) {
        rat_ += rhs.rat_;
    } else {
        *this = approx(value() + rhs.value());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (exact_ && rhs.exact_) {
        rat_ -= rhs.rat_;
    } else {
        *this = approx(value() - rhs.value());
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (exact_ && rhs.exact_) {
        rat_ *= rhs.rat_;
    } else {
        *this = approx(value() * rhs.value());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (exact_ && rhs.exact_) {
        rat_ /= rhs.rat_;
    } else {
        *this = approx(value() / rhs.value());
    }
    return *this;
}

Scalar Scalar::operator-() const {
    return exact_ ? exact(-rat_) : approx(-flt_);
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Scalar::str() const {
    if (exact_) {
        return rational_to_string(rat_);
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15Lg", flt_);
    return buf;
}

namespace {

long double scale_of(long double x, long double y) {
    return std::max({1.0L, std::abs(x), std::abs(y)});
}

}  // namespace

bool Comparator::le(const Scalar& x, const Scalar& y) const {
    if (x.is_exact() && y.is_exact()) {
        return x.rational() <= y.rational();
    }
    const long double a = x.value();
    const long double b = y.value();
    return a <= b + tol_ * scale_of(a, b);
}

bool Comparator::lt_strict(const Scalar& x, const Scalar& y) const {
    if (x.is_exact() && y.is_exact()) {
        return x.rational() < y.rational();
    }
    const long double a = x.value();
    const long double b = y.value();
    return b - a > tol_ * scale_of(a, b);
}

bool Comparator::eq(const Scalar& x, const Scalar& y) const {
    return le(x, y) && le(y, x);
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1UL) {
            acc *= b;
        }
        b *= b;
        k >>= 1UL;
    }
    return acc;
}

BigInt pow_bigint(const BigInt& base, unsigned long e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty numeric literal");
    }
    const auto bad = [&] { throw ParseError("bad numeric literal: '" + text + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto digits = [&](std::string& out) {
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out.push_back(text[pos++]);
        }
    };
    std::string whole;
    digits(whole);
    Rational value;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string denom;
        digits(denom);
        if (whole.empty() || denom.empty() || pos != text.size()) {
            bad();
        }
        BigInt q(denom);
        if (q.is_zero()) {
            bad();
        }
        value = Rational(BigInt(whole), q);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac;
        digits(frac);
        if ((whole.empty() && frac.empty()) || pos != text.size()) {
            bad();
        }
        if (whole.empty()) {
            whole = "0";
        }
        value = Rational(BigInt(whole));
        if (!frac.empty()) {
            value += Rational(BigInt(frac), pow_bigint(BigInt(10), frac.size()));
        }
    } else {
        if (whole.empty() || pos != text.size()) {
            bad();
        }
        value = Rational(BigInt(whole));
    }
    return negative ? -value : value;
}

std::string rational_to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

bool rational_is_integer(const Rational& v) {
    return boost::multiprecision::denominator(v) == 1;
}

unsigned long rational_to_uint(const Rational& v) {
    if (!rational_is_integer(v) || v.sign() < 0) {
        throw ModeUnsupported("expected a nonnegative integer, got " + rational_to_string(v));
    }
    return boost::multiprecision::numerator(v).convert_to<unsigned long>();
}

std::size_t denominator_digits(const Rational& v) {
    return boost::multiprecision::denominator(v).str().size();
}

void check_denominator_cap(const Rational& v, const NumericMode& mode) {
    if (denominator_digits(v) > mode.max_denominator_digits) {
        throw Overflow("exact-rational denominator exceeds " +
                       std::to_string(mode.max_denominator_digits) + " digits");
    }
}

}  // namespace convsum
