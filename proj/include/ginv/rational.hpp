#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ginv/errors.hpp"

namespace ginv {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1. Zero is always 0/1, so equality is structural.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}

    Rational(Integer value) : num_(std::move(value)), den_(1) {}

    Rational(long long value) : num_(value), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}

    Rational(Integer numerator, Integer denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        normalize();
    }

    /// Parses `-? digits ( "/" digits )?`. No whitespace, no leading '+'.
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        Integer num = parse_integer(text, pos, /*allow_sign=*/true);
        if (pos == text.size()) {
            return Rational(std::move(num), 1);
        }
        if (text[pos] != '/') {
            throw ParseError("unexpected character in rational", pos);
        }
        ++pos;
        std::size_t den_pos = pos;
        Integer den = parse_integer(text, pos, /*allow_sign=*/false);
        if (pos != text.size()) {
            throw ParseError("trailing characters after rational", pos);
        }
        if (den == 0) {
            throw ParseError("zero denominator", den_pos);
        }
        return Rational(std::move(num), std::move(den));
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// Canonical text form: "n" when the denominator is 1, else "n/d".
    std::string str() const {
        std::string out = num_.str();
        if (den_ != 1) {
            out += '/';
            out += den_.str();
        }
        return out;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& rhs) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& rhs) {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    Rational& operator*=(const Rational& rhs) {
        num_ *= rhs.num_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& rhs) {
        if (rhs.num_ == 0) {
            throw std::invalid_argument("division by zero rational");
        }
        num_ *= rhs.den_;
        den_ *= rhs.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    Rational reciprocal() const {
        if (num_ == 0) {
            throw std::invalid_argument("reciprocal of zero");
        }
        return Rational(den_, num_);
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Integer parse_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
        bool negative = false;
        if (allow_sign && pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
            throw ParseError("expected digit", pos);
        }
        Integer value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return negative ? Integer(-value) : value;
    }

    Integer num_;
    Integer den_;  // > 0 always
};

}  // namespace ginv
