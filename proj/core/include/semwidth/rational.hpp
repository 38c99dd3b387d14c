#ifndef SEMWIDTH_RATIONAL_HPP
#define SEMWIDTH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "semwidth/errors.hpp"

namespace semwidth {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. All cover weights and width values are Rationals; there is no
// floating point anywhere in the width pipeline.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : value_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        // cpp_rational requires a positive denominator; normalize the sign.
        if (den < 0)
            value_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            value_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return value_ == 0; }

    // "p" for integers, "p/q" otherwise; the sign lives on the numerator.
    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    // Accepts "p" and "p/q" with an optional leading minus on p.
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw DomainError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(const boost::multiprecision::cpp_rational& v) : value_(v) {}

    boost::multiprecision::cpp_rational value_;
};

inline Rational Rational::parse(const std::string& text) {
    auto bad = [&]() { return DomainError("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s, bool sign_ok) {
        if (s.empty()) return false;
        std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num_part, true) || !is_int(den_part, false)) throw bad();
    BigInt num(num_part);
    BigInt den(den_part);
    if (den == 0) throw bad();
    return Rational(num, den);
}

}  // namespace semwidth

#endif
