#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace appell {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held in canonical form: the denominator is
/// positive and coprime to the numerator, so two values are equal iff their
/// representations are identical. The canonical text form is "p/q", with the
/// "/q" suffix dropped when q = 1 (e.g. "-1/2", "7").
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}      // NOLINT
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// x^e with the 0^0 = 1 convention.
    Rational pow(unsigned e) const {
        if (e == 0) return Rational(1);
        using boost::multiprecision::pow;
        return Rational(pow(numerator(), e), pow(denominator(), e));
    }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) { s += '/'; s += denominator().str(); }
        return s;
    }

    /// Parses the canonical text form: optional sign, digits, optional
    /// "/digits". Non-canonical inputs like "2/4" or "1/-2" are normalized.
    /// Decimal notation is rejected.
    static Rational parse(std::string_view text) {
        const auto bad = [&] {
            return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        if (text.empty()) throw bad();
        const auto slash = text.find('/');
        const auto as_int = [&](std::string_view s) {
            if (s.empty() || s == "-" || s == "+") throw bad();
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') throw bad();
            return BigInt(std::string(s));
        };
        if (slash == std::string_view::npos)
            return Rational(as_int(text));
        const BigInt num = as_int(text.substr(0, slash));
        const BigInt den = as_int(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

}  // namespace appell
