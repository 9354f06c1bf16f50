#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "dgvertex/errors.hpp"

namespace dgv {

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// all arithmetic is exact. Text form is "p" or "p/q" (no decimals).
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw error(errc::bad_argument, "rational with zero denominator");
        if (den < 0)
            v_.assign(boost::multiprecision::cpp_rational(-num, -den));
        else
            v_.assign(boost::multiprecision::cpp_rational(num, den));
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    static Rational parse(std::string_view text) {
        auto bad = [&] {
            return error(errc::parse_error,
                         "invalid rational literal '" + std::string(text) +
                             "' (expected \"p\" or \"p/q\")");
        };
        if (text.empty())
            throw bad();
        auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash == std::string_view::npos
                                                       ? text.size()
                                                       : slash);
        std::string_view den_part =
            slash == std::string_view::npos ? std::string_view("1")
                                            : text.substr(slash + 1);
        auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
            if (s.empty())
                throw bad();
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+'))
                i = 1;
            if (i == s.size())
                throw bad();
            for (std::size_t j = i; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9')
                    throw bad();
            return Int(std::string(s));
        };
        Int num = parse_int(num_part, true);
        Int den = parse_int(den_part, false);
        if (den == 0)
            throw bad();
        return Rational(num, den);
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

    /// Value as long long; caller must know it is a small integer.
    long long to_ll() const {
        if (!is_integer())
            throw error(errc::bad_argument, "rational " + str() + " is not an integer");
        return num().convert_to<long long>();
    }

    long long floor_ll() const {
        Int n = num(), d = den();
        Int q = n / d;
        if (n < 0 && q * d != n)
            --q;
        return q.convert_to<long long>();
    }

    std::string str() const {
        std::string s = num().str();
        if (den() != 1)
            s += "/" + den().str();
        return s;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw error(errc::bad_argument, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

}  // namespace dgv
