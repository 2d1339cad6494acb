#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace toricsyz {

// Exact rational on 64-bit parts. The polytope constants only ever need
// denominators 1, 2, 3 and 6, so overflow is not a practical concern.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    long long as_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational " + str() + " is not an integer");
        return num;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return is_integer() ? std::to_string(num)
                            : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(long long c, const Rational& a) { return {c * a.num, a.den}; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace toricsyz
