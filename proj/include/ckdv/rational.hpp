#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ckdv/errors.hpp"

namespace ckdv {

/// Exact rational with int64 numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) = 1). Thresholds and b-range endpoints are
/// combinatorial data, so they are kept exact end to end.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return double(num_) / double(den_); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(check(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                        check(i128(a.den_) * b.den_));
    }
    friend Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
    friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(check(i128(a.num_) * b.num_), check(i128(a.den_) * b.den_));
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return Rational(check(i128(a.num_) * b.den_), check(i128(a.den_) * b.num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Renders "p/q", or just "p" when q == 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q", or a decimal like "-0.75" (scaled by powers of 10).
    static Rational parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    using i128 = __int128;

    static std::int64_t check(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw Error("rational overflow");
        return std::int64_t(v);
    }

    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InvalidParameter("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::int64_t p = std::stoll(text.substr(0, slash));
            std::int64_t q = std::stoll(text.substr(slash + 1));
            return Rational(p, q);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::int64_t scale = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
        return Rational(std::stoll(digits), scale);
    } catch (const std::invalid_argument&) {
        throw InvalidParameter("bad rational literal: " + text);
    } catch (const std::out_of_range&) {
        throw InvalidParameter("rational literal out of range: " + text);
    }
}

} // namespace ckdv
