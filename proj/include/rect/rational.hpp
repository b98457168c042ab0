#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rect {

// Exact rational over int64. Charges in the ledgers are tiny (denominators
// are powers of two, magnitudes bounded by a few thousand), but the type
// makes no such assumption beyond not overflowing int64.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace rect
