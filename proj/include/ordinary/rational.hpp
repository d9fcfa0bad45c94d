#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordinary {

// Exact rational scalar. Always kept in canonical form: denominator > 0,
// gcd(|num|, den) = 1, so equality is structural.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    Rat(long long n) { mpz_class z; set_ll(z, n); q_ = z; }
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend Rat operator+(const Rat& a, const Rat& b) { return raw(a.q_ + b.q_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return raw(a.q_ - b.q_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return raw(a.q_ * b.q_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return raw(a.q_ / b.q_);
    }
    Rat operator-() const { return raw(-q_); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    // "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        std::string s = q_.get_num().get_str();
        if (!is_integer()) s += "/" + q_.get_den().get_str();
        return s;
    }

    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    static Rat raw(mpq_class q) { Rat r; r.q_ = std::move(q); return r; }
    static void set_ll(mpz_class& z, long long v) {
        bool neg = v < 0;
        unsigned long long m = neg ? 0ULL - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
        z = static_cast<unsigned long>(m >> 32);
        z <<= 32;
        z += static_cast<unsigned long>(m & 0xffffffffULL);
        if (neg) z = -z;
    }

    mpq_class q_;
};

// Accepts integers ("-12"), fractions ("3/4", "-3/4"), and finite decimals
// ("0.25", "-1.5"), all parsed exactly. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view text);

}  // namespace ordinary
