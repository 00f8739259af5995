#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace polyred {

// Exact rational number. Always held in lowest terms with a positive
// denominator; every operation canonicalizes before returning.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise
    static Rational parse(const std::string& s);

    std::string to_string() const;
    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    std::size_t hash() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polyred

template <>
struct std::hash<polyred::Rational> {
    std::size_t operator()(const polyred::Rational& r) const { return r.hash(); }
};
