#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"

namespace riordan {

/// Exact rational number, always in lowest terms with positive denominator.
/// Arithmetic never rounds; storage is arbitrary precision.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit on purpose, scalars appear everywhere
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& num, const mpz_class& den = 1);

    /// Parses "p", "-p" or "p/q" (q > 0 after normalization).
    static Rat from_string(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Multiplicative inverse; the zero element has none.
    Rat inverse() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    static Rat binomial(long n, long k);
    static Rat factorial(long n);

  private:
    mpq_class v_;
};

} // namespace riordan
