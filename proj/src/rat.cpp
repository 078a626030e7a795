#include "riordan/rat.hpp"

#include <cctype>
#include <ostream>

namespace riordan {

Rat::Rat(long num, long den) {
    if (den == 0) throw MathDomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathDomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::from_string(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw ParseError(0, "rational", "not a rational literal: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw MathDomainError("rational with zero denominator");
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw MathDomainError("inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw MathDomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat Rat::binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

Rat Rat::factorial(long n) {
    if (n < 0) throw MathDomainError("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

} // namespace riordan
