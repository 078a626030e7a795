#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rat.hpp"

namespace riordan {

using Var = std::uint32_t;

/// Multiset of variables in canonical form: factors sorted by variable id,
/// all exponents positive. The empty monomial is 1.
class Monomial {
  public:
    Monomial() = default;
    static Monomial variable(Var v, std::uint32_t exp = 1);

    bool is_one() const { return f_.empty(); }
    const std::vector<std::pair<Var, std::uint32_t>>& factors() const { return f_; }

    /// Weighted degree with deg(var v) = v; the grading of the coordinate rings.
    long weight() const;

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.f_ != b.f_; }

    /// Graded-lexicographic order (weight first, then factor-vector lex).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const long wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.f_ < b.f_;
    }

  private:
    std::vector<std::pair<Var, std::uint32_t>> f_;
};

/// Sparse multivariate polynomial over Rat in normal form: no zero
/// coefficients are stored and terms are kept in graded-lex order.
class Poly {
  public:
    Poly() = default;
    Poly(long n) { if (n != 0) t_[Monomial()] = Rat(n); } // NOLINT: scalar embedding
    Poly(Rat r) { if (!r.is_zero()) t_[Monomial()] = std::move(r); } // NOLINT
    static Poly variable(Var v, std::uint32_t exp = 1);
    static Poly term(Monomial m, Rat c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    Rat constant_term() const;

    /// Largest variable id present (0 when constant).
    Var max_variable() const;
    long weight() const;

    const std::map<Monomial, Rat>& terms() const { return t_; }

    /// Multiplicative inverse; defined only for non-zero constants.
    Poly inverse() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& r) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.t_ != b.t_; }

  private:
    void add_term(const Monomial& m, const Rat& c);

    std::map<Monomial, Rat> t_;
};

} // namespace riordan
