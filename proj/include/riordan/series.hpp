#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rat.hpp"

namespace riordan {

/// Commutative ring with identity usable as a series coefficient ring.
/// inverse() is only required to succeed on units and must throw
/// MathDomainError otherwise.
template <typename R>
concept CoefficientRing =
    std::constructible_from<R, long> && std::constructible_from<R, Rat> &&
    std::equality_comparable<R> && std::copy_constructible<R> &&
    requires(const R& a, const R& b) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.inverse() } -> std::convertible_to<R>;
    };

enum class SeriesClass {
    General,    ///< no constraint on the leading coefficients
    Invertible, ///< c0 != 0: unit for the convolution product
    Composable, ///< c0 == 0, c1 != 0: unit for the composition product
};

/// Truncated formal power series: the coefficients of x^0..x^N.
///
/// Every series carries its own truncation order N; binary operations
/// require equal orders and throw MathDomainError on mismatch. Values are
/// immutable after construction.
template <CoefficientRing R>
class Series {
  public:
    explicit Series(int order) : order_(check_order(order)), c_(static_cast<size_t>(order) + 1, R(0)) {}

    Series(int order, std::vector<R> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(order_) + 1)
            throw MathDomainError("coefficient count does not match truncation order");
    }

    static Series constant(int order, R value) {
        Series s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    /// The identity of the composition product, id(x) = x.
    static Series identity(int order) {
        Series s(order);
        if (order < 1) throw MathDomainError("id(x) = x needs truncation order >= 1");
        s.c_[1] = R(1);
        return s;
    }

    int order() const { return order_; }

    /// The coefficient functional [x^n]; n beyond the truncation order is an error.
    const R& coeff(int n) const {
        if (n < 0 || n > order_)
            throw MathDomainError("coefficient index " + std::to_string(n) +
                                  " beyond truncation order " + std::to_string(order_));
        return c_[static_cast<size_t>(n)];
    }

    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const R& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Builds a series by filling the zero-initialized coefficient buffer;
    /// the result is immutable once returned.
    template <typename F>
    static Series build(int order, F&& fill) {
        Series s(order);
        fill(s.c_);
        return s;
    }

  private:
    static int check_order(int order) {
        if (order < 0) throw MathDomainError("negative truncation order");
        return order;
    }

    int order_;
    std::vector<R> c_;
};

namespace detail {
template <typename R>
void require_same_order(const Series<R>& f, const Series<R>& g, const char* op) {
    if (f.order() != g.order())
        throw MathDomainError(std::string(op) + ": truncation orders differ (" +
                              std::to_string(f.order()) + " vs " + std::to_string(g.order()) + ")");
}
} // namespace detail

/// Least n with c_n != 0, or nullopt for the zero series.
template <CoefficientRing R>
std::optional<int> ord(const Series<R>& f) {
    for (int n = 0; n <= f.order(); ++n)
        if (!f.coeff(n).is_zero()) return n;
    return std::nullopt;
}

template <CoefficientRing R>
SeriesClass classify(const Series<R>& f) {
    if (!f.coeff(0).is_zero()) return SeriesClass::Invertible;
    if (f.order() >= 1 && !f.coeff(1).is_zero()) return SeriesClass::Composable;
    return SeriesClass::General;
}

template <CoefficientRing R>
bool is_invertible(const Series<R>& f) {
    return classify(f) == SeriesClass::Invertible;
}

template <CoefficientRing R>
bool is_composable(const Series<R>& f) {
    return classify(f) == SeriesClass::Composable;
}

/// Explicit re-truncation to order m <= N (the one sanctioned way to mix orders).
template <CoefficientRing R>
Series<R> truncated(const Series<R>& f, int m) {
    if (m < 0 || m > f.order())
        throw MathDomainError("cannot truncate order-" + std::to_string(f.order()) +
                              " series to order " + std::to_string(m));
    return Series<R>::build(m, [&](std::vector<R>& c) {
        for (int n = 0; n <= m; ++n) c[static_cast<size_t>(n)] = f.coeff(n);
    });
}

template <CoefficientRing R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
    detail::require_same_order(f, g, "add");
    return Series<R>::build(f.order(), [&](std::vector<R>& c) {
        for (int n = 0; n <= f.order(); ++n) c[static_cast<size_t>(n)] = f.coeff(n) + g.coeff(n);
    });
}

template <CoefficientRing R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
    detail::require_same_order(f, g, "subtract");
    return Series<R>::build(f.order(), [&](std::vector<R>& c) {
        for (int n = 0; n <= f.order(); ++n) c[static_cast<size_t>(n)] = f.coeff(n) - g.coeff(n);
    });
}

template <CoefficientRing R>
Series<R> operator-(const Series<R>& f) {
    return Series<R>::build(f.order(), [&](std::vector<R>& c) {
        for (int n = 0; n <= f.order(); ++n) c[static_cast<size_t>(n)] = -f.coeff(n);
    });
}

template <CoefficientRing R>
Series<R> scale(const R& r, const Series<R>& f) {
    return Series<R>::build(f.order(), [&](std::vector<R>& c) {
        for (int n = 0; n <= f.order(); ++n) c[static_cast<size_t>(n)] = r * f.coeff(n);
    });
}

/// Cauchy (convolution) product truncated at the shared order.
template <CoefficientRing R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    detail::require_same_order(f, g, "multiply");
    const int N = f.order();
    return Series<R>::build(N, [&](std::vector<R>& c) {
        for (int i = 0; i <= N; ++i) {
            if (f.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= N; ++j) {
                if (g.coeff(j).is_zero()) continue;
                c[static_cast<size_t>(i + j)] = c[static_cast<size_t>(i + j)] + f.coeff(i) * g.coeff(j);
            }
        }
    });
}

/// f(x)^k at the order of f (k >= 0).
template <CoefficientRing R>
Series<R> pow_trunc(const Series<R>& f, int k) {
    if (k < 0) throw MathDomainError("negative series power");
    Series<R> acc = Series<R>::constant(f.order(), R(1));
    for (int i = 0; i < k; ++i) acc = acc * f;
    return acc;
}

/// Multiplication by x^k; coefficients pushed beyond the order are dropped.
template <CoefficientRing R>
Series<R> shift_mul(const Series<R>& f, int k) {
    if (k < 0) throw MathDomainError("negative shift");
    return Series<R>::build(f.order(), [&](std::vector<R>& c) {
        for (int n = k; n <= f.order(); ++n) c[static_cast<size_t>(n)] = f.coeff(n - k);
    });
}

/// Formal derivative; one truncation order is lost.
template <CoefficientRing R>
Series<R> derive(const Series<R>& f) {
    if (f.order() == 0)
        throw MathDomainError("derivative of an order-0 truncation is not representable");
    return Series<R>::build(f.order() - 1, [&](std::vector<R>& c) {
        for (int n = 0; n < f.order(); ++n) c[static_cast<size_t>(n)] = R(static_cast<long>(n) + 1) * f.coeff(n + 1);
    });
}

/// Convolution inverse: r with f*r = 1, by the standard recursion
/// r_0 = 1/c_0, r_n = -(1/c_0) * sum_{k=1..n} c_k r_{n-k}.
template <CoefficientRing R>
Series<R> reciprocal(const Series<R>& f) {
    if (f.coeff(0).is_zero())
        throw MathDomainError("reciprocal: series is not invertible (c0 = 0)");
    const int N = f.order();
    const R inv0 = f.coeff(0).inverse();
    return Series<R>::build(N, [&](std::vector<R>& c) {
        c[0] = inv0;
        for (int n = 1; n <= N; ++n) {
            R acc(0);
            for (int k = 1; k <= n; ++k) acc = acc + f.coeff(k) * c[static_cast<size_t>(n - k)];
            c[static_cast<size_t>(n)] = -(inv0 * acc);
        }
    });
}

/// Quotient in K[[x]]: requires ord(f) >= ord(g); x^{ord(g)} is cancelled
/// from both operands, so the result order is N - ord(g).
template <CoefficientRing R>
Series<R> divide(const Series<R>& f, const Series<R>& g) {
    detail::require_same_order(f, g, "divide");
    const std::optional<int> dg = ord(g);
    if (!dg) throw MathDomainError("division by the zero series");
    const std::optional<int> df = ord(f);
    if (df && *df < *dg)
        throw MathDomainError("quotient is not a power series (ord(numerator) " +
                              std::to_string(*df) + " < ord(denominator) " + std::to_string(*dg) + ")");
    const int m = f.order() - *dg;
    Series<R> fs = Series<R>::build(m, [&](std::vector<R>& c) {
        for (int n = 0; n <= m; ++n) c[static_cast<size_t>(n)] = f.coeff(n + *dg);
    });
    Series<R> gs = Series<R>::build(m, [&](std::vector<R>& c) {
        for (int n = 0; n <= m; ++n) c[static_cast<size_t>(n)] = g.coeff(n + *dg);
    });
    return fs * reciprocal(gs);
}

/// g(f(x)) for f with f(0) = 0, by Horner evaluation in the series ring.
template <CoefficientRing R>
Series<R> compose(const Series<R>& g, const Series<R>& f) {
    detail::require_same_order(g, f, "compose");
    if (!f.coeff(0).is_zero())
        throw MathDomainError("compose: inner series is not composable (c0 != 0)");
    const int N = g.order();
    Series<R> acc = Series<R>::constant(N, g.coeff(N));
    for (int i = N - 1; i >= 0; --i) {
        acc = acc * f;
        acc = acc + Series<R>::constant(N, g.coeff(i));
    }
    return acc;
}

namespace detail {
/// x/f as a series of order N-1 (f composable, so f/x is invertible).
template <CoefficientRing R>
Series<R> x_over(const Series<R>& f) {
    const int N = f.order();
    Series<R> f_over_x = Series<R>::build(N - 1, [&](std::vector<R>& c) {
        for (int n = 0; n < N; ++n) c[static_cast<size_t>(n)] = f.coeff(n + 1);
    });
    return reciprocal(f_over_x);
}

template <CoefficientRing R>
void require_composable(const Series<R>& f, const char* op) {
    if (f.order() < 1 || !f.coeff(0).is_zero() || f.coeff(1).is_zero())
        throw MathDomainError(std::string(op) + ": series is not composable (need c0 = 0, c1 != 0)");
}
} // namespace detail

/// Compositional inverse ("reversion"): the unique fbar with f(fbar(x)) = x
/// and fbar(0) = 0. Coefficient-by-coefficient via the inversion rule
/// [x^n] fbar = (1/n) [x^{n-1}] (x/f)^n.
template <CoefficientRing R>
Series<R> revert(const Series<R>& f) {
    detail::require_composable(f, "revert");
    const int N = f.order();
    const Series<R> h = detail::x_over(f);
    Series<R> hp = Series<R>::constant(N - 1, R(1));
    std::vector<R> out(static_cast<size_t>(N) + 1, R(0));
    for (int n = 1; n <= N; ++n) {
        hp = hp * h; // (x/f)^n
        out[static_cast<size_t>(n)] = R(Rat(1, n)) * hp.coeff(n - 1);
    }
    return Series<R>(N, std::move(out));
}

/// Independent reversion oracle: fixed-point refinement of
/// u <- (x - (f(u) - c1 u)) / c1, which gains one exact order per pass.
/// Kept deliberately separate from revert() as the cross-check route.
template <CoefficientRing R>
Series<R> revert_fixed_point(const Series<R>& f) {
    detail::require_composable(f, "revert");
    const int N = f.order();
    const R inv1 = f.coeff(1).inverse();
    const Series<R> x = Series<R>::identity(N);
    Series<R> u = scale(inv1, x);
    for (int pass = 0; pass < N; ++pass) {
        Series<R> residue = compose(f, u) - scale(f.coeff(1), u);
        u = scale(inv1, x - residue);
    }
    return u;
}

/// Lagrange-Buermann coefficient extraction:
/// [x^n] G(fbar) = (1/n) [x^{n-1}] G'(x) (x/f)^n, without computing fbar.
template <CoefficientRing R>
R lagrange_burmann(const Series<R>& G, const Series<R>& f, int n) {
    if (n < 1)
        throw MathDomainError("lagrange_burmann needs n >= 1 (the constant term is G(0))");
    detail::require_composable(f, "lagrange_burmann");
    if (G.order() < n || f.order() < n)
        throw MathDomainError("lagrange_burmann: operand orders must be >= n");
    const Series<R> hn = pow_trunc(truncated(detail::x_over(f), n - 1), n);
    const Series<R> gp = truncated(derive(G), n - 1);
    return R(Rat(1, n)) * (gp * hn).coeff(n - 1);
}

} // namespace riordan
