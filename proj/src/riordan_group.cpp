#include "riordan/riordan_group.hpp"

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

RiordanPair::RiordanPair(RatSeries g, RatSeries phi) : g_(std::move(g)), phi_(std::move(phi)) {
    if (g_.order() != phi_.order())
        throw ValidationError("Riordan pair members have different truncation orders (" +
                              std::to_string(g_.order()) + " vs " + std::to_string(phi_.order()) + ")");
    if (!is_invertible(g_))
        throw ValidationError("Riordan pair: g is not invertible (g0 = 0)");
    if (!is_composable(phi_))
        throw ValidationError("Riordan pair: phi is not composable (need phi0 = 0, phi1 != 0)");
}

RiordanPair riordan_identity(int order) {
    return RiordanPair(RatSeries::constant(order, Rat(1)), RatSeries::identity(order));
}

Rat entry(const RiordanPair& p, int n, int k) {
    const int N = p.order();
    if (k < 0 || n < 0 || k > n || n > N)
        throw MathDomainError("Riordan entry (" + std::to_string(n) + ", " + std::to_string(k) +
                              ") outside the triangle of order " + std::to_string(N));
    RatSeries col = p.g();
    for (int j = 0; j < k; ++j) col = col * p.phi();
    return col.coeff(n);
}

TriMatrix matrix(const RiordanPair& p) {
    const int N = p.order();
    TriMatrix m(N + 1);
    RatSeries col = p.g();
    for (int k = 0; k <= N; ++k) {
        for (int n = k; n <= N; ++n) m.set(n, k, col.coeff(n));
        if (k < N) col = col * p.phi();
    }
    return m;
}

RiordanPair group_mul(const RiordanPair& a, const RiordanPair& b) {
    if (a.order() != b.order())
        throw MathDomainError("group_mul: truncation orders differ");
    return RiordanPair(a.g() * compose(b.g(), a.phi()), compose(b.phi(), a.phi()));
}

RiordanPair group_inverse(const RiordanPair& p) {
    RatSeries phibar = revert(p.phi());
    return RiordanPair(reciprocal(compose(p.g(), phibar)), phibar);
}

bool is_appell(const RiordanPair& p) {
    return p.phi() == RatSeries::identity(p.order());
}

bool is_lagrange(const RiordanPair& p) {
    return p.g() == RatSeries::constant(p.order(), Rat(1));
}

bool is_bell(const RiordanPair& p) {
    return p.phi() == shift_mul(p.g(), 1);
}

Decomposition decompose(const RiordanPair& p) {
    return Decomposition{
        RiordanPair(p.g(), RatSeries::identity(p.order())),
        RiordanPair(RatSeries::constant(p.order(), Rat(1)), p.phi()),
    };
}

RiordanPair seq_map_alpha(const RatSeries& g) {
    if (!is_invertible(g)) throw ValidationError("alpha: series is not invertible");
    return RiordanPair(g, RatSeries::identity(g.order()));
}

RatSeries seq_map_beta(const RiordanPair& p) { return p.phi(); }

RiordanPair truncate(const RiordanPair& p, int m) {
    if (m < 1 || m > p.order())
        throw MathDomainError("cannot truncate an order-" + std::to_string(p.order()) +
                              " pair to order " + std::to_string(m));
    return RiordanPair(truncated(p.g(), m), truncated(p.phi(), m));
}

std::optional<RiordanPair> pair_from_matrix(const TriMatrix& m) {
    const int N = m.dim() - 1;
    if (N < 1) return std::nullopt;
    std::vector<Rat> gc(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) gc[static_cast<size_t>(n)] = m.at(n, 0);
    RatSeries g(N, std::move(gc));
    if (!is_invertible(g)) return std::nullopt;
    std::vector<Rat> c1(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) c1[static_cast<size_t>(n)] = m.at(n, 1);
    RatSeries phi = RatSeries(N, std::move(c1)) * reciprocal(g);
    if (!is_composable(phi)) return std::nullopt;
    RiordanPair p(g, phi);
    if (matrix(p) != m) return std::nullopt;
    return p;
}

} // namespace riordan
