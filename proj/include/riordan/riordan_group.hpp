#pragma once

#include <optional>
#include <utility>

#include "riordan/series.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

using RatSeries = Series<Rat>;

/// A Riordan pair (g, phi): g invertible (g0 != 0), phi composable
/// (phi0 = 0, phi1 != 0), both truncated at the same order. The associated
/// lower-triangular matrix has entries d_{n,k} = [x^n] g(x) phi(x)^k.
class RiordanPair {
  public:
    RiordanPair(RatSeries g, RatSeries phi);

    const RatSeries& g() const { return g_; }
    const RatSeries& phi() const { return phi_; }
    int order() const { return g_.order(); }

    /// Membership in the monic subgroup: g0 = 1 and phi1 = 1.
    bool is_monic() const { return g_.coeff(0).is_one() && phi_.coeff(1).is_one(); }

    friend bool operator==(const RiordanPair& a, const RiordanPair& b) {
        return a.g_ == b.g_ && a.phi_ == b.phi_;
    }
    friend bool operator!=(const RiordanPair& a, const RiordanPair& b) { return !(a == b); }

  private:
    RatSeries g_;
    RatSeries phi_;
};

/// The group identity (1, x).
RiordanPair riordan_identity(int order);

/// d_{n,k} = [x^n] g phi^k, for 0 <= k <= n <= order.
Rat entry(const RiordanPair& p, int n, int k);

/// Full (N+1) x (N+1) matrix realization; column k holds the coefficients
/// of g phi^k, built incrementally by convolving the previous column with phi.
TriMatrix matrix(const RiordanPair& p);

/// (g, phi) . (u, psi) = (g * (u o phi), psi o phi).
RiordanPair group_mul(const RiordanPair& a, const RiordanPair& b);

/// (g, phi)^{-1} = (1 / (g o phibar), phibar).
RiordanPair group_inverse(const RiordanPair& p);

bool is_appell(const RiordanPair& p);   // phi(x) = x
bool is_lagrange(const RiordanPair& p); // g(x) = 1
bool is_bell(const RiordanPair& p);     // phi(x) = x g(x)

/// Semidirect factorization p = (g, x) . (1, phi).
struct Decomposition {
    RiordanPair appell;
    RiordanPair lagrange;
};
Decomposition decompose(const RiordanPair& p);

/// alpha of the exact sequence 1 -> F0 -> R -> F1 -> 1: g |-> (g, x).
RiordanPair seq_map_alpha(const RatSeries& g);

/// beta of the exact sequence: (g, phi) |-> phi.
RatSeries seq_map_beta(const RiordanPair& p);

/// Coefficientwise truncation of both members to order m.
RiordanPair truncate(const RiordanPair& p, int m);

/// Reads a Riordan pair back off its matrix: g is column 0 and phi is
/// column 1 divided by g. Returns nullopt when the matrix is not the
/// realization of any valid pair at this truncation.
std::optional<RiordanPair> pair_from_matrix(const TriMatrix& m);

} // namespace riordan
