#include "riordan/lie.hpp"

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

namespace {
void require_coeffs(const std::vector<Rat>& v, int order, const char* name) {
    if (static_cast<int>(v.size()) < order + 1)
        throw ValidationError(std::string(name) + ": need at least " + std::to_string(order + 1) +
                              " coefficients, got " + std::to_string(v.size()));
}
} // namespace

LieElement::LieElement(std::vector<Rat> phi_in, std::vector<Rat> psi_in, int order_in)
    : phi(std::move(phi_in)), psi(std::move(psi_in)), order(order_in) {
    require_coeffs(phi, order, "LieElement phi");
    require_coeffs(psi, order, "LieElement psi");
    if (!phi[0].is_zero() || !psi[0].is_zero())
        throw ValidationError("LieElement: phi0 and psi0 must vanish");
}

TriMatrix toeplitz_u(const std::vector<Rat>& phi, int order) {
    require_coeffs(phi, order, "toeplitz_u");
    TriMatrix m(order + 1);
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= n; ++k) m.set(n, k, phi[static_cast<size_t>(n - k)]);
    return m;
}

TriMatrix derivation_d(const std::vector<Rat>& psi, int order) {
    require_coeffs(psi, order, "derivation_d");
    TriMatrix m(order + 1);
    for (int n = 1; n <= order; ++n)
        for (int k = 1; k <= n; ++k) m.set(n, k, Rat(k) * psi[static_cast<size_t>(n - k)]);
    return m;
}

TriMatrix lie_element_matrix(const LieElement& e) {
    return toeplitz_u(e.phi, e.order) + derivation_d(e.psi, e.order);
}

TriMatrix exp_nilpotent(const TriMatrix& m) {
    if (!m.is_strictly_lower())
        throw MathDomainError("exp_nilpotent: matrix is not strictly lower triangular");
    TriMatrix result = TriMatrix::identity(m.dim());
    TriMatrix term = TriMatrix::identity(m.dim());
    for (int j = 1; j < m.dim(); ++j) {
        term = (term * m).scaled(Rat(1, j)); // M^j / j!
        result = result + term;
    }
    return result;
}

TriMatrix log_unipotent(const TriMatrix& m) {
    if (!m.is_unipotent())
        throw MathDomainError("log_unipotent: matrix is not unipotent (unit diagonal required)");
    const TriMatrix x = m - TriMatrix::identity(m.dim());
    TriMatrix result(m.dim());
    TriMatrix power = TriMatrix::identity(m.dim());
    for (int j = 1; j < m.dim(); ++j) {
        power = power * x;
        result = result + power.scaled(Rat(j % 2 == 1 ? 1 : -1, j));
    }
    return result;
}

LieWitness is_riordan_lie(const TriMatrix& m) {
    const int N = m.dim() - 1;
    LieWitness w;
    w.phi.assign(static_cast<size_t>(N) + 1, Rat(0));
    w.psi.assign(static_cast<size_t>(N) + 1, Rat(0));
    for (int n = 1; n <= N; ++n) w.phi[static_cast<size_t>(n)] = m.at(n, 0);
    // Column 1 entries are phi_{n-1} + psi_{n-1}; psi_N never appears at
    // this truncation, so it stays 0 in the witness.
    for (int n = 2; n <= N; ++n)
        w.psi[static_cast<size_t>(n - 1)] = m.at(n, 1) - w.phi[static_cast<size_t>(n - 1)];
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rat expected = w.phi[static_cast<size_t>(n - k)];
            if (k >= 1) expected += Rat(k) * w.psi[static_cast<size_t>(n - k)];
            if (m.at(n, k) != expected) {
                w.ok = false;
                w.violated_row = n;
                w.violated_col = k;
                return w;
            }
        }
    }
    w.ok = true;
    return w;
}

} // namespace riordan
