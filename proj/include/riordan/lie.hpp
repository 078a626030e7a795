#pragma once

#include <vector>

#include "riordan/rat.hpp"
#include "riordan/trimatrix.hpp"

namespace riordan {

/// Element phi, psi of the monic Riordan Lie algebra, realized as the
/// nilpotent matrix u_phi + d_psi. Both coefficient vectors start at
/// index 0 and must have a zero leading coefficient.
struct LieElement {
    LieElement(std::vector<Rat> phi, std::vector<Rat> psi, int order);

    std::vector<Rat> phi;
    std::vector<Rat> psi;
    int order;
};

/// Lower-triangular Toeplitz matrix with entry (n, k) = phi_{n-k}; this is
/// the matrix of "multiply by the series with coefficients phi" acting on
/// coefficient vectors.
TriMatrix toeplitz_u(const std::vector<Rat>& phi, int order);

/// Column-scaled companion: entry (n, k) = k * psi_{n-k} for k >= 1 and a
/// zero column 0.
TriMatrix derivation_d(const std::vector<Rat>& psi, int order);

TriMatrix lie_element_matrix(const LieElement& e);

/// Exact exp of a nilpotent (strictly lower triangular) truncation:
/// sum of M^j / j! over j = 0..dim-1. The result is unipotent.
TriMatrix exp_nilpotent(const TriMatrix& m);

/// Exact log of a unipotent lower-triangular truncation:
/// sum of (-1)^{j+1} (M - I)^j / j. Inverse of exp_nilpotent.
TriMatrix log_unipotent(const TriMatrix& m);

/// Decision + witness for membership in the span { u_phi + d_psi }.
/// Column 0 fixes phi, column 1 fixes psi (psi_N is invisible at this
/// truncation and reported as 0), then every entry is re-checked.
struct LieWitness {
    bool ok = false;
    std::vector<Rat> phi;
    std::vector<Rat> psi;
    int violated_row = -1;
    int violated_col = -1;

    explicit operator bool() const { return ok; }
};

LieWitness is_riordan_lie(const TriMatrix& m);

} // namespace riordan
