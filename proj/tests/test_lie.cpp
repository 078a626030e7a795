#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riordan/lie.hpp"
#include "riordan/riordan_group.hpp"
#include "test_support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

std::vector<Rat> x_vector(int order) {
    std::vector<Rat> v(static_cast<size_t>(order) + 1, Rat(0));
    v[1] = Rat(1);
    return v;
}

/// u_x + d_x: the infinitesimal generator of (1/(1-tx), x/(1-tx)), with
/// subdiagonal 1, 2, 3, ...
TriMatrix one_param_generator(int order) {
    return lie_element_matrix(LieElement(x_vector(order), x_vector(order), order));
}

LieElement random_lie_element(Rng& rng, int order) {
    std::vector<Rat> phi(static_cast<size_t>(order) + 1), psi(static_cast<size_t>(order) + 1);
    for (int i = 1; i <= order; ++i) {
        phi[static_cast<size_t>(i)] = random_rat(rng);
        psi[static_cast<size_t>(i)] = random_rat(rng);
    }
    return LieElement(std::move(phi), std::move(psi), order);
}

} // namespace

TEST_CASE("toeplitz_u is the matrix of multiplication by the series") {
    Rng rng(41);
    const int N = 8;
    Series<Rat> f = random_series(rng, N);
    TriMatrix u = toeplitz_u(f.coeffs(), N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) CHECK(u.at(n, k) == f.coeff(n - k));

    // column k = coefficients of f * x^k
    for (int k = 0; k <= N; ++k) {
        Series<Rat> col = shift_mul(f, k);
        for (int n = k; n <= N; ++n) CHECK(u.at(n, k) == col.coeff(n));
    }

    // subdiagonal of ones
    TriMatrix ux = toeplitz_u(x_vector(3), 3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) CHECK(ux.at(n, k) == Rat(n - k == 1 ? 1 : 0));

    // Toeplitz multiplicativity = convolution
    Series<Rat> g = random_series(rng, N);
    CHECK(toeplitz_u(f.coeffs(), N) * toeplitz_u(g.coeffs(), N) ==
          toeplitz_u((f * g).coeffs(), N));

    CHECK_THROWS_AS(toeplitz_u(x_vector(3), 5), ValidationError);
}

TEST_CASE("derivation_d column pattern") {
    Rng rng(42);
    const int N = 8;
    Series<Rat> psi = random_series(rng, N);
    TriMatrix d = derivation_d(psi.coeffs(), N);
    for (int n = 0; n <= N; ++n) CHECK(d.at(n, 0) == Rat(0));
    for (int n = 0; n <= N; ++n)
        for (int k = 1; k <= n; ++k) CHECK(d.at(n, k) == Rat(k) * psi.coeff(n - k));

    // column k carries the coefficients of k * psi * x^k (an fps identity)
    for (int k = 1; k <= N; ++k) {
        Series<Rat> col = scale(Rat(k), shift_mul(psi, k));
        for (int n = k; n <= N; ++n) CHECK(d.at(n, k) == col.coeff(n));
    }

    // d_x alone has subdiagonal 0, 1, 2, ...: entry (k+1, k) = k
    TriMatrix dx = derivation_d(x_vector(5), 5);
    for (int k = 0; k <= 4; ++k) CHECK(dx.at(k + 1, k) == Rat(k));

    // u_x + d_x has subdiagonal 1, 2, 3, 4, 5: the binomial-matrix generator
    TriMatrix gen = one_param_generator(5);
    for (int k = 0; k <= 4; ++k) CHECK(gen.at(k + 1, k) == Rat(k + 1));
}

TEST_CASE("lie_element_matrix") {
    const int N = 6;
    LieElement zero(std::vector<Rat>(N + 1), std::vector<Rat>(N + 1), N);
    CHECK(lie_element_matrix(zero) == TriMatrix(N + 1));

    LieElement ux(x_vector(N), std::vector<Rat>(N + 1), N);
    TriMatrix m = lie_element_matrix(ux);
    for (int n = 1; n <= N; ++n) CHECK(m.at(n, n - 1) == Rat(1));

    Rng rng(43);
    for (int i = 0; i < 20; ++i)
        CHECK(lie_element_matrix(random_lie_element(rng, N)).is_strictly_lower());

    CHECK_THROWS_AS(LieElement(x_vector(N), all_ones(N).coeffs(), N), ValidationError);
}

TEST_CASE("exp_nilpotent: the binomial matrix example") {
    const int N = 10;
    TriMatrix gen = one_param_generator(N);
    TriMatrix expm = exp_nilpotent(gen);
    auto pascal = pascal_rows(N + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(expm.at(n, k) == pascal[static_cast<size_t>(n)][static_cast<size_t>(k)]);

    CHECK(exp_nilpotent(TriMatrix(5)) == TriMatrix::identity(5));
    CHECK_THROWS_AS(exp_nilpotent(TriMatrix::identity(4)), MathDomainError);
}

TEST_CASE("exp of the scaled generator is the one-parameter subgroup") {
    const int N = 8;
    TriMatrix gen = one_param_generator(N);
    for (Rat t : {Rat(1), Rat(2), Rat(-1), Rat(1, 2)}) {
        RiordanPair p(one_over_one_minus_tx(t, N), x_over_one_minus_tx(t, N));
        CHECK(exp_nilpotent(gen.scaled(t)) == matrix(p));
    }
}

TEST_CASE("one-parameter additivity") {
    const int N = 8;
    TriMatrix gen = one_param_generator(N);
    Rng rng(44);
    for (int i = 0; i < 10; ++i) {
        Rat s = random_rat(rng), t = random_rat(rng);
        CHECK(exp_nilpotent(gen.scaled(s)) * exp_nilpotent(gen.scaled(t)) ==
              exp_nilpotent(gen.scaled(s + t)));
    }
}

TEST_CASE("log_unipotent") {
    const int N = 10;
    CHECK(log_unipotent(TriMatrix::identity(N + 1)) == TriMatrix(N + 1));

    // log of the binomial matrix recovers the generator
    TriMatrix gen = one_param_generator(N);
    CHECK(log_unipotent(exp_nilpotent(gen)) == gen);

    Rng rng(45);
    for (int i = 0; i < 20; ++i) {
        RiordanPair p = random_monic_pair(rng, 8);
        TriMatrix m = matrix(p);
        CHECK(exp_nilpotent(log_unipotent(m)) == m);
        // Lie algebra <-> group consistency
        CHECK(static_cast<bool>(is_riordan_lie(log_unipotent(m))));
    }

    CHECK_THROWS_AS(log_unipotent(TriMatrix(3)), MathDomainError);
}

TEST_CASE("is_riordan_lie witnesses") {
    const int N = 8;
    Rng rng(46);
    for (int i = 0; i < 20; ++i) {
        LieElement e = random_lie_element(rng, N);
        TriMatrix m = lie_element_matrix(e);
        LieWitness w = is_riordan_lie(m);
        REQUIRE(static_cast<bool>(w));
        CHECK(w.phi == e.phi);
        // psi_N is invisible at this truncation; the witness reports 0 there
        for (int n = 0; n < N; ++n) CHECK(w.psi[static_cast<size_t>(n)] == e.psi[static_cast<size_t>(n)]);
        CHECK(w.psi[static_cast<size_t>(N)] == Rat(0));
        CHECK(lie_element_matrix(LieElement(w.phi, w.psi, N)) == m);
    }

    // log of the binomial matrix is u_x + d_x: phi = psi = x
    TriMatrix logb = log_unipotent(exp_nilpotent(one_param_generator(N)));
    LieWitness w = is_riordan_lie(logb);
    REQUIRE(static_cast<bool>(w));
    CHECK(w.phi == x_vector(N));
    std::vector<Rat> psi_expect = x_vector(N);
    psi_expect[static_cast<size_t>(N)] = Rat(0); // already zero; explicit for the invisible slot
    CHECK(w.psi == psi_expect);

    // a single perturbed entry breaks the pattern and is reported
    TriMatrix bad = lie_element_matrix(random_lie_element(rng, N));
    bad.set(3, 1, bad.at(3, 1) + Rat(1));
    LieWitness wb = is_riordan_lie(bad);
    CHECK_FALSE(static_cast<bool>(wb));
    CHECK(wb.violated_row >= 0);

    // a matrix with a non-zero diagonal is not in the span
    CHECK_FALSE(static_cast<bool>(is_riordan_lie(TriMatrix::identity(4))));
}

TEST_CASE("bracket closure") {
    const int N = 8;
    Rng rng(47);
    for (int i = 0; i < 15; ++i) {
        TriMatrix a = lie_element_matrix(random_lie_element(rng, N));
        TriMatrix b = lie_element_matrix(random_lie_element(rng, N));
        TriMatrix bracket = a * b - b * a;
        CHECK(static_cast<bool>(is_riordan_lie(bracket)));
    }
}

TEST_CASE("exp of a Lie element is a monic Riordan matrix") {
    const int N = 8;
    Rng rng(48);
    for (int i = 0; i < 20; ++i) {
        TriMatrix m = exp_nilpotent(lie_element_matrix(random_lie_element(rng, N)));
        auto p = pair_from_matrix(m);
        REQUIRE(p.has_value());
        CHECK(p->is_monic());
        CHECK(matrix(*p) == m);
    }
}
