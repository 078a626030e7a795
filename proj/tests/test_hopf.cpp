#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riordan/hopf.hpp"
#include "riordan/render.hpp"
#include "test_support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

GradedPoly gen(Family f, int n) { return GradedPoly::generator(f, n); }
GradedPoly one(Family f) { return GradedPoly::constant(f, Rat(1)); }

GradedPoly random_graded(Rng& rng, Family fam, int maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 4), pick(1, maxdeg);
    GradedPoly p(fam);
    for (int t = nterms(rng); t > 0; --t) {
        GradedPoly mono = one(fam);
        int weight = 0;
        while (true) {
            int g = pick(rng);
            if (weight + g > maxdeg) break;
            mono = mono * gen(fam, g);
            weight += g;
        }
        p = p + mono.scaled(random_rat(rng));
    }
    return p;
}

/// <T, f (x) g> with both legs evaluated through series characters.
Rat pair_tensor(const TensorPoly& t, const Character& left, const Character& right) {
    Rat acc(0);
    for (const auto& [m, c] : t.terms())
        acc += c * left.eval_monomial(m.first) * right.eval_monomial(m.second);
    return acc;
}

TensorPoly delta_of(const GradedPoly& p, int maxd = kDefaultHopfDegree) {
    return p.family() == Family::H0 ? delta0(p, maxd) : delta1(p, maxd);
}

} // namespace

TEST_CASE("graded polynomial ring operations") {
    auto b1 = gen(Family::H0, 1), b2 = gen(Family::H0, 2);
    CHECK(b1 * b2 == b2 * b1);
    CHECK((b1 + b2) - b2 == b1);
    CHECK(b1.str() == "b1");
    CHECK((b1 * b1).str() == "b1^2");
    CHECK((b1 * b1 - b2).str() == "b1^2 - b2");
    CHECK(gen(Family::H1, 3).str() == "a3");
    CHECK(GradedPoly(Family::H0).str() == "0");
    CHECK(one(Family::H0).degree() == 0);
    CHECK((b1 * b2 * b2).degree() == 5);
    CHECK((b1 * b2 * b2).max_generator() == 2);

    CHECK_THROWS_AS(b1 + gen(Family::H1, 1), ValidationError);
    CHECK_THROWS_AS(b1 * gen(Family::H1, 1), ValidationError);

    Rng rng(51);
    for (int i = 0; i < 30; ++i) {
        for (Family fam : {Family::H0, Family::H1}) {
            GradedPoly p = random_graded(rng, fam, 6), q = random_graded(rng, fam, 6),
                       r = random_graded(rng, fam, 6);
            CHECK(p * q == q * p);
            CHECK(p * (q + r) == p * q + p * r);
            CHECK((p * q) * r == p * (q * r));
        }
    }
}

TEST_CASE("tensor algebra") {
    auto b1 = gen(Family::H0, 1);
    TensorPoly left = TensorPoly::tensor(b1, one(Family::H0));
    TensorPoly right = TensorPoly::tensor(one(Family::H0), b1);
    CHECK(left * right == TensorPoly::tensor(b1, b1));
    CHECK((left + right).str() == "b1⊗1 + 1⊗b1");
    CHECK(left.twisted() == right);

    Rng rng(52);
    for (int i = 0; i < 20; ++i) {
        GradedPoly p = random_graded(rng, Family::H1, 5), q = random_graded(rng, Family::H1, 5);
        GradedPoly r = random_graded(rng, Family::H1, 5), s = random_graded(rng, Family::H1, 5);
        // (p (x) q)(r (x) s) = pr (x) qs
        CHECK(TensorPoly::tensor(p, q) * TensorPoly::tensor(r, s) ==
              TensorPoly::tensor(p * r, q * s));
    }
}

TEST_CASE("delta0 on generators and its duality with convolution") {
    CHECK(delta0(gen(Family::H0, 2)).str() == "b2⊗1 + b1⊗b1 + 1⊗b2");
    CHECK(delta0(one(Family::H0)) == TensorPoly::tensor(one(Family::H0), one(Family::H0)));
    CHECK_THROWS_AS(delta0(gen(Family::H1, 1)), ValidationError);

    Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        const int N = 10;
        Series<Rat> f = random_monic_invertible(rng, N), g = random_monic_invertible(rng, N);
        Character af = character_from_series(f, Family::H0);
        Character ag = character_from_series(g, Family::H0);
        Series<Rat> fg = f * g;
        for (int n = 1; n <= N; ++n)
            CHECK(pair_tensor(delta0(gen(Family::H0, n), N), af, ag) == fg.coeff(n));
    }
}

TEST_CASE("delta1 on generators and its duality with composition") {
    CHECK(delta1(gen(Family::H1, 1)).str() == "a1⊗1 + 1⊗a1");
    CHECK(delta1(gen(Family::H1, 2)).str() == "a2⊗1 + 2·a1⊗a1 + 1⊗a2");

    // hand-expanded degree 3: a3(x)1 + 3 a2(x)a1 + a1(x)a1^2 + 2 a1(x)a2 + 1(x)a3
    auto a1 = gen(Family::H1, 1), a2 = gen(Family::H1, 2), a3 = gen(Family::H1, 3);
    TensorPoly expect = TensorPoly::tensor(a3, one(Family::H1)) +
                        TensorPoly::tensor(a2, a1).scaled(Rat(3)) +
                        TensorPoly::tensor(a1, a1 * a1 + a2.scaled(Rat(2))) +
                        TensorPoly::tensor(one(Family::H1), a3);
    CHECK(delta1(a3) == expect);

    CHECK_THROWS_AS(delta1(gen(Family::H0, 1)), ValidationError);

    Rng rng(54);
    for (int i = 0; i < 20; ++i) {
        const int N = 9;
        Series<Rat> phi = random_monic_composable(rng, N), psi = random_monic_composable(rng, N);
        Character aphi = character_from_series(phi, Family::H1);
        Character apsi = character_from_series(psi, Family::H1);
        Series<Rat> comp = compose(phi, psi);
        for (int n = 1; n <= 8; ++n)
            CHECK(pair_tensor(delta1(gen(Family::H1, n)), aphi, apsi) == comp.coeff(n + 1));
    }
}

TEST_CASE("counits") {
    CHECK(eps0(gen(Family::H0, 3)) == Rat(0));
    CHECK(eps0(GradedPoly::constant(Family::H0, Rat(5))) == Rat(5));
    CHECK(eps1(gen(Family::H1, 2) + GradedPoly::constant(Family::H1, Rat(3))) == Rat(3));
    CHECK_THROWS_AS(eps0(gen(Family::H1, 1)), ValidationError);

    // eps1 is evaluation at id(x) = x
    Series<Rat> id = Series<Rat>::identity(6);
    Character aid = character_from_series(id, Family::H1);
    Rng rng(55);
    GradedPoly p = random_graded(rng, Family::H1, 5);
    CHECK(aid.eval(p) == eps1(p));
}

TEST_CASE("antipode0 against the reciprocal oracle") {
    auto b1 = gen(Family::H0, 1), b2 = gen(Family::H0, 2);
    CHECK(antipode0(b1) == -b1);
    CHECK(antipode0(b2) == b1 * b1 - b2);

    Rng rng(56);
    for (int i = 0; i < 20; ++i) {
        const int N = 10;
        Series<Rat> f = random_monic_invertible(rng, N);
        Character af = character_from_series(f, Family::H0);
        Series<Rat> rf = reciprocal(f);
        for (int n = 1; n <= N; ++n)
            CHECK(af.eval(antipode0(gen(Family::H0, n), N)) == rf.coeff(n));
    }
}

TEST_CASE("antipode1 against the reversion oracle") {
    auto a1 = gen(Family::H1, 1), a2 = gen(Family::H1, 2);
    CHECK(antipode1(a1) == -a1);
    CHECK(antipode1(a2) == (a1 * a1).scaled(Rat(2)) - a2);

    Rng rng(57);
    for (int i = 0; i < 20; ++i) {
        const int N = 9;
        Series<Rat> phi = random_monic_composable(rng, N);
        Character aphi = character_from_series(phi, Family::H1);
        Series<Rat> rev = revert(phi);
        for (int n = 1; n <= 8; ++n)
            CHECK(aphi.eval(antipode1(gen(Family::H1, n))) == rev.coeff(n + 1));
    }
}

TEST_CASE("Hopf axioms as exact polynomial identities") {
    for (Family fam : {Family::H0, Family::H1}) {
        Verdict coassoc = check_coassoc(fam, 8);
        CHECK_MESSAGE(coassoc.pass, coassoc.detail);
        Verdict counit = check_counit(fam, 8);
        CHECK_MESSAGE(counit.pass, counit.detail);
        Verdict antipode = check_antipode(fam, 8);
        CHECK_MESSAGE(antipode.pass, antipode.detail);
    }
    // the degree-1 slice is forced by primitivity
    CHECK(check_coassoc(Family::H1, 1).pass);
}

TEST_CASE("bialgebra compatibility on random elements") {
    Rng rng(58);
    for (Family fam : {Family::H0, Family::H1}) {
        for (int i = 0; i < 10; ++i) {
            GradedPoly p = random_graded(rng, fam, 6), q = random_graded(rng, fam, 6);
            CHECK(delta_of(p * q) == delta_of(p) * delta_of(q));
            Rat ep = fam == Family::H0 ? eps0(p) : eps1(p);
            Rat eq = fam == Family::H0 ? eps0(q) : eps1(q);
            Rat epq = fam == Family::H0 ? eps0(p * q) : eps1(p * q);
            CHECK(epq == ep * eq);
        }
    }
}

TEST_CASE("grading of the coproducts") {
    for (Family fam : {Family::H0, Family::H1}) {
        for (int n = 1; n <= 8; ++n) {
            TensorPoly d = delta_of(gen(fam, n));
            for (const auto& [m, c] : d.terms())
                CHECK(m.first.weight() + m.second.weight() == n);
        }
    }
}

TEST_CASE("cocommutativity") {
    CHECK(is_cocommutative(Family::H0, 10).cocommutative);

    CocommVerdict v = is_cocommutative(Family::H1, 3);
    CHECK_FALSE(v.cocommutative);
    CHECK(v.witness_degree == 3);
    CHECK(v.detail.find("a3") != std::string::npos);

    // the degree-1 slice is always cocommutative
    CHECK(is_cocommutative(Family::H1, 1).cocommutative);
    CHECK(is_cocommutative(Family::H1, 2).cocommutative);
}

TEST_CASE("grouplike detection") {
    CHECK(is_grouplike(one(Family::H0)));
    CHECK(is_grouplike(one(Family::H1)));
    CHECK_FALSE(is_grouplike(gen(Family::H0, 1)));
    CHECK_FALSE(is_grouplike(gen(Family::H1, 2)));
    CHECK_FALSE(is_grouplike(one(Family::H0) + gen(Family::H0, 1)));
    CHECK_THROWS_AS(is_grouplike(GradedPoly(Family::H0)), ValidationError);
}

TEST_CASE("characters from series") {
    Character a = character_from_series(all_ones(6), Family::H0);
    for (int n = 1; n <= 6; ++n) CHECK(a.value(n) == Rat(1));

    Character b = character_from_series(x_over_one_minus_tx(Rat(1), 6), Family::H1);
    for (int n = 1; n <= 5; ++n) CHECK(b.value(n) == Rat(1));

    // non-monic points are outside the coordinate ring
    CHECK_THROWS_AS(character_from_series(scale(Rat(2), all_ones(6)), Family::H0),
                    ValidationError);
    CHECK_THROWS_AS(character_from_series(scale(Rat(2), Series<Rat>::identity(6)), Family::H1),
                    ValidationError);
    CHECK_THROWS_AS(character_from_series(Series<Rat>::identity(6), Family::H0), ValidationError);

    // multiplicative extension with chi(1) = 1
    CHECK(a.eval(one(Family::H0)) == Rat(1));
    CHECK(a.eval(gen(Family::H0, 2) * gen(Family::H0, 3)) == Rat(1));
    CHECK_THROWS_AS((void)a.value(7), ValidationError);
}

TEST_CASE("character convolution realizes the series groups") {
    Rng rng(59);
    const int N = 9;
    for (int i = 0; i < 20; ++i) {
        // H0: convolution of characters = product of series
        Series<Rat> f = random_monic_invertible(rng, N), g = random_monic_invertible(rng, N);
        Character af = character_from_series(f, Family::H0);
        Character ag = character_from_series(g, Family::H0);
        CHECK(char_convolve(af, ag) == character_from_series(f * g, Family::H0));
        // and it is commutative
        CHECK(char_convolve(af, ag) == char_convolve(ag, af));

        // H1: convolution = composition, in the same order
        Series<Rat> phi = random_monic_composable(rng, N), psi = random_monic_composable(rng, N);
        Character aphi = character_from_series(phi, Family::H1);
        Character apsi = character_from_series(psi, Family::H1);
        CHECK(char_convolve(aphi, apsi) == character_from_series(compose(phi, psi), Family::H1));
    }

    // the H1 character group is non-commutative: witness at degree 3
    Series<Rat> u = Series<Rat>(4, {0, 1, 1, 0, 0}); // x + x^2
    Series<Rat> v = Series<Rat>(4, {0, 1, 0, 1, 0}); // x + x^3
    Character au = character_from_series(u, Family::H1);
    Character av = character_from_series(v, Family::H1);
    Character uv = char_convolve(au, av), vu = char_convolve(av, au);
    CHECK(uv != vu);
    CHECK(uv.value(1) == vu.value(1));
    CHECK(uv.value(2) == vu.value(2));
    CHECK(uv.value(3) != vu.value(3));
    // composition oracle agrees with both orders
    CHECK(uv == character_from_series(compose(u, v), Family::H1));
    CHECK(vu == character_from_series(compose(v, u), Family::H1));

    CHECK_THROWS_AS(char_convolve(au, character_from_series(all_ones(5), Family::H0)),
                    ValidationError);
}

TEST_CASE("counit character is the convolution identity; antipode inverts") {
    Rng rng(60);
    const int N = 8;
    for (int i = 0; i < 10; ++i) {
        Series<Rat> f = random_monic_invertible(rng, N);
        Character af = character_from_series(f, Family::H0);
        Character e0 = Character::counit_character(Family::H0, N);
        CHECK(char_convolve(af, e0) == af);
        CHECK(char_convolve(e0, af) == af);
        CHECK(char_convolve(af, char_antipode(af)) == e0);
        CHECK(char_convolve(char_antipode(af), af) == e0);
        // alpha_f o S0 is exactly alpha_{1/f}
        CHECK(char_antipode(af) == character_from_series(reciprocal(f), Family::H0));

        Series<Rat> phi = random_monic_composable(rng, N + 1);
        Character ap = character_from_series(phi, Family::H1);
        Character e1 = Character::counit_character(Family::H1, N);
        CHECK(char_convolve(ap, e1) == ap);
        CHECK(char_convolve(ap, char_antipode(ap)) == e1);
        CHECK(char_convolve(char_antipode(ap), ap) == e1);
        // alpha_phi o S1 is exactly alpha_{reversion of phi}
        CHECK(char_antipode(ap) == character_from_series(revert(phi), Family::H1));
    }
}

TEST_CASE("riordan characters realize C(R) = H0 (x) H1") {
    const int N = 8;
    auto [h0, h1] = riordan_character(riordan_identity(N));
    CHECK(h0 == Character::counit_character(Family::H0, N));
    CHECK(h1 == Character::counit_character(Family::H1, N - 1));

    // evaluation of b2 (x) a1 at (1/(1-x), x/(1-x)) is 1*1 = 1
    RiordanPair pascal(reciprocal(one_minus_x(N)), x_over_one_minus_tx(Rat(1), N));
    auto [pg, pphi] = riordan_character(pascal);
    TensorPoly t = TensorPoly::tensor(gen(Family::H0, 2), gen(Family::H1, 1));
    CHECK(riordan_char_eval(pg, pphi, t) == Rat(1));

    // evaluation is multiplicative for the tensor-product algebra
    Rng rng(61);
    for (int i = 0; i < 15; ++i) {
        RiordanPair p = random_monic_pair(rng, N);
        auto [cg, cphi] = riordan_character(p);
        GradedPoly l1 = random_graded(rng, Family::H0, 5), l2 = random_graded(rng, Family::H0, 5);
        GradedPoly r1 = random_graded(rng, Family::H1, 5), r2 = random_graded(rng, Family::H1, 5);
        TensorPoly t1 = TensorPoly::tensor(l1, r1), t2 = TensorPoly::tensor(l2, r2);
        CHECK(riordan_char_eval(cg, cphi, t1 * t2) ==
              riordan_char_eval(cg, cphi, t1) * riordan_char_eval(cg, cphi, t2));
    }

    RiordanPair nonmonic(scale(Rat(2), all_ones(N)), Series<Rat>::identity(N));
    CHECK_THROWS_AS(riordan_character(nonmonic), ValidationError);
}

TEST_CASE("working degree is enforced") {
    CHECK_THROWS_AS(delta1(gen(Family::H1, 9)), ValidationError);
    CHECK_NOTHROW(delta1(gen(Family::H1, 9), 9));
    CHECK_THROWS_AS(antipode0(gen(Family::H0, 12)), ValidationError);
    CHECK_THROWS_AS(check_coassoc(Family::H0, 0), ValidationError);
}

TEST_CASE("JSON forms") {
    nlohmann::json j = graded_poly_json(antipode0(gen(Family::H0, 2)));
    CHECK(j["family"] == "H0");
    REQUIRE(j["terms"].size() == 2);
    // ascending graded-lex: b1^2 before b2
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][0]["monomial"] == nlohmann::json::array({{1, 2}}));
    CHECK(j["terms"][1]["coeff"] == "-1");
    CHECK(j["terms"][1]["monomial"] == nlohmann::json::array({{2, 1}}));

    nlohmann::json jt = tensor_poly_json(delta0(gen(Family::H0, 1)));
    CHECK(jt["left_family"] == "H0");
    CHECK(jt["right_family"] == "H0");
    CHECK(jt["terms"].size() == 2);
}
