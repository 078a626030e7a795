#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/riordan_group.hpp"

namespace riordan {

/// The two coordinate-ring Hopf algebras: H0 over the invertible series
/// (generators b_n, the coefficient functionals [x^n] on g0 = 1 series)
/// and H1 over the composable series (generators a_n with a_n(phi) =
/// phi_{n+1} on phi1 = 1 series). deg(b_n) = deg(a_n) = n.
enum class Family { H0, H1 };

char generator_letter(Family f);
std::string family_name(Family f);

/// Working-degree bound: generator-expanding operations refuse generator
/// indices above the configured degree to keep runs predictable.
inline constexpr int kDefaultHopfDegree = 8;

/// Polynomial in the generators of a single family, normal-formed.
class GradedPoly {
  public:
    explicit GradedPoly(Family fam, Poly p = Poly()) : fam_(fam), p_(std::move(p)) {}
    static GradedPoly constant(Family fam, Rat c) { return GradedPoly(fam, Poly(std::move(c))); }
    static GradedPoly generator(Family fam, int n, std::uint32_t exp = 1);

    Family family() const { return fam_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_constant() const { return p_.is_constant(); }
    Rat constant_term() const { return p_.constant_term(); }

    /// Highest generator index present (0 for constants).
    int max_generator() const { return static_cast<int>(p_.max_variable()); }
    /// Grading: weight of the heaviest monomial, deg(gen n) = n.
    int degree() const { return static_cast<int>(p_.weight()); }

    GradedPoly operator-() const { return GradedPoly(fam_, -p_); }
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly scaled(const Rat& r) const { return GradedPoly(fam_, p_.scaled(r)); }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.fam_ == b.fam_ && a.p_ == b.p_;
    }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    /// Canonical text, terms in ascending graded-lex order: "b1^2 - b2".
    std::string str() const;

  private:
    Family fam_;
    Poly p_;
};

/// Formal sum of monomial (x) monomial tensors with Rat coefficients; the
/// two legs may live in different families (Delta maps into (F, F); the
/// coordinate ring of the Riordan group itself lives in (H0, H1)).
class TensorPoly {
  public:
    TensorPoly(Family left, Family right) : left_(left), right_(right) {}
    static TensorPoly tensor(const GradedPoly& a, const GradedPoly& b);

    Family left_family() const { return left_; }
    Family right_family() const { return right_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<Monomial, Monomial>, Rat>& terms() const { return t_; }

    void add_term(Monomial left, Monomial right, const Rat& c);

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    /// Componentwise product: (a (x) b) (c (x) d) = ac (x) bd.
    TensorPoly operator*(const TensorPoly& o) const;
    TensorPoly scaled(const Rat& r) const;

    /// The twist map tau(a (x) b) = b (x) a.
    TensorPoly twisted() const;

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.t_ == b.t_;
    }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    /// Canonical text, left leg descending: "b2(x)1 + b1(x)b1 + 1(x)b2"
    /// (rendered with the real tensor sign).
    std::string str() const;

  private:
    Family left_, right_;
    std::map<std::pair<Monomial, Monomial>, Rat> t_;
};

/// Coproducts. delta0 b_n = sum b_k (x) b_{n-k} (dual to convolution);
/// delta1 a_n is read off a symbolic composition of two generic monic
/// composable series (dual to composition). Both extend as algebra
/// homomorphisms.
TensorPoly delta0(const GradedPoly& p, int max_degree = kDefaultHopfDegree);
TensorPoly delta1(const GradedPoly& p, int max_degree = kDefaultHopfDegree);

/// Counits: evaluation at the group identity (1 for H0, id(x) = x for H1);
/// every positive-degree generator goes to 0.
Rat eps0(const GradedPoly& p);
Rat eps1(const GradedPoly& p);

/// Antipodes. antipode0 b_n = [x^n] of the reciprocal of the generic
/// series 1 + b_1 x + b_2 x^2 + ...; antipode1 a_n = [x^{n+1}] of the
/// reversion of x + a_1 x^2 + ... . Both extend multiplicatively.
GradedPoly antipode0(const GradedPoly& p, int max_degree = kDefaultHopfDegree);
GradedPoly antipode1(const GradedPoly& p, int max_degree = kDefaultHopfDegree);

struct Verdict {
    bool pass = false;
    std::string detail;
    explicit operator bool() const { return pass; }
};

/// Axiom sweeps over every generator of degree <= degree; the detail names
/// the first counterexample on failure.
Verdict check_coassoc(Family fam, int degree);
Verdict check_counit(Family fam, int degree);
Verdict check_antipode(Family fam, int degree);

struct CocommVerdict {
    bool cocommutative = false;
    int witness_degree = -1; ///< first generator degree where the twist differs
    std::string detail;
};
CocommVerdict is_cocommutative(Family fam, int degree);

/// Delta(p) == p (x) p (and then eps(p) = 1). The zero element is outside
/// the definition.
bool is_grouplike(const GradedPoly& p, int max_degree = kDefaultHopfDegree);

/// Algebra homomorphism H -> Q, determined by its generator values and
/// extended multiplicatively with chi(1) = 1.
class Character {
  public:
    Character(Family fam, int max_degree, std::vector<Rat> gen_values);
    static Character counit_character(Family fam, int max_degree);

    Family family() const { return fam_; }
    int max_degree() const { return maxd_; }

    /// Value on generator n (1 <= n <= max_degree).
    const Rat& value(int n) const;
    Rat eval(const GradedPoly& p) const;
    Rat eval_monomial(const Monomial& m) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.fam_ == b.fam_ && a.maxd_ == b.maxd_ && a.vals_ == b.vals_;
    }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  private:
    Family fam_;
    int maxd_;
    std::vector<Rat> vals_;
};

/// The evaluation character of a point of the coordinate ring: H0 needs a
/// monic invertible series (g0 = 1), H1 a monic composable one (phi1 = 1).
Character character_from_series(const RatSeries& f, Family fam);

/// Convolution (alpha beta)(h) = multiply . (alpha (x) beta) . Delta(h);
/// the group law on characters.
Character char_convolve(const Character& a, const Character& b);

/// alpha composed with the antipode; the convolution inverse of alpha.
Character char_antipode(const Character& a);

/// The point of C(R) ~ H0 (x) H1 attached to a monic pair: (alpha_g, alpha_phi).
std::pair<Character, Character> riordan_character(const RiordanPair& p);

/// Evaluation of a mixed (H0, H1) tensor at a Riordan point.
Rat riordan_char_eval(const Character& h0, const Character& h1, const TensorPoly& t);

} // namespace riordan
