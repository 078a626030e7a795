#include "riordan/hopf.hpp"

#include <algorithm>
#include <tuple>

#include "riordan/series.hpp"

namespace riordan {

char generator_letter(Family f) { return f == Family::H0 ? 'b' : 'a'; }

std::string family_name(Family f) { return f == Family::H0 ? "H0" : "H1"; }

namespace {

void require_family(Family have, Family want, const char* op) {
    if (have != want)
        throw ValidationError(std::string(op) + ": expected family " + family_name(want) +
                              ", got " + family_name(have));
}

void require_same_family(Family a, Family b, const char* op) {
    if (a != b)
        throw ValidationError(std::string(op) + ": family mismatch (" + family_name(a) +
                              " vs " + family_name(b) + ")");
}

void require_within_degree(int max_gen, int max_degree, const char* op) {
    if (max_degree < 1) throw ValidationError(std::string(op) + ": working degree must be >= 1");
    if (max_gen > max_degree)
        throw ValidationError(std::string(op) + ": generator index " + std::to_string(max_gen) +
                              " exceeds the working degree " + std::to_string(max_degree));
}

std::string monomial_str(Family fam, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += generator_letter(fam);
        s += std::to_string(v);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

/// Signed-sum rendering shared by GradedPoly and TensorPoly:
/// magnitudes joined with " + " / " - ", a leading "-" for a negative head.
std::string join_signed(const std::vector<std::pair<int, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].first < 0) out += '-';
        } else {
            out += parts[i].first < 0 ? " - " : " + ";
        }
        out += parts[i].second;
    }
    return out;
}

std::string coeff_prefix(const Rat& c) {
    Rat mag = c.sign() < 0 ? -c : c;
    return mag.is_one() ? std::string() : mag.str() + "·"; // middle dot
}

Rat rat_pow(const Rat& r, std::uint32_t e) {
    Rat acc(1);
    for (std::uint32_t i = 0; i < e; ++i) acc *= r;
    return acc;
}

} // namespace

GradedPoly GradedPoly::generator(Family fam, int n, std::uint32_t exp) {
    if (n < 1) throw ValidationError("generator index must be >= 1");
    return GradedPoly(fam, Poly::variable(static_cast<Var>(n), exp));
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    require_same_family(fam_, o.fam_, "poly_add");
    return GradedPoly(fam_, p_ + o.p_);
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    require_same_family(fam_, o.fam_, "poly_sub");
    return GradedPoly(fam_, p_ - o.p_);
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    require_same_family(fam_, o.fam_, "poly_mul");
    return GradedPoly(fam_, p_ * o.p_);
}

std::string GradedPoly::str() const {
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& [m, c] : p_.terms()) {
        if (m.is_one()) parts.emplace_back(c.sign(), (c.sign() < 0 ? -c : c).str());
        else parts.emplace_back(c.sign(), coeff_prefix(c) + monomial_str(fam_, m));
    }
    return join_signed(parts);
}

TensorPoly TensorPoly::tensor(const GradedPoly& a, const GradedPoly& b) {
    TensorPoly t(a.family(), b.family());
    for (const auto& [ma, ca] : a.poly().terms())
        for (const auto& [mb, cb] : b.poly().terms()) t.add_term(ma, mb, ca * cb);
    return t;
}

void TensorPoly::add_term(Monomial left, Monomial right, const Rat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::move(left), std::move(right));
    auto [it, inserted] = t_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    require_same_family(left_, o.left_, "tensor_add(left)");
    require_same_family(right_, o.right_, "tensor_add(right)");
    TensorPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.first, m.second, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    require_same_family(left_, o.left_, "tensor_sub(left)");
    require_same_family(right_, o.right_, "tensor_sub(right)");
    TensorPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.first, m.second, -c);
    return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    require_same_family(left_, o.left_, "tensor_mul(left)");
    require_same_family(right_, o.right_, "tensor_mul(right)");
    TensorPoly r(left_, right_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_)
            r.add_term(m1.first * m2.first, m1.second * m2.second, c1 * c2);
    return r;
}

TensorPoly TensorPoly::scaled(const Rat& r) const {
    TensorPoly out(left_, right_);
    if (r.is_zero()) return out;
    for (const auto& [m, c] : t_) out.add_term(m.first, m.second, r * c);
    return out;
}

TensorPoly TensorPoly::twisted() const {
    TensorPoly out(right_, left_);
    for (const auto& [m, c] : t_) out.add_term(m.second, m.first, c);
    return out;
}

std::string TensorPoly::str() const {
    using Term = std::pair<std::pair<Monomial, Monomial>, Rat>;
    std::vector<Term> terms(t_.begin(), t_.end());
    // Canonical reading order: left leg descending, right leg ascending.
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.first.first != b.first.first) return b.first.first < a.first.first;
        return a.first.second < b.first.second;
    });
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& [m, c] : terms)
        parts.emplace_back(c.sign(), coeff_prefix(c) + monomial_str(left_, m.first) + "⊗" +
                                         monomial_str(right_, m.second));
    return join_signed(parts);
}

// ---------------------------------------------------------------------------
// Generator tables: the coproducts and antipodes on generators, from which
// everything extends multiplicatively.

namespace {

const GradedPoly& one_of(Family fam) {
    static const GradedPoly one0 = GradedPoly::constant(Family::H0, Rat(1));
    static const GradedPoly one1 = GradedPoly::constant(Family::H1, Rat(1));
    return fam == Family::H0 ? one0 : one1;
}

GradedPoly gen_or_one(Family fam, int n) {
    return n == 0 ? one_of(fam) : GradedPoly::generator(fam, n);
}

/// delta0 b_n = sum_{k=0..n} b_k (x) b_{n-k}, with b_0 = 1.
TensorPoly delta0_generator(int n) {
    TensorPoly t(Family::H0, Family::H0);
    for (int k = 0; k <= n; ++k)
        t = t + TensorPoly::tensor(gen_or_one(Family::H0, k), gen_or_one(Family::H0, n - k));
    return t;
}

// Variable encoding for the two-sided symbolic composition: the left
// series' coefficient A_i is variable 2i, the right B_i is 2i+1.
constexpr Var left_var(int i) { return static_cast<Var>(2 * i); }
constexpr Var right_var(int i) { return static_cast<Var>(2 * i + 1); }

TensorPoly split_bivariate(const Poly& p) {
    TensorPoly t(Family::H1, Family::H1);
    for (const auto& [m, c] : p.terms()) {
        Monomial l, r;
        for (const auto& [v, e] : m.factors()) {
            if (v % 2 == 0) l = l * Monomial::variable(v / 2, e);
            else r = r * Monomial::variable((v - 1) / 2, e);
        }
        t.add_term(std::move(l), std::move(r), c);
    }
    return t;
}

/// delta1 a_n for all n <= maxd at once: compose two generic monic
/// composable series phi = x + sum A_i x^{i+1}, psi = x + sum B_i x^{i+1}
/// and split the coefficient of x^{n+1} into A-leg (x) B-leg.
std::vector<TensorPoly> delta1_table(int maxd) {
    const int order = maxd + 1;
    Series<Poly> phi = Series<Poly>::build(order, [&](std::vector<Poly>& c) {
        c[1] = Poly(1);
        for (int i = 1; i < order; ++i) c[static_cast<size_t>(i) + 1] = Poly::variable(left_var(i));
    });
    Series<Poly> psi = Series<Poly>::build(order, [&](std::vector<Poly>& c) {
        c[1] = Poly(1);
        for (int i = 1; i < order; ++i) c[static_cast<size_t>(i) + 1] = Poly::variable(right_var(i));
    });
    Series<Poly> comp = compose(phi, psi);
    std::vector<TensorPoly> table;
    table.reserve(static_cast<size_t>(maxd) + 1);
    table.emplace_back(Family::H1, Family::H1); // unused slot 0
    for (int n = 1; n <= maxd; ++n) table.push_back(split_bivariate(comp.coeff(n + 1)));
    return table;
}

/// antipode0 b_n = [x^n] 1/(1 + b_1 x + ... + b_maxd x^maxd).
std::vector<GradedPoly> antipode0_table(int maxd) {
    Series<Poly> f = Series<Poly>::build(maxd, [&](std::vector<Poly>& c) {
        c[0] = Poly(1);
        for (int i = 1; i <= maxd; ++i) c[static_cast<size_t>(i)] = Poly::variable(static_cast<Var>(i));
    });
    Series<Poly> r = reciprocal(f);
    std::vector<GradedPoly> table;
    table.reserve(static_cast<size_t>(maxd) + 1);
    table.push_back(one_of(Family::H0)); // unused slot 0
    for (int n = 1; n <= maxd; ++n) table.emplace_back(Family::H0, r.coeff(n));
    return table;
}

/// antipode1 a_n = [x^{n+1}] of the reversion of x + a_1 x^2 + ... .
std::vector<GradedPoly> antipode1_table(int maxd) {
    const int order = maxd + 1;
    Series<Poly> f = Series<Poly>::build(order, [&](std::vector<Poly>& c) {
        c[1] = Poly(1);
        for (int i = 1; i < order; ++i) c[static_cast<size_t>(i) + 1] = Poly::variable(static_cast<Var>(i));
    });
    Series<Poly> fbar = revert(f);
    std::vector<GradedPoly> table;
    table.reserve(static_cast<size_t>(maxd) + 1);
    table.push_back(one_of(Family::H1)); // unused slot 0
    for (int n = 1; n <= maxd; ++n) table.emplace_back(Family::H1, fbar.coeff(n + 1));
    return table;
}

std::vector<TensorPoly> delta_table(Family fam, int maxd) {
    if (fam == Family::H1) return delta1_table(maxd);
    std::vector<TensorPoly> table;
    table.reserve(static_cast<size_t>(maxd) + 1);
    table.emplace_back(Family::H0, Family::H0);
    for (int n = 1; n <= maxd; ++n) table.push_back(delta0_generator(n));
    return table;
}

std::vector<GradedPoly> antipode_table(Family fam, int maxd) {
    return fam == Family::H0 ? antipode0_table(maxd) : antipode1_table(maxd);
}

TensorPoly delta_of_monomial(Family fam, const Monomial& m, const std::vector<TensorPoly>& table) {
    TensorPoly acc = TensorPoly::tensor(one_of(fam), one_of(fam));
    for (const auto& [v, e] : m.factors())
        for (std::uint32_t i = 0; i < e; ++i) acc = acc * table[v];
    return acc;
}

TensorPoly delta_extend(const GradedPoly& p, const std::vector<TensorPoly>& table) {
    TensorPoly out(p.family(), p.family());
    for (const auto& [m, c] : p.poly().terms())
        out = out + delta_of_monomial(p.family(), m, table).scaled(c);
    return out;
}

GradedPoly antipode_of_monomial(Family fam, const Monomial& m, const std::vector<GradedPoly>& table) {
    GradedPoly acc = one_of(fam);
    for (const auto& [v, e] : m.factors())
        for (std::uint32_t i = 0; i < e; ++i) acc = acc * table[v];
    return acc;
}

GradedPoly antipode_extend(const GradedPoly& p, const std::vector<GradedPoly>& table) {
    GradedPoly out(p.family());
    for (const auto& [m, c] : p.poly().terms())
        out = out + antipode_of_monomial(p.family(), m, table).scaled(c);
    return out;
}

} // namespace

TensorPoly delta0(const GradedPoly& p, int max_degree) {
    require_family(p.family(), Family::H0, "delta0");
    require_within_degree(p.max_generator(), max_degree, "delta0");
    return delta_extend(p, delta_table(Family::H0, std::max(1, p.max_generator())));
}

TensorPoly delta1(const GradedPoly& p, int max_degree) {
    require_family(p.family(), Family::H1, "delta1");
    require_within_degree(p.max_generator(), max_degree, "delta1");
    return delta_extend(p, delta_table(Family::H1, std::max(1, p.max_generator())));
}

Rat eps0(const GradedPoly& p) {
    require_family(p.family(), Family::H0, "eps0");
    return p.constant_term();
}

Rat eps1(const GradedPoly& p) {
    require_family(p.family(), Family::H1, "eps1");
    return p.constant_term();
}

GradedPoly antipode0(const GradedPoly& p, int max_degree) {
    require_family(p.family(), Family::H0, "antipode0");
    require_within_degree(p.max_generator(), max_degree, "antipode0");
    return antipode_extend(p, antipode_table(Family::H0, std::max(1, p.max_generator())));
}

GradedPoly antipode1(const GradedPoly& p, int max_degree) {
    require_family(p.family(), Family::H1, "antipode1");
    require_within_degree(p.max_generator(), max_degree, "antipode1");
    return antipode_extend(p, antipode_table(Family::H1, std::max(1, p.max_generator())));
}

// ---------------------------------------------------------------------------
// Axiom sweeps.

namespace {

using TripleKey = std::tuple<Monomial, Monomial, Monomial>;
using TriplePoly = std::map<TripleKey, Rat>;

void triple_add(TriplePoly& t, TripleKey key, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

std::string triple_str(Family fam, const TripleKey& k) {
    return monomial_str(fam, std::get<0>(k)) + "⊗" + monomial_str(fam, std::get<1>(k)) +
           "⊗" + monomial_str(fam, std::get<2>(k));
}

} // namespace

namespace {
void require_sweep_degree(int degree, const char* op) {
    if (degree < 1)
        throw ValidationError(std::string(op) + ": sweep degree must be >= 1");
}
} // namespace

Verdict check_coassoc(Family fam, int degree) {
    require_sweep_degree(degree, "check_coassoc");
    const auto table = delta_table(fam, degree);
    for (int n = 1; n <= degree; ++n) {
        TriplePoly lhs, rhs;
        for (const auto& [m, c] : table[static_cast<size_t>(n)].terms()) {
            // (I (x) Delta) Delta
            const TensorPoly dr = delta_of_monomial(fam, m.second, table);
            for (const auto& [mr, cr] : dr.terms())
                triple_add(lhs, {m.first, mr.first, mr.second}, c * cr);
            // (Delta (x) I) Delta
            const TensorPoly dl = delta_of_monomial(fam, m.first, table);
            for (const auto& [ml, cl] : dl.terms())
                triple_add(rhs, {ml.first, ml.second, m.second}, c * cl);
        }
        if (lhs != rhs) {
            std::string gen = std::string(1, generator_letter(fam)) + std::to_string(n);
            for (const auto& [k, c] : lhs) {
                auto it = rhs.find(k);
                if (it == rhs.end() || it->second != c)
                    return {false, "coassociativity fails on " + gen + " at " + triple_str(fam, k)};
            }
            for (const auto& [k, c] : rhs)
                if (lhs.find(k) == lhs.end())
                    return {false, "coassociativity fails on " + gen + " at " + triple_str(fam, k)};
        }
    }
    return {true, {}};
}

Verdict check_counit(Family fam, int degree) {
    require_sweep_degree(degree, "check_counit");
    const auto table = delta_table(fam, degree);
    for (int n = 1; n <= degree; ++n) {
        const GradedPoly gen = GradedPoly::generator(fam, n);
        Poly left, right; // (eps (x) I) Delta and (I (x) eps) Delta
        for (const auto& [m, c] : table[static_cast<size_t>(n)].terms()) {
            if (m.first.is_one()) left = left + Poly::term(m.second, c);
            if (m.second.is_one()) right = right + Poly::term(m.first, c);
        }
        std::string name = std::string(1, generator_letter(fam)) + std::to_string(n);
        if (GradedPoly(fam, left) != gen)
            return {false, "counit property fails on " + name + " (eps on the left leg)"};
        if (GradedPoly(fam, right) != gen)
            return {false, "counit property fails on " + name + " (eps on the right leg)"};
    }
    return {true, {}};
}

Verdict check_antipode(Family fam, int degree) {
    require_sweep_degree(degree, "check_antipode");
    const auto dtable = delta_table(fam, degree);
    const auto stable = antipode_table(fam, degree);
    for (int n = 1; n <= degree; ++n) {
        GradedPoly lhs(fam), rhs(fam); // m(S (x) I) Delta and m(I (x) S) Delta
        for (const auto& [m, c] : dtable[static_cast<size_t>(n)].terms()) {
            lhs = lhs + (antipode_of_monomial(fam, m.first, stable) * GradedPoly(fam, Poly::term(m.second, Rat(1)))).scaled(c);
            rhs = rhs + (GradedPoly(fam, Poly::term(m.first, Rat(1))) * antipode_of_monomial(fam, m.second, stable)).scaled(c);
        }
        // eps(gen) = 0 in positive degree, so both sides must vanish.
        std::string name = std::string(1, generator_letter(fam)) + std::to_string(n);
        if (!lhs.is_zero())
            return {false, "antipode property fails on " + name + ": m(S(x)I)Delta = " + lhs.str()};
        if (!rhs.is_zero())
            return {false, "antipode property fails on " + name + ": m(I(x)S)Delta = " + rhs.str()};
    }
    return {true, {}};
}

CocommVerdict is_cocommutative(Family fam, int degree) {
    require_sweep_degree(degree, "is_cocommutative");
    const auto table = delta_table(fam, degree);
    for (int n = 1; n <= degree; ++n) {
        const TensorPoly& d = table[static_cast<size_t>(n)];
        if (d.twisted() != d) {
            std::string name = std::string(1, generator_letter(fam)) + std::to_string(n);
            TensorPoly diff = d - d.twisted();
            return {false, n, "twist(Delta " + name + ") != Delta " + name +
                                  "; difference " + diff.str()};
        }
    }
    return {true, -1, {}};
}

bool is_grouplike(const GradedPoly& p, int max_degree) {
    if (p.is_zero()) throw ValidationError("grouplike elements are non-zero by definition");
    require_within_degree(p.max_generator(), max_degree, "is_grouplike");
    TensorPoly d = p.family() == Family::H0 ? delta0(p, max_degree) : delta1(p, max_degree);
    if (d != TensorPoly::tensor(p, p)) return false;
    const Rat e = p.family() == Family::H0 ? eps0(p) : eps1(p);
    if (!e.is_one()) throw Error("internal: grouplike element with counit != 1");
    return true;
}

// ---------------------------------------------------------------------------
// Characters.

Character::Character(Family fam, int max_degree, std::vector<Rat> gen_values)
    : fam_(fam), maxd_(max_degree), vals_(std::move(gen_values)) {
    if (maxd_ < 1) throw ValidationError("character working degree must be >= 1");
    if (vals_.size() != static_cast<size_t>(maxd_))
        throw ValidationError("character needs one value per generator up to its degree");
}

Character Character::counit_character(Family fam, int max_degree) {
    return Character(fam, max_degree, std::vector<Rat>(static_cast<size_t>(max_degree), Rat(0)));
}

const Rat& Character::value(int n) const {
    if (n < 1 || n > maxd_)
        throw ValidationError("character has no value for generator " + std::to_string(n) +
                              " (working degree " + std::to_string(maxd_) + ")");
    return vals_[static_cast<size_t>(n) - 1];
}

Rat Character::eval_monomial(const Monomial& m) const {
    Rat acc(1);
    for (const auto& [v, e] : m.factors()) acc *= rat_pow(value(static_cast<int>(v)), e);
    return acc;
}

Rat Character::eval(const GradedPoly& p) const {
    require_same_family(p.family(), fam_, "character evaluation");
    Rat acc(0);
    for (const auto& [m, c] : p.poly().terms()) acc += c * eval_monomial(m);
    return acc;
}

Character character_from_series(const RatSeries& f, Family fam) {
    if (fam == Family::H0) {
        if (!is_invertible(f) || !f.coeff(0).is_one())
            throw ValidationError("H0 characters come from monic invertible series (g0 = 1)");
        if (f.order() < 1) throw ValidationError("H0 character needs order >= 1");
        std::vector<Rat> vals;
        vals.reserve(static_cast<size_t>(f.order()));
        for (int n = 1; n <= f.order(); ++n) vals.push_back(f.coeff(n));
        return Character(fam, f.order(), std::move(vals));
    }
    if (!is_composable(f) || !f.coeff(1).is_one())
        throw ValidationError("H1 characters come from monic composable series (phi1 = 1)");
    if (f.order() < 2) throw ValidationError("H1 character needs order >= 2");
    std::vector<Rat> vals;
    vals.reserve(static_cast<size_t>(f.order()) - 1);
    for (int n = 1; n < f.order(); ++n) vals.push_back(f.coeff(n + 1));
    return Character(fam, f.order() - 1, std::move(vals));
}

Character char_convolve(const Character& a, const Character& b) {
    require_same_family(a.family(), b.family(), "char_convolve");
    const int maxd = std::min(a.max_degree(), b.max_degree());
    const auto table = delta_table(a.family(), maxd);
    std::vector<Rat> vals(static_cast<size_t>(maxd), Rat(0));
    for (int n = 1; n <= maxd; ++n) {
        Rat acc(0);
        for (const auto& [m, c] : table[static_cast<size_t>(n)].terms())
            acc += c * a.eval_monomial(m.first) * b.eval_monomial(m.second);
        vals[static_cast<size_t>(n) - 1] = std::move(acc);
    }
    return Character(a.family(), maxd, std::move(vals));
}

Character char_antipode(const Character& a) {
    const auto table = antipode_table(a.family(), a.max_degree());
    std::vector<Rat> vals(static_cast<size_t>(a.max_degree()), Rat(0));
    for (int n = 1; n <= a.max_degree(); ++n)
        vals[static_cast<size_t>(n) - 1] = a.eval(table[static_cast<size_t>(n)]);
    return Character(a.family(), a.max_degree(), std::move(vals));
}

std::pair<Character, Character> riordan_character(const RiordanPair& p) {
    if (!p.is_monic())
        throw ValidationError("riordan_character needs a monic pair (g0 = 1, phi1 = 1)");
    return {character_from_series(p.g(), Family::H0), character_from_series(p.phi(), Family::H1)};
}

Rat riordan_char_eval(const Character& h0, const Character& h1, const TensorPoly& t) {
    require_family(h0.family(), Family::H0, "riordan_char_eval");
    require_family(h1.family(), Family::H1, "riordan_char_eval");
    require_family(t.left_family(), Family::H0, "riordan_char_eval(left leg)");
    require_family(t.right_family(), Family::H1, "riordan_char_eval(right leg)");
    Rat acc(0);
    for (const auto& [m, c] : t.terms())
        acc += c * h0.eval_monomial(m.first) * h1.eval_monomial(m.second);
    return acc;
}

} // namespace riordan
