#include "riordan/poly.hpp"

namespace riordan {

Monomial Monomial::variable(Var v, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.f_.emplace_back(v, exp);
    return m;
}

long Monomial::weight() const {
    long w = 0;
    for (const auto& [v, e] : f_) w += static_cast<long>(v) * e;
    return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].first < o.f_[j].first) r.f_.push_back(f_[i++]);
        else if (o.f_[j].first < f_[i].first) r.f_.push_back(o.f_[j++]);
        else {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i, ++j;
        }
    }
    while (i < f_.size()) r.f_.push_back(f_[i++]);
    while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
    return r;
}

Poly Poly::variable(Var v, std::uint32_t exp) {
    Poly p;
    p.t_[Monomial::variable(v, exp)] = Rat(1);
    return p;
}

Poly Poly::term(Monomial m, Rat c) {
    Poly p;
    if (!c.is_zero()) p.t_[std::move(m)] = std::move(c);
    return p;
}

Rat Poly::constant_term() const {
    auto it = t_.find(Monomial());
    return it == t_.end() ? Rat(0) : it->second;
}

Var Poly::max_variable() const {
    Var v = 0;
    for (const auto& [m, c] : t_)
        for (const auto& [var, exp] : m.factors())
            if (var > v) v = var;
    return v;
}

long Poly::weight() const {
    long w = 0;
    for (const auto& [m, c] : t_)
        if (m.weight() > w) w = m.weight();
    return w;
}

Poly Poly::inverse() const {
    if (!is_constant() || is_zero())
        throw MathDomainError("polynomial inverse exists only for non-zero constants");
    return Poly(constant_term().inverse());
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::scaled(const Rat& r) const {
    Poly p;
    if (r.is_zero()) return p;
    for (const auto& [m, c] : t_) p.t_[m] = r * c;
    return p;
}

} // namespace riordan
