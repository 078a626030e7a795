#include "riordan/trimatrix.hpp"

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

namespace {
const Rat kZero(0);
}

TriMatrix::TriMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw MathDomainError("matrix dimension must be positive");
    e_.assign(static_cast<size_t>(dim) * (dim + 1) / 2, Rat(0));
}

TriMatrix TriMatrix::identity(int dim) {
    TriMatrix m(dim);
    for (int n = 0; n < dim; ++n) m.set(n, n, Rat(1));
    return m;
}

void TriMatrix::check_index(int n, int k) const {
    if (n < 0 || n >= dim_ || k < 0 || k >= dim_)
        throw MathDomainError("matrix index (" + std::to_string(n) + ", " + std::to_string(k) +
                              ") out of range for dimension " + std::to_string(dim_));
}

const Rat& TriMatrix::at(int n, int k) const {
    check_index(n, k);
    if (k > n) return kZero;
    return e_[slot(n, k)];
}

void TriMatrix::set(int n, int k, Rat value) {
    check_index(n, k);
    if (k > n) throw MathDomainError("cannot write above the diagonal of a lower-triangular matrix");
    e_[slot(n, k)] = std::move(value);
}

bool TriMatrix::is_strictly_lower() const {
    for (int n = 0; n < dim_; ++n)
        if (!e_[slot(n, n)].is_zero()) return false;
    return true;
}

bool TriMatrix::is_unipotent() const {
    for (int n = 0; n < dim_; ++n)
        if (!e_[slot(n, n)].is_one()) return false;
    return true;
}

bool TriMatrix::is_invertible() const {
    for (int n = 0; n < dim_; ++n)
        if (e_[slot(n, n)].is_zero()) return false;
    return true;
}

TriMatrix TriMatrix::operator+(const TriMatrix& o) const {
    if (dim_ != o.dim_) throw MathDomainError("matrix dimensions differ");
    TriMatrix r(dim_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

TriMatrix TriMatrix::operator-(const TriMatrix& o) const {
    if (dim_ != o.dim_) throw MathDomainError("matrix dimensions differ");
    TriMatrix r(dim_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

TriMatrix TriMatrix::operator*(const TriMatrix& o) const {
    if (dim_ != o.dim_) throw MathDomainError("matrix dimensions differ");
    TriMatrix r(dim_);
    for (int n = 0; n < dim_; ++n)
        for (int k = 0; k <= n; ++k) {
            Rat acc(0);
            for (int j = k; j <= n; ++j) acc += e_[slot(n, j)] * o.e_[slot(j, k)];
            r.e_[slot(n, k)] = std::move(acc);
        }
    return r;
}

TriMatrix TriMatrix::scaled(const Rat& r) const {
    TriMatrix m(dim_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = r * e_[i];
    return m;
}

TriMatrix TriMatrix::inverse() const {
    if (!is_invertible())
        throw MathDomainError("triangular matrix with zero diagonal entry has no inverse");
    TriMatrix x(dim_);
    for (int k = 0; k < dim_; ++k) {
        for (int n = k; n < dim_; ++n) {
            Rat acc = (n == k) ? Rat(1) : Rat(0);
            for (int j = k; j < n; ++j) acc -= e_[slot(n, j)] * x.e_[slot(j, k)];
            x.e_[slot(n, k)] = acc / e_[slot(n, n)];
        }
    }
    return x;
}

TriMatrix TriMatrix::leading_block(int m) const {
    if (m < 0 || m >= dim_) throw MathDomainError("leading block exceeds matrix dimension");
    TriMatrix r(m + 1);
    for (int n = 0; n <= m; ++n)
        for (int k = 0; k <= n; ++k) r.e_[slot(n, k)] = e_[slot(n, k)];
    return r;
}

} // namespace riordan
