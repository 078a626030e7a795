#pragma once

#include <vector>

#include "riordan/rat.hpp"

namespace riordan {

/// Exact lower-triangular matrix; only the entries with k <= n are stored.
class TriMatrix {
  public:
    explicit TriMatrix(int dim);
    static TriMatrix identity(int dim);

    int dim() const { return dim_; }

    /// Entry (n, k); reads above the diagonal return zero.
    const Rat& at(int n, int k) const;
    void set(int n, int k, Rat value);

    bool is_strictly_lower() const;
    bool is_unipotent() const;
    bool is_invertible() const;

    friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const TriMatrix& a, const TriMatrix& b) { return !(a == b); }

    TriMatrix operator+(const TriMatrix& o) const;
    TriMatrix operator-(const TriMatrix& o) const;
    TriMatrix operator*(const TriMatrix& o) const;
    TriMatrix scaled(const Rat& r) const;

    /// Inverse by forward substitution; requires a non-vanishing diagonal.
    TriMatrix inverse() const;

    /// Leading (m+1) x (m+1) block.
    TriMatrix leading_block(int m) const;

  private:
    void check_index(int n, int k) const;
    static size_t slot(int n, int k) { return static_cast<size_t>(n) * (n + 1) / 2 + k; }

    int dim_;
    std::vector<Rat> e_; // packed rows
};

} // namespace riordan
