// Exact dense linear algebra over the rationals: just enough to solve the
// partition-indexed Chern-number systems.
#pragma once

#include <stdexcept>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

using Matrix = std::vector<std::vector<Rational>>;

/// Solves A x = b by fraction-exact Gaussian elimination.
/// A must be square with rows matching b; singular A is rejected.
inline std::vector<Rational> solve_linear(Matrix a, std::vector<Rational> b) {
    const size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_linear: matrix is not square");

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("solve_linear: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0)
                continue;
            Rational f = a[row][col] / a[col][col];
            a[row][col] = 0;
            for (size_t k = col + 1; k < n; ++k)
                a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }

    std::vector<Rational> x(n, Rational(0));
    for (size_t row = n; row-- > 0;) {
        Rational s = b[row];
        for (size_t k = row + 1; k < n; ++k)
            s -= a[row][k] * x[k];
        x[row] = s / a[row][row];
    }
    return x;
}

inline bool invertible(const Matrix& a) {
    try {
        solve_linear(a, std::vector<Rational>(a.size(), Rational(0)));
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace cobord
