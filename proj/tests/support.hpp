#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "liecoh/liecoh.hpp"

namespace liecoh::testing {

inline std::string data_dir() { return LIECOH_DATA_DIR; }

inline Matrix mat(std::vector<std::vector<int>> rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

inline Vector vec(std::vector<int> xs) { return Vector(xs.begin(), xs.end()); }

// Small random rationals, biased towards zero so that ranks vary.
inline Rational random_rational(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> zero(0, 2), num(-range, range), den(1, 3);
    if (zero(rng) == 0) return 0;
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return m;
}

// Random invertible integer matrix: product of elementary operations.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    Matrix p = Matrix::identity(n);
    if (n < 2) return p;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        auto i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Rational c = coef(rng);
        for (std::size_t r = 0; r < n; ++r) p(r, i) += c * p(r, j);
    }
    return p;
}

// Plain Gauss-Jordan with rational pivots; shares no code with the library.
inline std::size_t naive_rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Leibniz expansion.
inline Rational leibniz_det(const Matrix& m) {
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Rational total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Rational term = sign;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline LieAlgebra catalog_algebra(const std::string& name) { return catalog::get(name).algebra; }

// Structure constants in a random basis.
inline LieAlgebra random_basis_change(std::mt19937& rng, const LieAlgebra& l) {
    return change_basis(l, random_invertible(rng, l.dim()), l.name() + "'");
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace liecoh::testing
