#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/error.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline void axpy(const Rational& a, std::span<const Rational> x, std::span<Rational> y) {
    if (a == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] += a * x[i];
}

inline Vector add(const Vector& a, const Vector& b) {
    Vector out(a);
    axpy(1, b, out);
    return out;
}

inline Vector sub(const Vector& a, const Vector& b) {
    Vector out(a);
    axpy(-1, b, out);
    return out;
}

inline Vector scaled(const Rational& s, const Vector& a) {
    Vector out(a.size());
    axpy(s, a, out);
    return out;
}

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // All rows must have length `cols`; `cols` is needed for the empty case.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, "row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector row_vector(std::size_t i) const {
        auto r = row(i);
        return Vector(r.begin(), r.end());
    }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const { return liecoh::is_zero(data_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            axpy(aik, b.row(k), c.row(i));
        }
    return c;
}

inline Vector operator*(const Matrix& a, const Vector& x) {
    require(a.cols() == x.size(), "matrix-vector shape mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        auto r = a.row(i);
        for (std::size_t k = 0; k < x.size(); ++k)
            if (r[k] != 0 && x[k] != 0) s += r[k] * x[k];
        y[i] = s;
    }
    return y;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(1, b.row(i), c.row(i));
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(-1, b.row(i), c.row(i));
    return c;
}

inline Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(s, a.row(i), c.row(i));
    return c;
}

inline Rational trace(const Matrix& m) {
    require(m.rows() == m.cols(), "trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Kronecker product, index (a, b) -> a * b.rows() + b for rows and columns.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

// Vertical concatenation; all blocks need the same column count.
inline Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == cols, "vstack column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            std::copy(b.row(i).begin(), b.row(i).end(), out.row(r).begin());
    return out;
}

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
};

namespace detail {

// Fraction-free forward elimination on an integer matrix (Bareiss). Pivot is
// the first nonzero entry, scanning rows from the current one down, in each
// column left to right. Every division by the previous pivot is exact.
// Returns the pivot columns; on exit rows [0, rank) hold an echelon form and
// the remaining rows are zero.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& a, std::size_t cols,
                                                Integer* det_sign_and_value = nullptr) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * a[i][j];
                if (lead != 0) v -= lead * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    if (det_sign_and_value != nullptr) *det_sign_and_value = sign * prev;
    return pivots;
}

// Each row multiplied by the lcm of its denominators; row space is unchanged.
inline std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            a[i][j] = x.get_num() * (l / x.get_den());
        }
    }
    return a;
}

} // namespace detail

// Reduced row echelon form with exact arithmetic. Elimination runs
// fraction-free on integers; the echelon rows are then normalized to unit
// pivots and cleared above each pivot.
inline RrefResult rref(const Matrix& m) {
    auto a = detail::integer_rows(m);
    auto pivots = detail::bareiss_echelon(a, m.cols());
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Integer& piv = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < m.cols(); ++j)
            if (a[i][j] != 0) {
                Rational q(a[i][j], piv);
                q.canonicalize();
                out(i, j) = std::move(q);
            }
    }
    for (std::size_t i = pivots.size(); i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = out(k, pivots[i]);
            if (f == 0) continue;
            axpy(-f, out.row(i), out.row(k));
        }
    }
    return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
    auto a = detail::integer_rows(m);
    return detail::bareiss_echelon(a, m.cols()).size();
}

inline Rational determinant(const Matrix& m) {
    require(m.rows() == m.cols(), "determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Rational scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        scale *= l;
    }
    auto a = detail::integer_rows(m);
    Integer det;
    auto pivots = detail::bareiss_echelon(a, m.cols(), &det);
    if (pivots.size() < m.rows()) return 0;
    Rational out(det);
    return out / scale;
}

// Null-space basis. Free columns in ascending order; each basis vector has a
// 1 in its own free coordinate and 0 in the other free coordinates.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// A particular solution with all free variables zero, or nullopt when the
// system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    require(b.size() == m.rows(), "solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
        aug(i, m.cols()) = b[i];
    }
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
    return x;
}

// Echelon basis (nonzero rref rows) of the span of `vectors`.
inline std::vector<Vector> echelon_basis(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    auto [r, pivots] = rref(Matrix::from_rows(vectors, ambient_dim));
    std::vector<Vector> out;
    out.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row_vector(i));
    return out;
}

inline std::vector<std::size_t> pivot_columns(const std::vector<Vector>& echelon) {
    std::vector<std::size_t> piv;
    for (const auto& v : echelon) {
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        piv.push_back(static_cast<std::size_t>(it - v.begin()));
    }
    return piv;
}

// Standard basis vectors at the non-pivot columns of the subspace's echelon
// form, ascending: coset representatives for a complement.
inline std::vector<Vector> quotient_basis(const std::vector<Vector>& subspace, std::size_t ambient_dim) {
    auto [r, pivots] = rref(Matrix::from_rows(subspace, ambient_dim));
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> reps;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) reps.push_back(unit_vector(ambient_dim, j));
    return reps;
}

// Normal form of v modulo the span of `echelon`, whose rows must each vanish
// at the pivots (first nonzero entries) of all earlier rows. The pivot
// coordinates of the result are zero.
inline Vector reduce(const Vector& v, const std::vector<Vector>& echelon) {
    Vector out(v);
    auto piv = pivot_columns(echelon);
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        if (out[piv[i]] == 0) continue;
        Rational f = out[piv[i]] / echelon[i][piv[i]];
        axpy(-f, echelon[i], out);
    }
    return out;
}

// Coordinates of v in a reduced echelon basis; nullopt when v is outside the span.
inline std::optional<Vector> coordinates(const Vector& v, const std::vector<Vector>& echelon) {
    if (!is_zero(reduce(v, echelon))) return std::nullopt;
    auto piv = pivot_columns(echelon);
    Vector c(echelon.size());
    for (std::size_t i = 0; i < echelon.size(); ++i) c[i] = v[piv[i]];
    return c;
}

} // namespace liecoh
