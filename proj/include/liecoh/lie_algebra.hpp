#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh {

// One nonzero bracket [e_i, e_j] = value (coordinates in the basis).
struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
};

/*
 * Finite-dimensional Lie algebra over Q given by structure constants
 *
 *   [e_i, e_j] = sum_k c[i][j][k] e_k.
 *
 * Only the pairs i < j are stored; [e_j, e_i] is the negation and [e_i, e_i]
 * is zero, so antisymmetry holds by construction. The Jacobi identity is not
 * enforced on construction; see validate().
 */
class LieAlgebra {
public:
    LieAlgebra() = default;

    LieAlgebra(std::string name, std::vector<std::string> basis, const std::vector<Bracket>& brackets)
        : name_(std::move(name)), basis_(std::move(basis)), dim_(basis_.size()),
          table_(dim_ * (dim_ > 0 ? dim_ - 1 : 0) / 2, Vector(dim_)) {
        for (const auto& b : brackets) {
            require(b.i < dim_ && b.j < dim_, "bracket index out of range");
            require(b.value.size() == dim_, "bracket value has wrong length");
            if (b.i == b.j) {
                require(is_zero(b.value), "bracket [e_i, e_i] must be zero");
                continue;
            }
            auto& slot = table_[pair_index(std::min(b.i, b.j), std::max(b.i, b.j))];
            axpy(b.i < b.j ? Rational(1) : Rational(-1), b.value, slot);
        }
    }

    // Abelian algebra with basis e0..e{n-1}.
    static LieAlgebra abelian(std::size_t n, std::string name = {}) {
        std::vector<std::string> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));
        if (name.empty()) name = "abelian" + std::to_string(n);
        return LieAlgebra(std::move(name), std::move(basis), {});
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_; }
    std::size_t dim() const { return dim_; }

    // [e_i, e_j] as a coordinate vector.
    Vector bracket_basis(std::size_t i, std::size_t j) const {
        if (i == j) return Vector(dim_);
        if (i < j) return table_[pair_index(i, j)];
        return scaled(-1, table_[pair_index(j, i)]);
    }

    Rational constant(std::size_t i, std::size_t j, std::size_t k) const {
        if (i == j) return 0;
        if (i < j) return table_[pair_index(i, j)][k];
        return -table_[pair_index(j, i)][k];
    }

    // Nonzero pairs with i < j, in lexicographic order.
    std::vector<Bracket> brackets() const {
        std::vector<Bracket> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (!is_zero(table_[pair_index(i, j)])) out.push_back({i, j, table_[pair_index(i, j)]});
        return out;
    }

    LieAlgebra renamed(std::string name) const {
        LieAlgebra copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

    // Equality of structure constants and dimension; names are labels only.
    bool same_structure(const LieAlgebra& other) const {
        return dim_ == other.dim_ && table_ == other.table_;
    }

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        // Row-major index of (i, j), i < j, in the strict upper triangle.
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::string name_;
    std::vector<std::string> basis_;
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
};

// Linear subspace of an algebra (or module), stored as a reduced echelon basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vector> basis;

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
        for (const auto& v : vectors) require(v.size() == ambient_dim, "vector length does not match ambient dimension");
        return {ambient_dim, echelon_basis(vectors, ambient_dim)};
    }
    static Subspace zero(std::size_t ambient_dim) { return {ambient_dim, {}}; }
    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vector> b;
        for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vector(ambient_dim, i));
        return {ambient_dim, std::move(b)};
    }

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vector& v) const { return v.size() == ambient_dim && is_zero(reduce(v, basis)); }
    bool contains(const Subspace& other) const {
        if (other.ambient_dim != ambient_dim) return false;
        for (const auto& v : other.basis)
            if (!contains(v)) return false;
        return true;
    }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == b.ambient_dim, "subspace sum: ambient mismatch");
    auto all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return Subspace::span(all, a.ambient_dim);
}

inline Subspace intersection(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == b.ambient_dim, "subspace intersection: ambient mismatch");
    // Kernel of [A^T | -B^T] gives pairs (s, t) with sum s_i a_i = sum t_j b_j.
    const std::size_t n = a.ambient_dim;
    Matrix m(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis[i][r];
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis[j][r];
    std::vector<Vector> vecs;
    for (const auto& k : kernel_basis(m)) {
        Vector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(k[i], a.basis[i], v);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n);
}

// Bilinear extension of the structure constants.
inline Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y) {
    require(x.size() == l.dim() && y.size() == l.dim(), "bracket: element does not belong to the algebra");
    Vector out(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < l.dim(); ++j) {
            if (y[j] == 0 || i == j) continue;
            axpy(x[i] * y[j], l.bracket_basis(i, j), out);
        }
    }
    return out;
}

// Matrix of ad x: column j is [x, e_j].
inline Matrix ad_matrix(const LieAlgebra& l, const Vector& x) {
    Matrix m(l.dim(), l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) {
        auto col = bracket(l, x, unit_vector(l.dim(), j));
        for (std::size_t k = 0; k < l.dim(); ++k) m(k, j) = col[k];
    }
    return m;
}

struct JacobiViolation {
    std::size_t i, j, l, m;   // sum over cyclic (i, j, l) of [[e_i, e_j], e_l] has nonzero m-th coordinate
    Rational value;
};

// First violating tuple in lexicographic (i < j < l, m) order, or nullopt.
inline std::optional<JacobiViolation> validate(const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        s += alg.constant(i, j, k) * alg.constant(k, l, m);
                        s += alg.constant(j, l, k) * alg.constant(k, i, m);
                        s += alg.constant(l, i, k) * alg.constant(k, j, m);
                    }
                    if (s != 0) return JacobiViolation{i, j, l, m, s};
                }
    return std::nullopt;
}

inline void require_valid(const LieAlgebra& alg) {
    if (auto v = validate(alg))
        throw InvalidInput("Jacobi identity fails for '" + alg.name() + "' at (" + std::to_string(v->i) + ", " +
                           std::to_string(v->j) + ", " + std::to_string(v->l) + ") coordinate " +
                           std::to_string(v->m));
}

// Span of all [a, b] with a, b ranging over bases of A and B.
inline Subspace product_space(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == l.dim() && b.ambient_dim == l.dim(), "product_space: ambient mismatch");
    std::vector<Vector> v;
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) v.push_back(bracket(l, x, y));
    return Subspace::span(v, l.dim());
}

inline Subspace derived_algebra(const LieAlgebra& l) {
    auto full = Subspace::full(l.dim());
    return product_space(l, full, full);
}

inline bool is_ideal(const LieAlgebra& l, const Subspace& i) {
    if (i.ambient_dim != l.dim()) return false;
    return i.contains(product_space(l, Subspace::full(l.dim()), i));
}

inline bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
    if (s.ambient_dim != l.dim()) return false;
    return s.contains(product_space(l, s, s));
}

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;                   // dim(L/I) x dim(L)
    std::vector<Vector> representatives; // coset representatives in L, one per quotient basis element
};

inline Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
    require(is_ideal(l, ideal), "quotient: subspace is not an ideal");
    auto reps = quotient_basis(ideal.basis, l.dim());
    const std::size_t q = reps.size();
    std::vector<std::size_t> rep_index(l.dim(), q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t k = 0; k < l.dim(); ++k)
            if (reps[a][k] != 0) rep_index[k] = a;

    // Reducing modulo the ideal clears its pivot columns; what is left sits on
    // the representative coordinates.
    auto project = [&](const Vector& v) {
        auto r = reduce(v, ideal.basis);
        Vector out(q);
        for (std::size_t k = 0; k < l.dim(); ++k)
            if (r[k] != 0) out[rep_index[k]] = r[k];
        return out;
    };

    Matrix proj(q, l.dim());
    for (std::size_t k = 0; k < l.dim(); ++k) {
        auto c = project(unit_vector(l.dim(), k));
        for (std::size_t a = 0; a < q; ++a) proj(a, k) = c[a];
    }
    std::vector<std::string> names;
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < q; ++a) {
        std::size_t k = 0;
        while (reps[a][k] == 0) ++k;
        names.push_back(l.basis_names()[k]);
        for (std::size_t b = a + 1; b < q; ++b) {
            auto c = project(bracket(l, reps[a], reps[b]));
            if (!is_zero(c)) br.push_back({a, b, std::move(c)});
        }
    }
    return {LieAlgebra(l.name() + "/I", std::move(names), br), std::move(proj), std::move(reps)};
}

struct Restriction {
    LieAlgebra algebra;
    Matrix inclusion;   // dim(L) x dim(S); column a is the a-th basis vector of S
};

// Structure constants of a subalgebra in its echelon basis.
inline Restriction subalgebra_restrict(const LieAlgebra& l, const Subspace& s) {
    require(s.ambient_dim == l.dim(), "subalgebra_restrict: ambient mismatch");
    const std::size_t m = s.dim();
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            auto c = coordinates(bracket(l, s.basis[a], s.basis[b]), s.basis);
            require(c.has_value(), "subalgebra_restrict: subspace is not closed under the bracket");
            if (!is_zero(*c)) br.push_back({a, b, std::move(*c)});
        }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) names.push_back("b" + std::to_string(a));
    return {LieAlgebra(l.name() + "|S", std::move(names), br), Matrix::from_columns(s.basis, l.dim())};
}

// Block structure constants; brackets across the summands vanish.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name = {}) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<Bracket> br;
    for (const auto& x : a.brackets()) {
        Vector v(n);
        std::copy(x.value.begin(), x.value.end(), v.begin());
        br.push_back({x.i, x.j, std::move(v)});
    }
    for (const auto& x : b.brackets()) {
        Vector v(n);
        std::copy(x.value.begin(), x.value.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        br.push_back({a.dim() + x.i, a.dim() + x.j, std::move(v)});
    }
    auto names = a.basis_names();
    names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
    if (name.empty()) name = a.name() + "+" + b.name();
    return LieAlgebra(std::move(name), std::move(names), br);
}

// The same algebra written in the basis f_a = sum_i columns(i, a) e_i.
// `columns` must be invertible.
inline LieAlgebra change_basis(const LieAlgebra& l, const Matrix& columns, std::string name = {}) {
    require(columns.rows() == l.dim() && columns.cols() == l.dim(), "change_basis: shape mismatch");
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < l.dim(); ++a) cols.push_back(columns.column(a));
    std::vector<Bracket> br;
    for (std::size_t a = 0; a < l.dim(); ++a)
        for (std::size_t b = a + 1; b < l.dim(); ++b) {
            auto c = solve(columns, bracket(l, cols[a], cols[b]));
            require(c.has_value(), "change_basis: matrix is singular");
            if (!is_zero(*c)) br.push_back({a, b, std::move(*c)});
        }
    require(rank(columns) == l.dim(), "change_basis: matrix is singular");
    std::vector<std::string> names;
    for (std::size_t a = 0; a < l.dim(); ++a) names.push_back("f" + std::to_string(a));
    return LieAlgebra(name.empty() ? l.name() : std::move(name), std::move(names), br);
}

} // namespace liecoh
