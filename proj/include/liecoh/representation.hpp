#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

// A finite-dimensional module: one dim x dim action matrix per basis element
// of the algebra. Equality is equality of matrices in the given bases.
struct Representation {
    LieAlgebra algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;

    // Action of an arbitrary element x = sum_i x_i e_i.
    Matrix act(const Vector& x) const {
        require(x.size() == algebra.dim(), "act: element does not belong to the algebra");
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                for (std::size_t r = 0; r < dim; ++r) axpy(x[i], action[i].row(r), m.row(r));
        return m;
    }

    bool same_matrices(const Representation& other) const {
        return dim == other.dim && action == other.action;
    }
};

inline void require_same_algebra(const Representation& v, const LieAlgebra& l, const char* what) {
    require(v.algebra.same_structure(l), std::string(what) + ": module belongs to a different algebra");
}

inline Representation trivial(const LieAlgebra& l, std::size_t dim) {
    return {l, dim, std::vector<Matrix>(l.dim(), Matrix(dim, dim))};
}

// rho_i = ad e_i; column j holds [e_i, e_j].
inline Representation adjoint(const LieAlgebra& l) {
    Representation v{l, l.dim(), {}};
    for (std::size_t i = 0; i < l.dim(); ++i) v.action.push_back(ad_matrix(l, unit_vector(l.dim(), i)));
    return v;
}

inline Representation dual(const Representation& v) {
    Representation out{v.algebra, v.dim, {}};
    for (const auto& m : v.action) out.action.push_back(Rational(-1) * transpose(m));
    return out;
}

// Leibniz action rho_V (x) 1 + 1 (x) rho_W; basis (a, b) -> a * dim W + b.
inline Representation tensor(const Representation& v, const Representation& w) {
    require(v.algebra.same_structure(w.algebra), "tensor: modules over different algebras");
    Representation out{v.algebra, v.dim * w.dim, {}};
    auto iv = Matrix::identity(v.dim);
    auto iw = Matrix::identity(w.dim);
    for (std::size_t i = 0; i < v.algebra.dim(); ++i)
        out.action.push_back(kron(v.action[i], iw) + kron(iv, w.action[i]));
    return out;
}

// Outer tensor of an A-module and a B-module as a module over A (+) B:
// A acts on the first factor, B on the second.
inline Representation outer_tensor(const Representation& va, const Representation& vb, const LieAlgebra& sum_algebra) {
    require(sum_algebra.dim() == va.algebra.dim() + vb.algebra.dim(), "outer_tensor: algebra dimension mismatch");
    Representation out{sum_algebra, va.dim * vb.dim, {}};
    auto ia = Matrix::identity(va.dim);
    auto ib = Matrix::identity(vb.dim);
    for (const auto& m : va.action) out.action.push_back(kron(m, ib));
    for (const auto& m : vb.action) out.action.push_back(kron(ia, m));
    return out;
}

// V as a module over the subalgebra S, acting through S's echelon basis.
inline Representation restrict(const Representation& v, const Subspace& s) {
    auto sub = subalgebra_restrict(v.algebra, s);
    Representation out{std::move(sub.algebra), v.dim, {}};
    for (const auto& b : s.basis) out.action.push_back(v.act(b));
    return out;
}

// Pull back a module over L/I along the projection L -> L/I; I acts by zero.
inline Representation inflate(const Representation& v, const LieAlgebra& l, const Matrix& projection) {
    require(projection.rows() == v.algebra.dim() && projection.cols() == l.dim(), "inflate: projection shape mismatch");
    Representation out{l, v.dim, {}};
    for (std::size_t i = 0; i < l.dim(); ++i) out.action.push_back(v.act(projection.column(i)));
    return out;
}

// Module over L given the action of each vector of a basis `frame` of L
// (frame[a] acts by mats[a]); the action on the standard basis follows by
// linearity.
inline Representation from_frame(const LieAlgebra& l, const std::vector<Vector>& frame, const std::vector<Matrix>& mats,
                                 std::size_t dim) {
    require(frame.size() == l.dim() && mats.size() == l.dim(), "from_frame: frame must be a basis");
    auto p = Matrix::from_columns(frame, l.dim());
    require(rank(p) == l.dim(), "from_frame: frame vectors are dependent");
    Representation out{l, dim, {}};
    for (std::size_t i = 0; i < l.dim(); ++i) {
        auto coeff = solve(p, unit_vector(l.dim(), i));
        Matrix m(dim, dim);
        for (std::size_t a = 0; a < l.dim(); ++a)
            if ((*coeff)[a] != 0)
                for (std::size_t r = 0; r < dim; ++r) axpy((*coeff)[a], mats[a].row(r), m.row(r));
        out.action.push_back(std::move(m));
    }
    return out;
}

// Joint kernel of the actions of a basis of A.
inline Subspace invariants(const Representation& v, const Subspace& a) {
    require(a.ambient_dim == v.algebra.dim(), "invariants: subspace of a different algebra");
    std::vector<Matrix> blocks;
    for (const auto& x : a.basis) blocks.push_back(v.act(x));
    if (blocks.empty()) return Subspace::full(v.dim);
    return Subspace::span(kernel_basis(vstack(blocks, v.dim)), v.dim);
}

inline Subspace invariants(const Representation& v) { return invariants(v, Subspace::full(v.algebra.dim())); }

// Action on an invariant subspace W, in W's echelon coordinates.
inline Representation submodule(const Representation& v, const Subspace& w) {
    require(w.ambient_dim == v.dim, "submodule: subspace of a different module");
    Representation out{v.algebra, w.dim(), {}};
    for (const auto& rho : v.action) {
        Matrix m(w.dim(), w.dim());
        for (std::size_t b = 0; b < w.dim(); ++b) {
            auto c = coordinates(rho * w.basis[b], w.basis);
            require(c.has_value(), "submodule: subspace is not invariant");
            for (std::size_t a = 0; a < w.dim(); ++a) m(a, b) = (*c)[a];
        }
        out.action.push_back(std::move(m));
    }
    return out;
}

// Induced action on V/W, on the non-pivot coset representatives of W.
inline Representation quotient_module(const Representation& v, const Subspace& w) {
    require(w.ambient_dim == v.dim, "quotient_module: subspace of a different module");
    auto reps = quotient_basis(w.basis, v.dim);
    const std::size_t q = reps.size();
    std::vector<std::size_t> where(v.dim, q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t k = 0; k < v.dim; ++k)
            if (reps[a][k] != 0) where[k] = a;
    Representation out{v.algebra, q, {}};
    for (const auto& rho : v.action) {
        for (const auto& wv : w.basis) require(w.contains(rho * wv), "quotient_module: subspace is not invariant");
        Matrix m(q, q);
        for (std::size_t b = 0; b < q; ++b) {
            auto image = rho * reps[b];
            auto r = reduce(image, w.basis);
            for (std::size_t k = 0; k < v.dim; ++k)
                if (r[k] != 0) m(where[k], b) = r[k];
        }
        out.action.push_back(std::move(m));
    }
    return out;
}

struct CommutatorViolation {
    std::size_t i, j;
};

// Checks rho_i rho_j - rho_j rho_i = sum_k c[i][j][k] rho_k for all i < j.
inline std::optional<CommutatorViolation> validate_rep(const Representation& v) {
    const auto& l = v.algebra;
    if (v.action.size() != l.dim()) return CommutatorViolation{l.dim(), l.dim()};
    for (const auto& m : v.action)
        if (m.rows() != v.dim || m.cols() != v.dim) return CommutatorViolation{l.dim(), l.dim()};
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            auto lhs = v.action[i] * v.action[j] - v.action[j] * v.action[i];
            if (lhs != v.act(l.bracket_basis(i, j))) return CommutatorViolation{i, j};
        }
    return std::nullopt;
}

inline void require_valid(const Representation& v) {
    if (auto bad = validate_rep(v)) {
        if (bad->i == v.algebra.dim()) throw InvalidInput("module action matrices have the wrong shape or count");
        throw InvalidInput("module action does not respect the bracket of e" + std::to_string(bad->i) + " and e" +
                           std::to_string(bad->j));
    }
}

} // namespace liecoh
