#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/cohomology.hpp"

namespace liecoh {

// kappa(e_i, e_j) = trace(ad e_i ad e_j).
inline Matrix killing(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < n; ++i) ad.push_back(ad_matrix(l, unit_vector(n, i)));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t = trace(ad[i] * ad[j]);
            k(i, j) = t;
            k(j, i) = t;
        }
    return k;
}

// S, [S,S], [[S,S],[S,S]], ... up to and including the first repeated term.
inline std::vector<Subspace> derived_series(const LieAlgebra& l, const Subspace& s) {
    std::vector<Subspace> out{s};
    while (true) {
        auto next = product_space(l, out.back(), out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
    }
    return out;
}

inline std::vector<Subspace> derived_series(const LieAlgebra& l) { return derived_series(l, Subspace::full(l.dim())); }

// L, [L,L], [L,[L,L]], ... up to and including the first repeated term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
    auto full = Subspace::full(l.dim());
    std::vector<Subspace> out{full};
    while (true) {
        auto next = product_space(l, full, out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
    }
    return out;
}

inline bool is_solvable(const LieAlgebra& l, const Subspace& s) { return derived_series(l, s).back().dim() == 0; }
inline bool is_solvable(const LieAlgebra& l) { return derived_series(l).back().dim() == 0; }
inline bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().dim() == 0; }

// Killing-orthogonal complement of [L, L]; in characteristic zero this is
// the solvable radical.
inline Subspace radical(const LieAlgebra& l) {
    auto k = killing(l);
    auto d = derived_algebra(l);
    Subspace rad;
    if (d.dim() == 0) {
        rad = Subspace::full(l.dim());
    } else {
        std::vector<Vector> rows;
        for (const auto& y : d.basis) rows.push_back(k * y);
        rad = Subspace::span(kernel_basis(Matrix::from_rows(rows, l.dim())), l.dim());
    }
    ensure(is_ideal(l, rad), "radical is not an ideal");
    ensure(is_solvable(l, rad), "radical is not solvable");
    return rad;
}

// det(kappa) != 0, cross-checked against radical(L) = 0.
inline bool is_semisimple(const LieAlgebra& l) {
    bool by_det = determinant(killing(l)) != 0;
    bool by_radical = radical(l).dim() == 0;
    ensure(by_det == by_radical, "Killing determinant and radical disagree on semisimplicity");
    return by_det;
}

struct LeviDecomposition {
    Subspace levi;      // semisimple subalgebra S
    Subspace radical;   // Rad(L)
    // For each complement representative of the radical (non-pivot standard
    // basis vectors, ascending), the element of S in the same coset.
    std::vector<Vector> section;
};

namespace detail {

// R abelian: correct the linear section of L -> L/R by a 1-cochain phi with
// d phi = omega, where omega(a, b) = [s a, s b] - s[a, b] measures how far
// the section is from a homomorphism.
inline Subspace levi_abelian_radical(const LieAlgebra& l, const Subspace& r) {
    auto quo = quotient(l, r);
    const auto& q = quo.algebra;
    const std::size_t m = r.dim();
    Representation rmod{q, m, {}};
    for (const auto& rep : quo.representatives) {
        Matrix a(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            auto c = coordinates(bracket(l, rep, r.basis[b]), r.basis);
            ensure(c.has_value(), "radical is not an ideal");
            for (std::size_t k = 0; k < m; ++k) a(k, b) = (*c)[k];
        }
        rmod.action.push_back(std::move(a));
    }
    ensure(!validate_rep(rmod).has_value(), "abelian radical is not a module over the quotient");

    CochainSpace c2(q.dim(), m, 2);
    Vector omega(c2.dim());
    for (std::size_t t = 0; t < c2.tuples.size(); ++t) {
        const auto& a = quo.representatives[c2.tuples[t][0]];
        const auto& b = quo.representatives[c2.tuples[t][1]];
        auto br = bracket(l, a, b);
        auto proj = quo.projection * br;
        Vector lifted(l.dim());
        for (std::size_t k = 0; k < q.dim(); ++k) axpy(proj[k], quo.representatives[k], lifted);
        auto c = coordinates(sub(br, lifted), r.basis);
        ensure(c.has_value(), "section defect does not lie in the radical");
        for (std::size_t k = 0; k < m; ++k) omega[t * m + k] = (*c)[k];
    }
    auto phi = solve(differential_matrix(q, rmod, 1), omega);
    ensure(phi.has_value(), "section defect is not a coboundary; Levi subalgebra cannot be built");

    std::vector<Vector> s;
    for (std::size_t a = 0; a < q.dim(); ++a) {
        Vector v = quo.representatives[a];
        for (std::size_t k = 0; k < m; ++k) axpy(-(*phi)[a * m + k], r.basis[k], v);
        s.push_back(std::move(v));
    }
    return Subspace::span(s, l.dim());
}

inline Subspace levi_subalgebra(const LieAlgebra& l) {
    auto r = radical(l);
    if (r.dim() == 0) return Subspace::full(l.dim());
    if (r.dim() == l.dim()) return Subspace::zero(l.dim());
    auto rr = product_space(l, r, r);
    if (rr.dim() == 0) return levi_abelian_radical(l, r);

    // Split L/[R,R] first, then split the preimage P of its Levi subalgebra;
    // Rad(P) = [R,R] has smaller derived length.
    auto quo = quotient(l, rr);
    auto sbar = levi_subalgebra(quo.algebra);
    std::vector<Vector> gens = rr.basis;
    for (const auto& sv : sbar.basis) {
        Vector lift(l.dim());
        for (std::size_t k = 0; k < sv.size(); ++k) axpy(sv[k], quo.representatives[k], lift);
        gens.push_back(std::move(lift));
    }
    auto p = Subspace::span(gens, l.dim());
    auto pres = subalgebra_restrict(l, p);
    auto sp = levi_subalgebra(pres.algebra);
    std::vector<Vector> s;
    for (const auto& v : sp.basis) s.push_back(pres.inclusion * v);
    return Subspace::span(s, l.dim());
}

} // namespace detail

/*
 * Levi decomposition L = S (+) Rad(L).
 *
 * Rad abelian: one linear solve against the CE differential of L/Rad with
 * coefficients in Rad. Otherwise recurse through L/[Rad, Rad] and the
 * preimage of its Levi subalgebra. Section choices are the echelon
 * complements throughout, so the output is deterministic (not canonical).
 */
inline LeviDecomposition levi(const LieAlgebra& l) {
    auto r = radical(l);
    auto s = detail::levi_subalgebra(l);
    ensure(intersection(s, r).dim() == 0, "Levi subalgebra meets the radical");
    ensure(s.dim() + r.dim() == l.dim(), "Levi subalgebra and radical do not span the algebra");
    ensure(is_subalgebra(l, s), "Levi subalgebra is not closed under the bracket");
    ensure(determinant(killing(subalgebra_restrict(l, s).algebra)) != 0, "Levi subalgebra is not semisimple");

    LeviDecomposition out{s, r, {}};
    auto frame = s.basis;
    frame.insert(frame.end(), r.basis.begin(), r.basis.end());
    auto p = Matrix::from_columns(frame, l.dim());
    for (const auto& rep : quotient_basis(r.basis, l.dim())) {
        auto c = solve(p, rep);
        Vector v(l.dim());
        for (std::size_t a = 0; a < s.dim(); ++a) axpy((*c)[a], s.basis[a], v);
        out.section.push_back(std::move(v));
    }
    return out;
}

struct Codim1Ideal {
    Subspace ideal;
    Vector x;   // outside the ideal
};

// When [L, L] != L: the hyperplane spanned by [L, L] and all but the last
// complement representative, and that last representative.
inline std::optional<Codim1Ideal> codim1_ideal_containing_derived(const LieAlgebra& l) {
    auto d = derived_algebra(l);
    if (d.dim() == l.dim()) return std::nullopt;
    auto reps = quotient_basis(d.basis, l.dim());
    auto gens = d.basis;
    gens.insert(gens.end(), reps.begin(), reps.end() - 1);
    Codim1Ideal out{Subspace::span(gens, l.dim()), reps.back()};
    ensure(is_ideal(l, out.ideal), "subspace containing [L,L] is not an ideal");
    return out;
}

} // namespace liecoh
