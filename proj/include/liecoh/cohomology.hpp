#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/representation.hpp"

namespace liecoh {

using Tuple = std::vector<std::size_t>;

// Strictly increasing n-tuples from {0..dim-1} in lexicographic order.
inline std::vector<Tuple> basis_tuples(std::size_t dim, std::size_t n) {
    std::vector<Tuple> out;
    if (n > dim) return out;
    Tuple t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        std::size_t i = n;
        while (i > 0 && t[i - 1] == dim - n + (i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < n; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/*
 * C^n(L, V) = Hom(Lambda^n L, V). A cochain is stored by its values on the
 * basis tuples: coordinate (tuple index) * dim V + (module coordinate).
 */
struct CochainSpace {
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::size_t degree = 0;
    std::vector<Tuple> tuples;
    std::map<Tuple, std::size_t> index;

    CochainSpace(std::size_t algebra_dim_, std::size_t module_dim_, std::size_t degree_)
        : algebra_dim(algebra_dim_), module_dim(module_dim_), degree(degree_),
          tuples(basis_tuples(algebra_dim_, degree_)) {
        for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], i);
    }

    std::size_t dim() const { return tuples.size() * module_dim; }
};

struct Cochain {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Vector coords;

    // Value on the idx-th basis tuple.
    Vector value(std::size_t idx) const {
        auto first = coords.begin() + static_cast<std::ptrdiff_t>(idx * module_dim);
        return Vector(first, first + static_cast<std::ptrdiff_t>(module_dim));
    }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

struct CohomologyResult {
    std::size_t degree = 0;
    std::size_t dim_Z = 0;
    std::size_t dim_B = 0;
    std::size_t dim_H = 0;
    std::vector<Cochain> representatives;
    std::vector<Cochain> coboundary_basis;
};

namespace detail {

// Sign that sorts (k, rest...) when k is not in the sorted tuple `rest`, and
// the sorted result.
inline std::pair<int, Tuple> insert_sorted(std::size_t k, const Tuple& rest) {
    Tuple out;
    out.reserve(rest.size() + 1);
    std::size_t below = 0;
    for (auto t : rest)
        if (t < k) ++below;
    out = rest;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(below), k);
    return {below % 2 == 0 ? 1 : -1, std::move(out)};
}

inline bool contains(const Tuple& t, std::size_t k) { return std::find(t.begin(), t.end(), k) != t.end(); }

inline void add_block(Matrix& m, std::size_t row0, std::size_t col0, const Rational& s, const Matrix& block) {
    if (s == 0) return;
    for (std::size_t a = 0; a < block.rows(); ++a)
        for (std::size_t b = 0; b < block.cols(); ++b)
            if (block(a, b) != 0) m(row0 + a, col0 + b) += s * block(a, b);
}

inline void add_identity(Matrix& m, std::size_t row0, std::size_t col0, const Rational& s, std::size_t size) {
    if (s == 0) return;
    for (std::size_t a = 0; a < size; ++a) m(row0 + a, col0 + a) += s;
}

inline Rational parity(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

} // namespace detail

/*
 * Chevalley-Eilenberg differential d: C^n(L,V) -> C^{n+1}(L,V),
 *
 *   (d w)(x_0..x_n) = sum_i (-1)^i x_i . w(..^x_i..)
 *                   + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^x_i..^x_j..),
 *
 * evaluated on basis tuples. A bracket result e_k is moved into sorted
 * position with the sign of the insertion.
 */
inline Matrix differential_matrix(const LieAlgebra& l, const Representation& v, std::size_t n) {
    require_same_algebra(v, l, "differential_matrix");
    require(n <= l.dim(), "degree " + std::to_string(n) + " exceeds the algebra dimension " + std::to_string(l.dim()));
    const std::size_t m = v.dim;
    CochainSpace src(l.dim(), m, n);
    CochainSpace dst(l.dim(), m, n + 1);
    Matrix d(dst.dim(), src.dim());
    for (std::size_t r = 0; r < dst.tuples.size(); ++r) {
        const Tuple& t = dst.tuples[r];
        for (std::size_t i = 0; i <= n; ++i) {
            Tuple s = t;
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
            detail::add_block(d, r * m, src.index.at(s) * m, detail::parity(i), v.action[t[i]]);
        }
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                Tuple rest;
                for (std::size_t p = 0; p <= n; ++p)
                    if (p != i && p != j) rest.push_back(t[p]);
                const Rational outer = detail::parity(i + j);
                for (std::size_t k = 0; k < l.dim(); ++k) {
                    Rational c = l.constant(t[i], t[j], k);
                    if (c == 0 || detail::contains(rest, k)) continue;
                    auto [sign, u] = detail::insert_sorted(k, rest);
                    detail::add_identity(d, r * m, src.index.at(u) * m, outer * c * sign, m);
                }
            }
    }
    return d;
}

inline Cochain make_cochain(const LieAlgebra& l, const Representation& v, std::size_t n, Vector coords) {
    return {n, l.dim(), v.dim, std::move(coords)};
}

/*
 * H^n(L, V) with deterministic representatives: the kernel basis of d_n is
 * reduced modulo the echelon basis of B^n = im d_{n-1}, in order, and a
 * reduced vector is kept when it is independent of B^n and of the
 * representatives kept before it.
 */
inline CohomologyResult cohomology(const LieAlgebra& l, const Representation& v, std::size_t n) {
    auto dn = differential_matrix(l, v, n);
    CohomologyResult res;
    res.degree = n;
    std::vector<Vector> b_basis;
    if (n > 0) {
        auto dprev = differential_matrix(l, v, n - 1);
        ensure((dn * dprev).is_zero(), "d o d != 0 in degree " + std::to_string(n));
        b_basis = echelon_basis([&] {
            std::vector<Vector> cols;
            for (std::size_t c = 0; c < dprev.cols(); ++c) cols.push_back(dprev.column(c));
            return cols;
        }(), dn.cols());
    }
    auto z = kernel_basis(dn);
    res.dim_Z = z.size();
    res.dim_B = b_basis.size();
    ensure(res.dim_B <= res.dim_Z, "coboundaries exceed cocycles in degree " + std::to_string(n));
    res.dim_H = res.dim_Z - res.dim_B;

    auto running = b_basis;
    for (const auto& zv : z) {
        auto nf = reduce(zv, b_basis);
        auto check = reduce(nf, running);
        if (is_zero(check)) continue;
        running.push_back(std::move(check));
        res.representatives.push_back(make_cochain(l, v, n, std::move(nf)));
    }
    ensure(res.representatives.size() == res.dim_H, "representative count disagrees with dim H");
    for (auto& b : b_basis) res.coboundary_basis.push_back(make_cochain(l, v, n, std::move(b)));
    return res;
}

inline std::size_t cohomology_dim(const LieAlgebra& l, const Representation& v, std::size_t n) {
    auto dn = differential_matrix(l, v, n);
    std::size_t nullity = dn.cols() - rank(dn);
    std::size_t b = n > 0 ? rank(differential_matrix(l, v, n - 1)) : 0;
    ensure(b <= nullity, "coboundaries exceed cocycles in degree " + std::to_string(n));
    return nullity - b;
}

inline bool is_cocycle(const LieAlgebra& l, const Representation& v, const Cochain& w) {
    require(w.coords.size() == CochainSpace(l.dim(), v.dim, w.degree).dim(), "cochain has the wrong length");
    return is_zero(differential_matrix(l, v, w.degree) * w.coords);
}

// A preimage phi with d phi = w, or nullopt when the class of w is nonzero.
// w must be a cocycle.
inline std::optional<Cochain> is_coboundary(const LieAlgebra& l, const Representation& v, const Cochain& w) {
    require(w.degree <= l.dim(), "degree exceeds the algebra dimension");
    require(is_cocycle(l, v, w), "is_coboundary: cochain is not a cocycle");
    if (w.degree == 0) {
        if (is_zero(w.coords)) return make_cochain(l, v, 0, Vector(v.dim));
        return std::nullopt;
    }
    auto phi = solve(differential_matrix(l, v, w.degree - 1), w.coords);
    if (!phi) return std::nullopt;
    return make_cochain(l, v, w.degree - 1, std::move(*phi));
}

/*
 * Action of an element x normalizing the subalgebra on C^n:
 *
 *   (x.w)(a_1..a_n) = x.w(a_1..a_n) - sum_i w(a_1,..,[x,a_i],..,a_n).
 *
 * `ad_x` is the matrix of [x, -] on the subalgebra in its own basis and
 * `rho_x` the action of x on the module.
 */
inline Matrix cochain_action_matrix(std::size_t algebra_dim, std::size_t n, const Matrix& ad_x, const Matrix& rho_x) {
    const std::size_t m = rho_x.rows();
    CochainSpace space(algebra_dim, m, n);
    Matrix a(space.dim(), space.dim());
    for (std::size_t r = 0; r < space.tuples.size(); ++r) {
        const Tuple& t = space.tuples[r];
        detail::add_block(a, r * m, r * m, 1, rho_x);
        for (std::size_t i = 0; i < n; ++i) {
            Tuple rest = t;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            for (std::size_t k = 0; k < algebra_dim; ++k) {
                const Rational& c = ad_x(k, t[i]);
                if (c == 0 || detail::contains(rest, k)) continue;
                auto [sign, u] = detail::insert_sorted(k, rest);
                detail::add_identity(a, r * m, space.index.at(u) * m, -c * sign * detail::parity(i), m);
            }
        }
    }
    return a;
}

// H^n(I, V) for an ideal I of L, with what is needed to act on it by L.
struct IdealCohomology {
    Subspace ideal;
    Restriction sub;
    Representation restricted;
    CohomologyResult h;
};

inline IdealCohomology ideal_cohomology(const LieAlgebra& l, const Subspace& ideal, const Representation& v,
                                        std::size_t n) {
    require_same_algebra(v, l, "ideal_cohomology");
    require(is_ideal(l, ideal), "subspace is not an ideal");
    auto sub = subalgebra_restrict(l, ideal);
    auto vi = restrict(v, ideal);
    auto h = cohomology(sub.algebra, vi, n);
    return {ideal, std::move(sub), std::move(vi), std::move(h)};
}

// Matrix of the endomorphism of H^n(I, V) induced by x in L, in the
// representative basis. Checks that coboundaries go to coboundaries.
inline Matrix induced_action(const LieAlgebra& l, const Representation& v, const IdealCohomology& ic, const Vector& x) {
    require(x.size() == l.dim(), "element does not belong to the algebra");
    const std::size_t idim = ic.ideal.dim();
    Matrix ad_x(idim, idim);
    for (std::size_t a = 0; a < idim; ++a) {
        auto c = coordinates(bracket(l, x, ic.ideal.basis[a]), ic.ideal.basis);
        ensure(c.has_value(), "bracket with the ideal left the ideal");
        for (std::size_t k = 0; k < idim; ++k) ad_x(k, a) = (*c)[k];
    }
    auto act = cochain_action_matrix(idim, ic.h.degree, ad_x, v.act(x));

    std::vector<Vector> b;
    for (const auto& c : ic.h.coboundary_basis) b.push_back(c.coords);
    for (const auto& c : b) ensure(is_zero(reduce(act * c, b)), "induced action does not preserve coboundaries");

    const std::size_t h = ic.h.dim_H;
    std::vector<Vector> cols;
    for (const auto& r : ic.h.representatives) cols.push_back(r.coords);
    cols.insert(cols.end(), b.begin(), b.end());
    auto g = Matrix::from_columns(cols, act.rows());
    Matrix out(h, h);
    for (std::size_t j = 0; j < h; ++j) {
        auto alpha = solve(g, act * ic.h.representatives[j].coords);
        ensure(alpha.has_value(), "induced action does not map cocycles to cocycles");
        for (std::size_t k = 0; k < h; ++k) out(k, j) = (*alpha)[k];
    }
    return out;
}

inline Matrix element_action_on_cohomology(const LieAlgebra& l, const Subspace& ideal, const Representation& v,
                                           std::size_t n, const Vector& x) {
    auto ic = ideal_cohomology(l, ideal, v, n);
    return induced_action(l, v, ic, x);
}

// dim H^n(I, V)^x, the nullity of the induced action.
inline std::size_t invariant_cohomology_dim(const LieAlgebra& l, const Subspace& ideal, const Representation& v,
                                            std::size_t n, const Vector& x) {
    auto a = element_action_on_cohomology(l, ideal, v, n, x);
    return a.cols() - rank(a);
}

// H^q(I, V) as a module over L/I, acting through the coset representatives.
inline Representation cohomology_as_quotient_module(const LieAlgebra& l, const Subspace& ideal, const Representation& v,
                                                    std::size_t q) {
    auto quo = quotient(l, ideal);
    auto ic = ideal_cohomology(l, ideal, v, q);
    Representation out{quo.algebra, ic.h.dim_H, {}};
    for (const auto& rep : quo.representatives) out.action.push_back(induced_action(l, v, ic, rep));
    ensure(!validate_rep(out).has_value(), "cohomology of the ideal is not a module over the quotient");
    return out;
}

} // namespace liecoh
