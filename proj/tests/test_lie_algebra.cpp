#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;
using liecoh::testing::catalog_algebra;
using liecoh::testing::vec;

namespace {

// sl2 with one structure constant shifted: c[i][j][k] += 1 (and c[j][i][k] -= 1).
LieAlgebra perturbed_sl2(std::size_t i, std::size_t j, std::size_t k) {
    auto l = catalog::sl2();
    std::vector<Bracket> br = l.brackets();
    Vector extra = unit_vector(3, k);
    br.push_back({i, j, extra});
    return LieAlgebra("sl2~", l.basis_names(), br);
}

// Jacobi by brute force on every ordered basis triple, through bracket().
bool jacobi_by_enumeration(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto x = unit_vector(n, a), y = unit_vector(n, b), z = unit_vector(n, c);
                auto s = add(add(bracket(l, bracket(l, x, y), z), bracket(l, bracket(l, y, z), x)),
                             bracket(l, bracket(l, z, x), y));
                if (!is_zero(s)) return false;
            }
    return true;
}

} // namespace

TEST(LieAlgebra, ValidateExamples) {
    EXPECT_FALSE(validate(LieAlgebra::abelian(3)).has_value());
    EXPECT_FALSE(validate(catalog::sl2()).has_value());
    for (const auto& name : catalog::list()) EXPECT_FALSE(validate(catalog_algebra(name))) << name;
}

TEST(LieAlgebra, PerturbationOfTheEfBracketBreaksJacobi) {
    // [e, h] gains an h component.
    auto bad = perturbed_sl2(0, 1, 1);
    auto v = validate(bad);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->i, 0u);
    EXPECT_EQ(v->j, 1u);
    EXPECT_EQ(v->l, 2u);
    EXPECT_NE(v->value, 0);
    EXPECT_FALSE(jacobi_by_enumeration(bad));
    EXPECT_THROW(require_valid(bad), InvalidInput);
}

TEST(LieAlgebra, PerturbationInsideTheFDirectionStaysLie) {
    // [e, h] gains an f component; the Jacobiator change cancels in every
    // coordinate, so this is still a Lie algebra.
    auto p = perturbed_sl2(0, 1, 2);
    EXPECT_FALSE(validate(p).has_value());
    EXPECT_TRUE(jacobi_by_enumeration(p));
}

TEST(LieAlgebra, ValidateAgreesWithEnumerationOnRandomPerturbations) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> idx(0, 2);
    for (const auto& name : {"sl2", "so3", "heisenberg3", "solvable3"}) {
        auto base = catalog_algebra(name);
        for (int t = 0; t < 20; ++t) {
            auto i = idx(rng), j = idx(rng), k = idx(rng);
            if (i == j) continue;
            auto br = base.brackets();
            br.push_back({i, j, scaled(liecoh::testing::random_rational(rng), unit_vector(3, k))});
            LieAlgebra p("p", base.basis_names(), br);
            EXPECT_EQ(!validate(p).has_value(), jacobi_by_enumeration(p)) << name;
        }
    }
}

TEST(LieAlgebra, AntisymmetryFromConstruction) {
    // Supplying [y, x] = -y is the same as [x, y] = y.
    LieAlgebra a("a", {"x", "y"}, {{1, 0, vec({0, -1})}});
    EXPECT_TRUE(a.same_structure(catalog::aff1()));
    EXPECT_EQ(a.constant(1, 0, 1), -1);
    EXPECT_EQ(a.constant(0, 0, 1), 0);
    EXPECT_THROW(LieAlgebra("b", {"x"}, {{0, 0, vec({1})}}), InvalidInput);
    EXPECT_THROW(LieAlgebra("b", {"x"}, {{0, 1, vec({1})}}), InvalidInput);
}

TEST(LieAlgebra, BracketExamples) {
    auto ab = LieAlgebra::abelian(3);
    EXPECT_TRUE(is_zero(bracket(ab, vec({1, 2, 3}), vec({-1, 0, 5}))));
    auto aff = catalog::aff1();
    EXPECT_EQ(bracket(aff, vec({1, 0}), vec({0, 1})), vec({0, 1}));
    auto sl = catalog::sl2();
    EXPECT_EQ(bracket(sl, vec({1, 0, 0}), vec({0, 0, 1})), vec({0, 1, 0}));
    EXPECT_EQ(bracket(sl, vec({0, 1, 0}), vec({1, 0, 0})), vec({2, 0, 0}));
}

TEST(LieAlgebra, DerivedAlgebraExamples) {
    EXPECT_EQ(derived_algebra(LieAlgebra::abelian(3)).dim(), 0u);
    auto d = derived_algebra(catalog::aff1());
    EXPECT_EQ(d, Subspace::span({vec({0, 1})}, 2));
    EXPECT_EQ(derived_algebra(catalog::sl2()).dim(), 3u);
}

TEST(LieAlgebra, IdealExamples) {
    auto aff = catalog::aff1();
    EXPECT_TRUE(is_ideal(aff, Subspace::span({vec({0, 1})}, 2)));
    EXPECT_FALSE(is_ideal(aff, Subspace::span({vec({1, 0})}, 2)));
    EXPECT_TRUE(is_ideal(aff, Subspace::full(2)));
    EXPECT_TRUE(is_ideal(aff, Subspace::zero(2)));
}

TEST(LieAlgebra, QuotientExamples) {
    auto aff = catalog::aff1();
    auto q = quotient(aff, Subspace::span({vec({0, 1})}, 2));
    EXPECT_EQ(q.algebra.dim(), 1u);
    EXPECT_TRUE(q.algebra.same_structure(LieAlgebra::abelian(1)));

    auto same = quotient(aff, Subspace::zero(2));
    EXPECT_TRUE(same.algebra.same_structure(aff));

    auto spl = catalog::sl2_plus_line();
    auto q2 = quotient(spl, Subspace::span({unit_vector(4, 3)}, 4));
    EXPECT_TRUE(q2.algebra.same_structure(catalog::sl2()));
    EXPECT_THROW(quotient(aff, Subspace::span({vec({1, 0})}, 2)), InvalidInput);
}

TEST(LieAlgebra, DirectSumExamples) {
    auto two = direct_sum(LieAlgebra::abelian(1), LieAlgebra::abelian(1));
    EXPECT_TRUE(two.same_structure(LieAlgebra::abelian(2)));
    EXPECT_TRUE(direct_sum(catalog::sl2(), LieAlgebra::abelian(1)).same_structure(catalog::sl2_plus_line()));
    EXPECT_TRUE(direct_sum(catalog::aff1(), LieAlgebra::abelian(0)).same_structure(catalog::aff1()));
}

TEST(LieAlgebra, SubalgebraRestrictExamples) {
    auto aff = catalog::aff1();
    auto r = subalgebra_restrict(aff, Subspace::span({vec({0, 1})}, 2));
    EXPECT_TRUE(r.algebra.same_structure(LieAlgebra::abelian(1)));
    auto sl = catalog::sl2();
    auto s = subalgebra_restrict(sl, derived_algebra(sl));
    EXPECT_TRUE(s.algebra.same_structure(sl));
    auto z = subalgebra_restrict(sl, Subspace::zero(3));
    EXPECT_EQ(z.algebra.dim(), 0u);
    EXPECT_THROW(subalgebra_restrict(catalog::heisenberg3(), Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3)),
                 InvalidInput);
}

TEST(LieAlgebra, ZeroDimensional) {
    auto z = LieAlgebra::abelian(0);
    EXPECT_FALSE(validate(z).has_value());
    EXPECT_EQ(derived_algebra(z).dim(), 0u);
    EXPECT_EQ(quotient(z, Subspace::zero(0)).algebra.dim(), 0u);
}

TEST(LieAlgebraProperty, ProductSpaceQuotientDirectSum) {
    std::mt19937 rng(5);
    auto names = catalog::list();
    for (const auto& name : names) {
        auto l = liecoh::testing::random_basis_change(rng, catalog_algebra(name));
        EXPECT_FALSE(validate(l).has_value()) << name;
        auto full = Subspace::full(l.dim());
        auto d = product_space(l, full, full);
        EXPECT_TRUE(is_ideal(l, d)) << name;
        EXPECT_TRUE(is_ideal(l, product_space(l, d, d))) << name;
        EXPECT_TRUE(is_ideal(l, product_space(l, full, d))) << name;
        for (const auto& ideal : {d, product_space(l, d, d), Subspace::zero(l.dim()), full}) {
            auto q = quotient(l, ideal);
            EXPECT_EQ(q.algebra.dim() + ideal.dim(), l.dim());
            EXPECT_FALSE(validate(q.algebra).has_value()) << name;
            // The projection is a homomorphism.
            for (std::size_t i = 0; i < l.dim(); ++i)
                for (std::size_t j = 0; j < l.dim(); ++j)
                    EXPECT_EQ(q.projection * l.bracket_basis(i, j),
                              bracket(q.algebra, q.projection.column(i), q.projection.column(j)));
        }
    }
    for (std::size_t a = 0; a < names.size(); a += 3)
        for (std::size_t b = 1; b < names.size(); b += 4) {
            auto x = catalog_algebra(names[a]), y = catalog_algebra(names[b]);
            if (x.dim() + y.dim() > 8) continue;
            auto s = direct_sum(x, y);
            EXPECT_EQ(s.dim(), x.dim() + y.dim());
            for (std::size_t i = 0; i < x.dim(); ++i)
                for (std::size_t j = 0; j < y.dim(); ++j) EXPECT_TRUE(is_zero(s.bracket_basis(i, x.dim() + j)));
            EXPECT_FALSE(validate(s).has_value());
        }
}
