#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;
using liecoh::testing::catalog_algebra;
using liecoh::testing::mat;
using liecoh::testing::vec;

namespace {

// kappa_ij = sum_{k,l} c[i][k][l] c[j][l][k], from structure constants only.
Matrix killing_from_constants(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t q = 0; q < n; ++q) m(i, j) += l.constant(i, k, q) * l.constant(j, q, k);
    return m;
}

void expect_levi_invariants(const LieAlgebra& l, const LeviDecomposition& d, const std::string& what) {
    EXPECT_EQ(intersection(d.levi, d.radical).dim(), 0u) << what;
    EXPECT_EQ(sum(d.levi, d.radical).dim(), l.dim()) << what;
    EXPECT_TRUE(is_subalgebra(l, d.levi)) << what;
    EXPECT_TRUE(is_ideal(l, d.radical)) << what;
    EXPECT_TRUE(is_solvable(l, d.radical)) << what;
    auto s = subalgebra_restrict(l, d.levi).algebra;
    EXPECT_NE(determinant(killing(s)), 0) << what;
    for (const auto& v : d.section) EXPECT_TRUE(d.levi.contains(v)) << what;
}

} // namespace

TEST(Killing, Examples) {
    EXPECT_TRUE(killing(LieAlgebra::abelian(3)).is_zero());
    auto k = killing(catalog::sl2());
    EXPECT_EQ(k, mat({{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}));
    EXPECT_EQ(determinant(k), -128);
    EXPECT_EQ(killing(catalog::aff1()), mat({{1, 0}, {0, 0}}));
}

TEST(Killing, MatchesConstantsFormula) {
    std::mt19937 rng(2);
    for (const auto& name : catalog::list()) {
        auto l = liecoh::testing::random_basis_change(rng, catalog_algebra(name));
        auto k = killing(l);
        EXPECT_EQ(k, killing_from_constants(l)) << name;
        EXPECT_EQ(k, transpose(k));
    }
}

TEST(Radical, Examples) {
    EXPECT_EQ(radical(catalog::sl2()).dim(), 0u);
    EXPECT_EQ(radical(catalog::aff1()).dim(), 2u);
    auto r = radical(catalog::sl2_plus_line());
    EXPECT_EQ(r, Subspace::span({unit_vector(4, 3)}, 4));
    auto sd = catalog::sl2_semidirect_natural();
    EXPECT_EQ(radical(sd), Subspace::span({unit_vector(5, 3), unit_vector(5, 4)}, 5));
}

TEST(Series, Examples) {
    auto ab = derived_series(LieAlgebra::abelian(3));
    ASSERT_EQ(ab.size(), 2u);
    EXPECT_EQ(ab[0].dim(), 3u);
    EXPECT_EQ(ab[1].dim(), 0u);
    auto lc = lower_central_series(catalog::heisenberg3());
    ASSERT_EQ(lc.size(), 3u);
    EXPECT_EQ(lc[1], Subspace::span({vec({0, 0, 1})}, 3));
    EXPECT_EQ(lc[2].dim(), 0u);
    auto sl = derived_series(catalog::sl2());
    for (const auto& s : sl) EXPECT_EQ(s.dim(), 3u);
    auto aff = lower_central_series(catalog::aff1());
    EXPECT_EQ(aff.back(), Subspace::span({vec({0, 1})}, 2));
}

TEST(Flags, Examples) {
    EXPECT_TRUE(is_semisimple(catalog::sl2()));
    EXPECT_TRUE(is_semisimple(catalog::so3()));
    EXPECT_TRUE(is_nilpotent(catalog::heisenberg3()));
    EXPECT_FALSE(is_semisimple(catalog::heisenberg3()));
    EXPECT_TRUE(is_solvable(catalog::aff1()));
    EXPECT_FALSE(is_nilpotent(catalog::aff1()));
    EXPECT_FALSE(is_solvable(catalog::sl2_semidirect_natural()));
    EXPECT_TRUE(is_nilpotent(catalog::n4()));
}

TEST(Levi, Examples) {
    auto sl = catalog::sl2();
    auto d = levi(sl);
    EXPECT_EQ(d.levi.dim(), 3u);
    EXPECT_EQ(d.radical.dim(), 0u);

    auto sd = catalog::sl2_semidirect_natural();
    auto e = levi(sd);
    EXPECT_EQ(e.levi.dim(), 3u);
    EXPECT_EQ(e.radical.dim(), 2u);
    expect_levi_invariants(sd, e, "sl2_semidirect_natural");

    auto s = levi(catalog::solvable3());
    EXPECT_EQ(s.levi.dim(), 0u);
}

TEST(Levi, TwistedSectionIsCorrected) {
    // In a skewed basis of sl2 (+) K^2 the naive complement is not a subalgebra.
    std::mt19937 rng(8);
    auto sd = catalog::sl2_semidirect_natural();
    for (int t = 0; t < 5; ++t) {
        auto l = liecoh::testing::random_basis_change(rng, sd);
        expect_levi_invariants(l, levi(l), "twisted");
    }
}

TEST(Levi, NonAbelianRadical) {
    // sl2 acting on the Heisenberg algebra: K^2 natural plus a central z.
    auto sd = catalog::sl2_semidirect_natural();
    std::vector<Bracket> br = sd.brackets();
    for (auto& b : br) b.value.push_back(0);
    Vector z(6);
    z[5] = 1;
    br.push_back({3, 4, z});
    LieAlgebra l("sl2_heis", {"e", "h", "f", "v1", "v2", "z"}, br);
    ASSERT_FALSE(validate(l).has_value());
    auto d = levi(l);
    EXPECT_EQ(d.radical.dim(), 3u);
    EXPECT_EQ(d.levi.dim(), 3u);
    expect_levi_invariants(l, d, "sl2_heis");
    std::mt19937 rng(4);
    for (int t = 0; t < 3; ++t) {
        auto m = liecoh::testing::random_basis_change(rng, l);
        expect_levi_invariants(m, levi(m), "sl2_heis twisted");
    }
}

TEST(Codim1, Examples) {
    auto aff = codim1_ideal_containing_derived(catalog::aff1());
    ASSERT_TRUE(aff.has_value());
    EXPECT_EQ(aff->ideal, Subspace::span({vec({0, 1})}, 2));
    EXPECT_EQ(aff->x, vec({1, 0}));
    auto ab = codim1_ideal_containing_derived(LieAlgebra::abelian(2));
    ASSERT_TRUE(ab.has_value());
    EXPECT_EQ(ab->ideal, Subspace::span({vec({1, 0})}, 2));
    EXPECT_EQ(ab->x, vec({0, 1}));
    EXPECT_FALSE(codim1_ideal_containing_derived(catalog::sl2()).has_value());
}

TEST(StructureProperty, CatalogInRandomBases) {
    std::mt19937 rng(12);
    for (const auto& name : catalog::list()) {
        auto base = catalog_algebra(name);
        for (int t = 0; t < 2; ++t) {
            auto l = liecoh::testing::random_basis_change(rng, base);
            auto r = radical(l);
            EXPECT_EQ(r.dim(), radical(base).dim()) << name;
            EXPECT_TRUE(is_ideal(l, r));
            EXPECT_TRUE(is_solvable(l, r));
            // Every solvable ideal we can write down lies in the radical.
            for (const auto& i : derived_series(l))
                if (is_solvable(l, i)) { EXPECT_TRUE(r.contains(i)) << name; }
            for (const auto& i : lower_central_series(l))
                if (is_solvable(l, i)) { EXPECT_TRUE(r.contains(i)) << name; }
            auto q = quotient(l, r);
            EXPECT_EQ(radical(q.algebra).dim(), 0u) << name;

            const bool ss = is_semisimple(l);
            EXPECT_EQ(ss, r.dim() == 0);
            EXPECT_EQ(ss, determinant(killing(l)) != 0);
            expect_levi_invariants(l, levi(l), name);

            if (auto c = codim1_ideal_containing_derived(l)) {
                EXPECT_TRUE(is_ideal(l, c->ideal));
                EXPECT_EQ(c->ideal.dim() + 1, l.dim());
                EXPECT_FALSE(c->ideal.contains(c->x));
                EXPECT_TRUE(c->ideal.contains(derived_algebra(l)));
            } else {
                EXPECT_EQ(derived_algebra(l).dim(), l.dim());
            }
        }
    }
}
