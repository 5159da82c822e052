#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "varhom/abgroup.hpp"
#include "varhom/errors.hpp"
#include "varhom/fixtures.hpp"
#include "varhom/smith.hpp"

using namespace varhom;

namespace {
FgAbelianGroup cyclic(long n) { return FgAbelianGroup::from_cyclic_orders(0, {Integer(n)}); }
} // namespace

TEST_CASE("from_presentation", "[abgroup]")
{
    REQUIRE(from_presentation(2, IntMatrix(2, 0)) == FgAbelianGroup::free(2));
    REQUIRE(from_presentation(1, IntMatrix::from_rows({{2}})) == cyclic(2));
    auto g = from_presentation(2, IntMatrix::from_rows({{2, 0}, {0, 4}}));
    REQUIRE(g.free_rank() == 0);
    REQUIRE(g.torsion() == std::vector<Integer>{2, 4});
    REQUIRE_THROWS_AS(from_presentation(3, IntMatrix(2, 1)), StructuralError);
}

TEST_CASE("presentation is invariant under unimodular changes", "[abgroup][property]")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int t = 0; t < 50; ++t) {
        IntMatrix r(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                r(i, j) = e(rng);
        auto g = from_presentation(3, r);
        auto p = fixtures::random_unimodular(3, rng);
        auto q = fixtures::random_unimodular(4, rng);
        REQUIRE(from_presentation(3, p * r * q) == g);
        // oracle: invariant factors straight from minors
        auto d = oracle::determinantal_invariant_factors(r);
        std::vector<Integer> tors;
        for (const auto& x : d)
            if (x != 1)
                tors.push_back(x);
        REQUIRE(g.free_rank() == 3 - d.size());
        REQUIRE(g.torsion() == tors);
    }
}

TEST_CASE("normalization", "[abgroup]")
{
    REQUIRE(groups_isomorphic(FgAbelianGroup::from_cyclic_orders(0, {2, 4}),
                              FgAbelianGroup::from_cyclic_orders(0, {4, 2})));
    REQUIRE_FALSE(groups_isomorphic(cyclic(4), FgAbelianGroup::from_cyclic_orders(0, {2, 2})));
    REQUIRE(groups_isomorphic(cyclic(6), FgAbelianGroup::from_cyclic_orders(0, {2, 3})));
    REQUIRE(FgAbelianGroup::from_cyclic_orders(0, {2, 3}).torsion() == std::vector<Integer>{6});
    REQUIRE(FgAbelianGroup::from_cyclic_orders(1, {1, 0, 12, 18}) ==
            FgAbelianGroup::from_cyclic_orders(2, {6, 36}));
    // idempotent
    auto g = FgAbelianGroup::from_cyclic_orders(2, {4, 6, 10});
    REQUIRE(FgAbelianGroup::from_cyclic_orders(g.free_rank(), g.torsion()) == g);
    REQUIRE(to_string(FgAbelianGroup::from_cyclic_orders(2, {2})) == "Z^2 + Z/2");
    REQUIRE(to_string(FgAbelianGroup{}) == "0");
}

TEST_CASE("is_torsion_free", "[abgroup]")
{
    REQUIRE(is_torsion_free(FgAbelianGroup::free(3)));
    REQUIRE_FALSE(is_torsion_free(FgAbelianGroup::from_cyclic_orders(1, {2})));
    REQUIRE_FALSE(is_torsion_free(cokernel_presentation(IntMatrix::from_rows({{2, 4}, {6, 8}}))));
    REQUIRE(cokernel_presentation(IntMatrix::from_rows({{2, 4}, {6, 8}})).torsion() == std::vector<Integer>{2, 4});
}

TEST_CASE("GroupHom construction", "[abgroup]")
{
    auto z = FgAbelianGroup::free(1);
    auto z2 = cyclic(2);
    auto z4 = cyclic(4);
    // Z/2 -> Z/4, 1 -> 2 is fine; 1 -> 1 is not well defined.
    REQUIRE_NOTHROW(GroupHom(z2, z4, IntMatrix::from_rows({{2}})));
    REQUIRE_THROWS_AS(GroupHom(z2, z4, IntMatrix::from_rows({{1}})), StructuralError);
    // Torsion group into Z must be zero.
    REQUIRE_THROWS_AS(GroupHom(z2, z, IntMatrix::from_rows({{1}})), StructuralError);
    REQUIRE_THROWS_AS(GroupHom(z, z, IntMatrix(2, 1)), StructuralError);
    // Coordinates are reduced.
    REQUIRE(GroupHom(z, z4, IntMatrix::from_rows({{7}})).matrix() == IntMatrix::from_rows({{3}}));
}

TEST_CASE("hom_cokernel", "[abgroup]")
{
    auto z = FgAbelianGroup::free(1);
    REQUIRE(hom_cokernel(GroupHom::zero(z, z)) == z);
    for (long n = 1; n <= 9; ++n)
        REQUIRE(hom_cokernel(GroupHom(z, z, IntMatrix::from_rows({{n}}))) ==
                FgAbelianGroup::from_cyclic_orders(0, {Integer(n)}));
    auto z2 = FgAbelianGroup::free(2);
    REQUIRE(hom_cokernel(GroupHom(z2, z2, IntMatrix::from_rows({{1, 0}, {0, 2}}))) == cyclic(2));

    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> e(-5, 5);
    for (int t = 0; t < 40; ++t) {
        auto g = FgAbelianGroup::from_cyclic_orders(t % 3, {2, 6});
        REQUIRE(hom_cokernel(GroupHom::identity(g)).is_trivial());
        // free part of the cokernel matches the rational rank of the free block
        IntMatrix m(3, 2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                m(i, j) = e(rng);
        GroupHom h(FgAbelianGroup::free(2), FgAbelianGroup::free(3), m);
        REQUIRE(hom_cokernel(h).free_rank() == 3 - oracle::bareiss_rank(m));
    }
}

TEST_CASE("hom_is_identity", "[abgroup]")
{
    auto z2 = FgAbelianGroup::free(2);
    REQUIRE(hom_is_identity(GroupHom(z2, z2, IntMatrix::identity(2))));
    REQUIRE_FALSE(hom_is_identity(GroupHom(z2, z2, IntMatrix::from_rows({{1, 0}, {0, -1}}))));
    auto c2 = cyclic(2);
    REQUIRE(hom_is_identity(GroupHom(c2, c2, IntMatrix::from_rows({{3}}))));
    REQUIRE_THROWS_AS(hom_is_identity(GroupHom::zero(c2, z2)), StructuralError);
}

TEST_CASE("composition and arithmetic", "[abgroup]")
{
    auto z = FgAbelianGroup::free(1);
    auto z6 = cyclic(6);
    GroupHom f(z, z6, IntMatrix::from_rows({{1}}));
    GroupHom g(z6, z6, IntMatrix::from_rows({{5}}));
    REQUIRE(compose(g, f).matrix() == IntMatrix::from_rows({{5}}));
    REQUIRE((compose(g, g) == GroupHom::identity(z6)));
    REQUIRE((g + GroupHom::identity(z6)).is_zero());
    REQUIRE((g - g).is_zero());
}
