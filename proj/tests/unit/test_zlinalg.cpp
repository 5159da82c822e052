#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "varhom/errors.hpp"
#include "varhom/fixtures.hpp"
#include "varhom/smith.hpp"

using namespace varhom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

// Checks every certificate in a SmithForm against its source.
void check_certificate(const IntMatrix& a, const SmithForm& s)
{
    REQUIRE(s.U * a * s.V == s.D);
    REQUIRE(is_unimodular(s.U));
    REQUIRE(is_unimodular(s.V));
    REQUIRE((s.U * s.U_inv).is_identity());
    REQUIRE((s.V * s.V_inv).is_identity());
    REQUIRE(s.invariant_factors.size() == s.rank);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j) {
            if (i != j)
                REQUIRE(s.D(i, j) == 0);
            else if (i < s.rank)
                REQUIRE(s.D(i, i) == s.invariant_factors[i]);
            else
                REQUIRE(s.D(i, i) == 0);
        }
    for (std::size_t i = 0; i < s.rank; ++i) {
        REQUIRE(s.invariant_factors[i] > 0);
        if (i > 0)
            REQUIRE(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
}

} // namespace

TEST_CASE("smith form of small fixed matrices", "[zlinalg]")
{
    SECTION("identity")
    {
        auto s = smith_normal_form(IntMatrix::identity(2));
        check_certificate(IntMatrix::identity(2), s);
        REQUIRE(s.D.is_identity());
        REQUIRE(s.invariant_factors == IntVector{1, 1});
    }
    SECTION("2x3 zero")
    {
        IntMatrix z(2, 3);
        auto s = smith_normal_form(z);
        check_certificate(z, s);
        REQUIRE(s.rank == 0);
        REQUIRE(s.D.is_zero());
        REQUIRE(s.invariant_factors.empty());
    }
    SECTION("[[2,4],[6,8]]")
    {
        auto a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        auto s = smith_normal_form(a);
        check_certificate(a, s);
        // d_1 = gcd of entries, d_1 d_2 = |det|
        REQUIRE(s.invariant_factors == IntVector{2, 4});
        REQUIRE(oracle::determinantal_invariant_factors(a) == std::vector<Integer>{2, 4});
    }
    SECTION("empty shapes")
    {
        for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {4, 0}}) {
            IntMatrix e(r, c);
            auto s = smith_normal_form(e);
            check_certificate(e, s);
            REQUIRE(s.U.rows() == std::size_t(r));
            REQUIRE(s.V.rows() == std::size_t(c));
        }
    }
}

TEST_CASE("smith form agrees with the minor-gcd oracle", "[zlinalg][property]")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        std::uniform_int_distribution<int> dim(1, 4);
        const auto r = dim(rng), c = dim(rng);
        IntMatrix a = random_matrix(rng, r, c, -6, 6);
        auto s = smith_normal_form(a);
        check_certificate(a, s);
        REQUIRE(s.invariant_factors == oracle::determinantal_invariant_factors(a));
        REQUIRE(s.rank == oracle::bareiss_rank(a));
    }
}

TEST_CASE("smith form on larger random matrices", "[zlinalg][property]")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<int> dim(1, 18);
        const auto r = dim(rng), c = dim(rng);
        IntMatrix a = random_matrix(rng, r, c, -9, 9);
        if (t % 4 == 0)  // low rank
            a = random_matrix(rng, r, 2, -3, 3) * random_matrix(rng, 2, c, -3, 3);
        auto s = smith_normal_form(a);
        check_certificate(a, s);
        REQUIRE(s.rank == oracle::bareiss_rank(a));
        REQUIRE(matrix_rank(a) == s.rank);
    }
}

TEST_CASE("entries beyond 64 bits stay exact", "[zlinalg]")
{
    IntMatrix a(2, 2);
    a(0, 0) = Integer("123456789012345678901234567890");
    a(0, 1) = Integer("987654321098765432109876543210");
    a(1, 0) = 7;
    a(1, 1) = 11;
    auto s = smith_normal_form(a);
    check_certificate(a, s);
    REQUIRE(s.invariant_factors == oracle::determinantal_invariant_factors(a));
}

TEST_CASE("matrix_multiply", "[zlinalg]")
{
    auto a = IntMatrix::from_rows({{1, 1}, {0, 1}});
    REQUIRE(matrix_multiply(IntMatrix::identity(2), a) == a);
    REQUIRE(matrix_multiply(a, IntMatrix(2, 3)).is_zero());
    REQUIRE(matrix_multiply(a, a) == IntMatrix::from_rows({{1, 2}, {0, 1}}));
    REQUIRE_THROWS_AS(matrix_multiply(a, IntMatrix(3, 1)), StructuralError);
    REQUIRE(matrix_multiply(IntMatrix(2, 0), IntMatrix(0, 3)) == IntMatrix(2, 3));
}

TEST_CASE("kernel_basis", "[zlinalg]")
{
    REQUIRE(kernel_basis(IntMatrix(3, 3)).cols() == 3);
    REQUIRE(is_unimodular(kernel_basis(IntMatrix(3, 3))));
    REQUIRE(kernel_basis(IntMatrix::identity(3)).cols() == 0);

    IntMatrix k = kernel_basis(IntMatrix::from_rows({{1, 2}}));
    REQUIRE(k.cols() == 1);
    // the lattice is generated by (2, -1)
    REQUIRE(((k(0, 0) == 2 && k(1, 0) == -1) || (k(0, 0) == -2 && k(1, 0) == 1)));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> dim(1, 7);
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -4, 4);
        IntMatrix kb = kernel_basis(a);
        REQUIRE((a * kb).is_zero());
        REQUIRE(kb.cols() == a.cols() - oracle::bareiss_rank(a));
        // saturated: all invariant factors are 1
        for (const auto& d : smith_normal_form(kb).invariant_factors)
            REQUIRE(d == 1);
        KernelLattice kl = kernel_lattice(a);
        REQUIRE((kl.coordinates * kl.basis).is_identity());
    }
}

TEST_CASE("cokernel_presentation", "[zlinalg]")
{
    REQUIRE(cokernel_presentation(IntMatrix(2, 2)) == FgAbelianGroup::free(2));
    REQUIRE(cokernel_presentation(IntMatrix::identity(3)).is_trivial());
    auto g = cokernel_presentation(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    REQUIRE(g.free_rank() == 0);
    REQUIRE(g.torsion() == std::vector<Integer>{6});

    std::mt19937_64 rng(14);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a = random_matrix(rng, 4, 3, -5, 5);
        IntMatrix p = fixtures::random_unimodular(4, rng);
        IntMatrix q = fixtures::random_unimodular(3, rng);
        REQUIRE(cokernel_presentation(a) == cokernel_presentation(p * a * q));
    }
}

TEST_CASE("is_unimodular", "[zlinalg]")
{
    REQUIRE(is_unimodular(IntMatrix::identity(4)));
    REQUIRE_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
    REQUIRE(is_unimodular(IntMatrix::from_rows({{1, 1}, {0, 1}})));
    REQUIRE_THROWS_AS(is_unimodular(IntMatrix(2, 3)), StructuralError);
    REQUIRE(determinant(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
}
