#include <catch_amalgamated.hpp>

#include <random>

#include "varhom/errors.hpp"
#include "varhom/fixtures.hpp"
#include "varhom/openbook.hpp"

using namespace varhom;

namespace {

FgAbelianGroup cyclic(long n) { return FgAbelianGroup::from_cyclic_orders(0, {Integer(n)}); }
const FgAbelianGroup Z = FgAbelianGroup::free(1);

// S^3 x D^1 with q = 2: H_3 = Z, so not of Weinstein type.
PageData thick_sphere_page(bool weinstein)
{
    // deg 0: p x v0, p x v1 | deg 1: p x e | deg 3: a x v0, a x v1 | deg 4: a x e
    ChainComplex c({2, 1, 0, 2, 1},
                   {IntMatrix::from_rows({{-1}, {1}}), IntMatrix(1, 0), IntMatrix(0, 2),
                    IntMatrix::from_rows({{1}, {-1}})});
    return PageData(c, {{0, 1}, {}, {}, {0, 1}, {}}, 2, weinstein);
}

std::vector<FgAbelianGroup> glued_homology(const PageData& page, const Monodromy& f)
{
    ChainComplex m = twisted_double_complex(page, f);
    std::vector<FgAbelianGroup> out;
    for (int i = 0; i <= m.top_degree(); ++i)
        out.push_back(homology(m, i));
    return out;
}

} // namespace

TEST_CASE("page validation", "[openbook]")
{
    REQUIRE_NOTHROW(fixtures::annulus_page());
    ChainComplex disk({1, 1, 1}, {IntMatrix(1, 1), IntMatrix::from_rows({{1}})});
    REQUIRE_THROWS_AS(PageData(disk, {{}, {}, {}}, 1, true), StructuralError);  // no binding
    REQUIRE_THROWS_AS(PageData(disk, {{0}, {0}, {}}, 0, true), StructuralError);
    REQUIRE_THROWS_AS(PageData(fixtures::sphere(3), {{0}, {}, {}, {}}, 1, false), StructuralError);  // too tall
    REQUIRE_THROWS_AS(thick_sphere_page(true), StructuralError);
    REQUIRE_NOTHROW(thick_sphere_page(false));
    // Torsion in H_q is not allowed on a Weinstein-type page.
    ChainComplex moebius_like({1, 2, 1}, {IntMatrix(1, 2), IntMatrix::from_rows({{2}, {0}})});
    REQUIRE_THROWS_AS(PageData(moebius_like, {{0}, {1}, {}}, 1, true), StructuralError);
}

TEST_CASE("monodromy validation", "[openbook]")
{
    PageData a = fixtures::annulus_page();
    // swaps the two boundary vertices
    std::vector<IntMatrix> swap{IntMatrix::from_rows({{0, 1}, {1, 0}}), IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
                                IntMatrix::identity(1)};
    REQUIRE_THROWS_AS(Monodromy(a, swap), StructuralError);
    // not a chain map
    std::vector<IntMatrix> broken{IntMatrix::identity(2), IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}),
                                  IntMatrix::identity(1)};
    REQUIRE_THROWS_AS(Monodromy(a, broken), StructuralError);
    REQUIRE_NOTHROW(Monodromy::identity(a));
}

TEST_CASE("doubles of basic pages", "[openbook]")
{
    DoubleData circle = build_double(fixtures::interval_page());
    REQUIRE(homology(circle.complex, 1) == Z);
    REQUIRE(homology(circle.complex, 0) == Z);

    DoubleData s2 = build_double(fixtures::disk_page(1));
    REQUIRE(homology(s2.complex, 2) == Z);
    REQUIRE(homology(s2.complex, 1) == FgAbelianGroup{});

    DoubleData torus = build_double(fixtures::annulus_page());
    REQUIRE(homology(torus.complex, 1) == FgAbelianGroup::free(2));
    REQUIRE(homology(torus.complex, 2) == Z);

    // copy0 and copy1 cover the double and meet in the seam
    PageData a = fixtures::annulus_page();
    DoubleData dw = build_double(a);
    for (int i = 0; i <= dw.complex.top_degree(); ++i) {
        std::size_t both = 0;
        for (std::size_t c = 0; c < dw.complex.rank(i); ++c) {
            const bool in0 = dw.copy0().contains(i, c), in1 = dw.copy1().contains(i, c);
            REQUIRE((in0 || in1));
            if (in0 && in1) {
                REQUIRE(dw.seam().contains(i, c));
                ++both;
            }
        }
        REQUIRE(both == a.pair().sub_indices(i).size());
    }
}

TEST_CASE("extension of the monodromy", "[openbook]")
{
    PageData a = fixtures::annulus_page();
    ChainMap id = extend_monodromy(a, Monodromy::identity(a));
    for (const auto& m : id.components())
        REQUIRE(m.is_identity());
    for (long n = -3; n <= 5; ++n) {
        Monodromy f = fixtures::twist_monodromy(a, n);
        BlockMatrix b = double_action_blocks(a, f, 1);
        REQUIRE(b.top_left.matrix() == IntMatrix::identity(1));
        REQUIRE(b.top_right.matrix() == IntMatrix::from_rows({{n}}));
        REQUIRE(b.bottom_left.matrix().is_zero());
        REQUIRE(b.bottom_right.matrix() == IntMatrix::identity(1));
    }
}

TEST_CASE("variation", "[openbook]")
{
    PageData a = fixtures::annulus_page();
    REQUIRE(variation(a, Monodromy::identity(a)).is_zero());
    for (long n = 1; n <= 6; ++n) {
        GroupHom v = variation(a, fixtures::twist_monodromy(a, n));
        REQUIRE(v.domain() == Z);
        REQUIRE(v.codomain() == Z);
        REQUIRE(abs(v.matrix()(0, 0)) == n);
    }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 25; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy f = fixtures::random_monodromy(p, rng, fixtures::MonodromyKind::HomotopicToIdentity);
        for (int i = 0; i <= p.complex().top_degree(); ++i)
            REQUIRE(variation(p, f, i).is_zero());
    }
}

TEST_CASE("block decomposition on random open books", "[openbook][property]")
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 60; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy f = fixtures::random_monodromy(p, rng);
        for (int i = 0; i <= p.complex().top_degree(); ++i) {
            BlockMatrix b = double_action_blocks(p, f, i);
            REQUIRE(hom_is_identity(b.top_left));
            REQUIRE(b.bottom_left.is_zero());
            REQUIRE(b.top_right == variation(p, f, i));
            REQUIRE(b.bottom_right == relative_action(p, f, i));
            REQUIRE(double_action(p, f, i) == assembled_double_action(p, f, i));

            BlockMatrix mv = mayer_vietoris_blocks(p, f, i);
            REQUIRE(hom_is_identity(mv.top_left));
            REQUIRE(mv.top_right.is_zero());
            REQUIRE(hom_is_identity(mv.bottom_left));
            REQUIRE(mv.bottom_right == variation(p, f, i));
        }
    }
}

TEST_CASE("identity monodromy on the double", "[openbook]")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 10; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy id = Monodromy::identity(p);
        for (int i = 0; i <= p.complex().top_degree(); ++i) {
            BlockMatrix b = double_action_blocks(p, id, i);
            REQUIRE(b.top_right.is_zero());
            REQUIRE(hom_is_identity(b.bottom_right));
        }
    }
}

TEST_CASE("twisted doubles", "[openbook]")
{
    for (int q = 1; q <= 3; ++q) {
        PageData d = fixtures::disk_page(q);
        auto h = glued_homology(d, Monodromy::identity(d));
        REQUIRE(h.size() == std::size_t(2 * q + 2));
        for (int i = 0; i <= 2 * q + 1; ++i)
            REQUIRE(h[i] == (i == 0 || i == 2 * q + 1 ? Z : FgAbelianGroup{}));
    }
    PageData a = fixtures::annulus_page();
    for (long n = 1; n <= 10; ++n)
        REQUIRE(glued_homology(a, fixtures::twist_monodromy(a, n))[1] == cyclic(n));
    std::mt19937_64 rng(44);
    for (int t = 0; t < 20; ++t) {
        PageData p = fixtures::random_page(rng);
        auto h = glued_homology(p, Monodromy::identity(p));
        for (int i = 0; i <= p.q(); ++i)
            REQUIRE(h[i] == homology(p.complex(), i));
    }
}

TEST_CASE("open book homology", "[openbook]")
{
    PageData d = fixtures::disk_page(2);
    auto ob = open_book_homology(d, Monodromy::identity(d));
    REQUIRE(ob.groups[2] == FgAbelianGroup{});
    REQUIRE(ob.groups.front() == Z);
    REQUIRE(ob.groups.back() == Z);

    PageData a = fixtures::annulus_page();
    for (long n = 1; n <= 10; ++n) {
        auto r = open_book_homology(a, fixtures::twist_monodromy(a, n));
        REQUIRE(r.groups[1] == cyclic(n));
        REQUIRE(r.methods[1] == Method::FormulaChecked);
        auto v = open_book_homology_from_variation(a, IntMatrix::from_rows({{n}}));
        REQUIRE(v.groups == r.groups);
        REQUIRE(v.methods[3] == Method::Duality);
    }
    auto unchecked = open_book_homology(a, fixtures::twist_monodromy(a, 2), OpenBookOptions{false});
    REQUIRE(unchecked.methods[1] == Method::Formula);
    REQUIRE(unchecked.methods[2] == Method::Glued);

    // Non-Weinstein page: glued route everywhere. M = S^3 x S^2.
    PageData thick = thick_sphere_page(false);
    auto s = open_book_homology(thick, Monodromy::identity(thick));
    for (auto m : s.methods)
        REQUIRE(m == Method::Glued);
    const std::vector<FgAbelianGroup> s3s2{Z, {}, Z, Z, {}, Z};
    REQUIRE(s.groups == s3s2);
    REQUIRE_THROWS_AS(open_book_homology_from_variation(thick, IntMatrix(0, 0)), StructuralError);
    REQUIRE_THROWS_AS(open_book_homology_from_variation(a, IntMatrix(2, 1)), StructuralError);
}

TEST_CASE("open book invariants on random inputs", "[openbook][property]")
{
    std::mt19937_64 rng(45);
    for (int t = 0; t < 60; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy f = fixtures::random_monodromy(p, rng);
        auto ob = open_book_homology(p, f);
        auto glued = glued_homology(p, f);
        REQUIRE(ob.groups == glued);
        REQUIRE(ob.groups.front() == Z);
        REQUIRE(ob.groups.back() == Z);
        if (ob.variation.is_zero())
            REQUIRE(is_torsion_free(ob.groups[p.q()]));
        auto trivial = open_book_homology(p, Monodromy::identity(p));
        REQUIRE(is_torsion_free(trivial.groups[p.q()]));
        // from the variation matrix alone
        auto v = open_book_homology_from_variation(p, ob.variation.matrix());
        for (std::size_t i = 0; i < ob.groups.size(); ++i)
            REQUIRE(groups_isomorphic(v.groups[i], ob.groups[i]));
    }
}

TEST_CASE("homotopic monodromies give the same data", "[openbook][property]")
{
    std::mt19937_64 rng(46);
    for (int t = 0; t < 20; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy f = fixtures::random_monodromy(p, rng);
        Monodromy g = fixtures::perturb_by_homotopy(p, f, rng);
        REQUIRE(variation(p, f) == variation(p, g));
        REQUIRE(open_book_homology(p, f).groups == open_book_homology(p, g).groups);
        BlockMatrix bf = double_action_blocks(p, f, p.q()), bg = double_action_blocks(p, g, p.q());
        REQUIRE(bf.top_right == bg.top_right);
        REQUIRE(bf.bottom_right == bg.bottom_right);
    }
}

TEST_CASE("skeleton criterion", "[openbook]")
{
    PageData a = fixtures::annulus_page();
    auto id = skeleton_criterion(a, Monodromy::identity(a));
    REQUIRE(id.holds());
    REQUIRE(id.homology_identity);
    REQUIRE(id.cohomology_identity);
    for (long n : {-2L, 1L, 3L}) {
        auto sc = skeleton_criterion(a, fixtures::twist_monodromy(a, n));
        REQUIRE_FALSE(sc.holds());
    }
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        PageData p = fixtures::random_page(rng);
        Monodromy f = fixtures::random_monodromy(p, rng, fixtures::MonodromyKind::SkeletonTrivial);
        auto sc = skeleton_criterion(p, f);
        REQUIRE(sc.holds());
        REQUIRE(variation(p, f).is_zero());
        REQUIRE(is_torsion_free(open_book_homology(p, f).groups[p.q()]));
        auto action = double_skeleton_cohomology_action(p, f);
        REQUIRE(action.size() == std::size_t(p.q() + 1));
    }
}
