#include "varhom/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "varhom/errors.hpp"
#include "varhom/smith.hpp"

namespace varhom::fixtures {
namespace {

// Mutable cellular model used while assembling or randomizing a page.
struct CellModel {
    explicit CellModel(int top) : ranks(top + 1, 0), d(top + 2), on_boundary(top + 1) {}

    int top() const { return static_cast<int>(ranks.size()) - 1; }

    std::size_t add_cell(int deg, bool boundary)
    {
        const std::size_t idx = ranks[deg]++;
        on_boundary[deg].push_back(boundary);
        d[deg] = grow(d[deg], deg > 0 ? ranks[deg - 1] : 0, ranks[deg]);
        if (deg + 1 <= top())
            d[deg + 1] = grow(d[deg + 1], ranks[deg], ranks[deg + 1]);
        return idx;
    }

    // d(cell) gets `coeff` times `face`.
    void set(int deg, std::size_t cell, std::size_t face, long coeff) { d[deg](face, cell) = coeff; }

    // Basis change e_b -> e_b + c e_a in degree `deg`.
    void add_basis(int deg, std::size_t b, std::size_t a, const Integer& c)
    {
        if (deg > 0)
            d[deg].add_col_multiple(b, a, c);
        if (deg + 1 <= top())
            d[deg + 1].add_row_multiple(a, b, -c);
    }

    void flip(int deg, std::size_t b)
    {
        if (deg > 0)
            d[deg].negate_col(b);
        if (deg + 1 <= top())
            d[deg + 1].negate_row(b);
    }

    void permute(int deg, const std::vector<std::size_t>& perm)
    {
        // new cell k is old cell perm[k]
        if (deg > 0)
            d[deg] = d[deg].select_cols(perm);
        if (deg + 1 <= top())
            d[deg + 1] = d[deg + 1].select_rows(perm);
        std::vector<bool> flags(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            flags[k] = on_boundary[deg][perm[k]];
        on_boundary[deg] = std::move(flags);
    }

    std::size_t cells() const { return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}); }

    ChainComplex complex() const
    {
        std::vector<IntMatrix> ds;
        for (int i = 1; i <= top(); ++i) {
            IntMatrix m = d[i];
            if (m.rows() != ranks[i - 1] || m.cols() != ranks[i])
                m = grow(m, ranks[i - 1], ranks[i]);
            ds.push_back(std::move(m));
        }
        return ChainComplex(ranks, std::move(ds));
    }

    std::vector<std::vector<std::size_t>> boundary_cells() const
    {
        std::vector<std::vector<std::size_t>> out(ranks.size());
        for (std::size_t i = 0; i < ranks.size(); ++i)
            for (std::size_t c = 0; c < ranks[i]; ++c)
                if (on_boundary[i][c])
                    out[i].push_back(c);
        return out;
    }

    static IntMatrix grow(const IntMatrix& m, std::size_t rows, std::size_t cols)
    {
        IntMatrix g(rows, cols);
        for (std::size_t i = 0; i < std::min(rows, m.rows()); ++i)
            for (std::size_t j = 0; j < std::min(cols, m.cols()); ++j)
                g(i, j) = m(i, j);
        return g;
    }

    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;  // d[i] = d_i
    std::vector<std::vector<bool>> on_boundary;
};

CellModel disk_model(int q)
{
    CellModel m(2 * q);
    m.add_cell(0, true);
    const std::size_t s = m.add_cell(2 * q - 1, true);
    const std::size_t c = m.add_cell(2 * q, false);
    m.set(2 * q, c, s, 1);
    return m;
}

CellModel sphere_bundle_model(int q)
{
    CellModel m(2 * q);
    if (q == 1) {
        // v0, v1 | alpha0, alpha1, e | F ; the two boundary circles are alpha0, alpha1.
        const auto v0 = m.add_cell(0, true);
        const auto v1 = m.add_cell(0, true);
        const auto a0 = m.add_cell(1, true);
        const auto a1 = m.add_cell(1, true);
        const auto e = m.add_cell(1, false);
        const auto f = m.add_cell(2, false);
        m.set(1, e, v1, 1);
        m.set(1, e, v0, -1);
        m.set(2, f, a0, 1);
        m.set(2, f, a1, -1);
        return m;
    }
    // Product of S^q = {p, a} with D^q = {o, b, d}, d(d) = b.
    m.add_cell(0, true);                      // p x o
    const auto pb = m.add_cell(q - 1, true);  // p x b
    m.add_cell(q, true);                      // a x o  (core sphere)
    const auto pd = m.add_cell(q, false);     // p x d  (cocore disk)
    const auto ab = m.add_cell(2 * q - 1, true);
    const auto ad = m.add_cell(2 * q, false);
    m.set(q, pd, pb, 1);
    m.set(2 * q, ad, ab, q % 2 == 0 ? 1 : -1);
    return m;
}

CellModel punctured_product_model(std::size_t g, int q)
{
    CellModel m(2 * q);
    m.add_cell(0, true);
    for (std::size_t k = 0; k < 2 * g; ++k)
        m.add_cell(q, false);
    const auto s = m.add_cell(2 * q - 1, true);
    const auto c = m.add_cell(2 * q, false);
    // The top cell is attached along s times a product of Whitehead products
    // (commutators when q = 1), which vanish on chains.
    m.set(2 * q, c, s, 1);
    return m;
}

PageData to_page(const CellModel& m, int q, bool weinstein)
{
    return PageData(m.complex(), m.boundary_cells(), q, weinstein);
}

long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

void add_cancelling_pair(CellModel& m, int k, std::mt19937_64& rng)
{
    IntVector w(m.ranks[k]);
    for (auto& x : w)
        x = uniform(rng, -1, 1);
    IntVector dw = k > 0 ? m.d[k].apply(w) : IntVector{};
    const std::size_t x = m.add_cell(k, false);
    const std::size_t y = m.add_cell(k + 1, false);
    for (std::size_t r = 0; r < dw.size(); ++r)
        m.d[k](r, x) = -dw[r];
    m.d[k + 1](x, y) = 1;
    for (std::size_t r = 0; r < w.size(); ++r)
        m.d[k + 1](r, y) = w[r];
}

void scramble(CellModel& m, std::mt19937_64& rng)
{
    for (int i = 0; i <= m.top(); ++i) {
        const std::size_t n = m.ranks[i];
        if (n == 0)
            continue;
        const long steps = uniform(rng, 0, 2 * static_cast<long>(n));
        for (long s = 0; s < steps; ++s) {
            const std::size_t b = uniform(rng, 0, n - 1);
            const std::size_t a = uniform(rng, 0, n - 1);
            if (a == b || (m.on_boundary[i][b] && !m.on_boundary[i][a]))
                continue;
            m.add_basis(i, b, a, Integer(coin(rng) ? 1 : -1));
        }
        for (std::size_t b = 0; b < n; ++b)
            if (coin(rng, 0.3))
                m.flip(i, b);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        m.permute(i, perm);
    }
}

// Random chain homotopy h_k : C_k -> C_{k+1}, zero on boundary cells and in
// degrees >= h_top.
std::vector<IntMatrix> random_homotopy(const PageData& page, std::mt19937_64& rng, int h_top)
{
    const ChainComplex& w = page.complex();
    std::vector<IntMatrix> h;
    for (int k = 0; k <= w.top_degree(); ++k) {
        IntMatrix hk(w.rank(k + 1), w.rank(k));
        if (k < h_top)
            for (std::size_t c = 0; c < w.rank(k); ++c) {
                if (page.is_boundary_cell(k, c))
                    continue;
                for (std::size_t r = 0; r < w.rank(k + 1); ++r)
                    if (coin(rng, 0.3))
                        hk(r, c) = uniform(rng, -1, 1);
            }
        h.push_back(std::move(hk));
    }
    return h;
}

void add_homotopy(const PageData& page, std::vector<IntMatrix>& f, const std::vector<IntMatrix>& h)
{
    const ChainComplex& w = page.complex();
    for (int k = 0; k <= w.top_degree(); ++k) {
        if (k + 1 <= w.top_degree())
            f[k] += w.boundary(k + 1) * h[k];
        if (k > 0)
            f[k] += h[k - 1] * w.boundary(k);
    }
}

// z (x) phi with z an absolute k-cycle and phi a relative k-cocycle.
void add_rank_one(const PageData& page, std::vector<IntMatrix>& f, int k, std::mt19937_64& rng)
{
    const ChainComplex& w = page.complex();
    const SubcomplexPair& p = page.pair();
    IntMatrix cycles = kernel_basis(w.boundary(k));
    IntMatrix rel = p.quotient_complex().boundary(k + 1);
    IntMatrix cocycles = kernel_basis(rel.transpose());
    if (cycles.cols() == 0 || cocycles.cols() == 0)
        return;
    IntVector z(w.rank(k));
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
        const long c = uniform(rng, -2, 2);
        for (std::size_t r = 0; r < z.size(); ++r)
            z[r] += c * cycles(r, j);
    }
    IntVector phi_q(cocycles.rows());
    for (std::size_t j = 0; j < cocycles.cols(); ++j) {
        const long c = uniform(rng, -2, 2);
        for (std::size_t r = 0; r < phi_q.size(); ++r)
            phi_q[r] += c * cocycles(r, j);
    }
    IntVector phi = p.lift(k, phi_q);
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < phi.size(); ++c)
            f[k](r, c) += z[r] * phi[c];
}

std::vector<IntMatrix> identity_components(const ChainComplex& w)
{
    std::vector<IntMatrix> f;
    for (int k = 0; k <= w.top_degree(); ++k)
        f.push_back(IntMatrix::identity(w.rank(k)));
    return f;
}

} // namespace

ChainComplex sphere(int n)
{
    if (n < 0)
        throw StructuralError("sphere dimension must be non-negative");
    if (n == 0)
        return ChainComplex({2}, {});
    std::vector<std::size_t> ranks(n + 1, 0);
    ranks[0] = ranks[n] = 1;
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= n; ++i)
        ds.emplace_back(ranks[i - 1], ranks[i]);
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex real_projective_space(int n)
{
    if (n < 0)
        throw StructuralError("projective space dimension must be non-negative");
    std::vector<std::size_t> ranks(n + 1, 1);
    std::vector<IntMatrix> ds;
    for (int k = 1; k <= n; ++k)
        ds.push_back(IntMatrix::from_rows({{k % 2 == 0 ? 2L : 0L}}));
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex torus()
{
    return ChainComplex({1, 2, 1}, {IntMatrix(1, 2), IntMatrix(2, 1)});
}

ChainComplex klein_bottle()
{
    // Attaching word a b a^-1 b.
    return ChainComplex({1, 2, 1}, {IntMatrix(1, 2), IntMatrix::from_rows({{0}, {2}})});
}

PageData interval_page()
{
    CellModel m(2);
    const auto v0 = m.add_cell(0, true);
    const auto v1 = m.add_cell(0, true);
    const auto e = m.add_cell(1, false);
    m.set(1, e, v1, 1);
    m.set(1, e, v0, -1);
    return to_page(m, 1, false);
}

PageData disk_page(int q)
{
    return to_page(disk_model(q), q, true);
}

PageData sphere_bundle_page(int q)
{
    return to_page(sphere_bundle_model(q), q, true);
}

PageData punctured_product_page(std::size_t g, int q)
{
    if (g < 1)
        throw StructuralError("genus must be at least 1");
    return to_page(punctured_product_model(g, q), q, true);
}

Monodromy twist_monodromy(const PageData& page, long n)
{
    const int q = page.q();
    std::vector<IntMatrix> f = identity_components(page.complex());
    if (q == 1) {
        // e -> e + n alpha0
        f[1](0, 2) = n;
    } else {
        // p x d -> p x d + n (a x o)
        f[q](0, 1) = n;
    }
    return Monodromy(page, std::move(f));
}

Monodromy middle_monodromy(const PageData& page, const IntMatrix& a)
{
    const int q = page.q();
    const std::size_t n = a.rows();
    if (!a.is_square())
        throw StructuralError("middle monodromy needs a square matrix");
    std::vector<IntMatrix> f = identity_components(page.complex());
    // Middle cells are the first n cells of degree q after the base point
    // (for q = 1 they precede the boundary loop).
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            f[q](r, c) = a(r, c);
    return Monodromy(page, std::move(f));
}

PageData random_page(std::mt19937_64& rng, RandomPageOptions options)
{
    const int q = static_cast<int>(uniform(rng, 1, options.max_q));
    const std::size_t max_g = options.max_cells >= 5 ? (options.max_cells - 3) / 2 : 0;
    CellModel m(2 * q);
    switch (uniform(rng, 0, max_g >= 1 ? 2 : 1)) {
    case 0:
        m = disk_model(q);
        break;
    case 1:
        m = sphere_bundle_model(q);
        break;
    default:
        m = punctured_product_model(static_cast<std::size_t>(uniform(rng, 1, std::min<long>(max_g, 3))), q);
        break;
    }
    while (m.cells() + 2 <= options.max_cells && coin(rng, 0.4))
        add_cancelling_pair(m, static_cast<int>(uniform(rng, 0, 2 * q - 1)), rng);
    scramble(m, rng);
    return to_page(m, q, true);
}

Monodromy random_monodromy(const PageData& page, std::mt19937_64& rng, MonodromyKind kind)
{
    const ChainComplex& w = page.complex();
    const int q = page.q();
    const int top = w.top_degree();
    std::vector<IntMatrix> f = identity_components(w);
    switch (kind) {
    case MonodromyKind::General: {
        const long terms = uniform(rng, 1, 3);
        for (long t = 0; t < terms; ++t)
            add_rank_one(page, f, coin(rng) ? q : static_cast<int>(uniform(rng, 0, top)), rng);
        add_homotopy(page, f, random_homotopy(page, rng, top));
        break;
    }
    case MonodromyKind::HomotopicToIdentity:
        add_homotopy(page, f, random_homotopy(page, rng, top));
        break;
    case MonodromyKind::SkeletonTrivial: {
        if (q < top && coin(rng))
            add_rank_one(page, f, static_cast<int>(uniform(rng, q + 1, top)), rng);
        // h_k = 0 for k >= q keeps f_q equal to the identity on q-cycles.
        add_homotopy(page, f, random_homotopy(page, rng, q));
        break;
    }
    }
    return Monodromy(page, std::move(f));
}

Monodromy perturb_by_homotopy(const PageData& page, const Monodromy& f, std::mt19937_64& rng)
{
    // Redraw a few times when dh + hd happens to vanish.
    std::vector<IntMatrix> comps;
    for (int attempt = 0; attempt < 16; ++attempt) {
        comps = f.map().components();
        add_homotopy(page, comps, random_homotopy(page, rng, page.complex().top_degree()));
        if (!(comps == f.map().components()))
            break;
    }
    return Monodromy(page, std::move(comps));
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps)
{
    IntMatrix u = IntMatrix::identity(n);
    if (n == 0)
        return u;
    if (steps <= 0)
        steps = static_cast<int>(3 * n);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = uniform(rng, 0, n - 1);
        const std::size_t b = uniform(rng, 0, n - 1);
        if (a == b) {
            u.negate_row(a);
            continue;
        }
        u.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
        if (coin(rng, 0.2))
            u.swap_rows(a, b);
    }
    return u;
}

} // namespace varhom::fixtures
