#include "varhom/openbook.hpp"

#include <utility>

#include "varhom/errors.hpp"

namespace varhom {
namespace {

// Maps between H_i(DW) and H_i(W_1) + H_i(W, dW).
//   up    : H_i(W) -> H_i(DW)        inclusion of W_1
//   across: H_i(W, dW) -> H_i(DW)    [c] -> [c_0 - c_1]
//   fold  : H_i(DW) -> H_i(W)        retraction onto W_1
//   proj  : H_i(DW) -> H_i(W, dW)    quotient by W_1
struct Splitting {
    HomologyBasis dw;
    HomologyBasis absolute;
    HomologyBasis relative;
    GroupHom up;
    GroupHom across;
    GroupHom fold;
    GroupHom proj;
};

Splitting make_splitting(const PageData& page, const DoubleData& dw, int i)
{
    HomologyBasis hdw = homology_basis(dw.complex, i);
    HomologyBasis habs = homology_basis(page.complex(), i);
    HomologyBasis hrel = relative_homology_basis(page.pair(), i);

    IntMatrix section_chain = (dw.include0(i) - dw.include1(i)) * page.pair().lift_matrix(i);
    IntMatrix proj_chain = page.pair().projection_matrix(i) * dw.include0(i).transpose();

    GroupHom up = hom_from_chain_level(habs, hdw, dw.include1(i));
    GroupHom across = hom_from_chain_level(hrel, hdw, section_chain);
    GroupHom fold = hom_from_chain_level(hdw, habs, dw.fold(i));
    GroupHom proj = hom_from_chain_level(hdw, hrel, proj_chain);

    const auto& gabs = habs.group();
    const auto& grel = hrel.group();
    bool ok = hom_is_identity(compose(fold, up)) && hom_is_identity(compose(proj, across)) &&
              compose(fold, across) == GroupHom::zero(grel, gabs) &&
              compose(proj, up) == GroupHom::zero(gabs, grel) &&
              hom_is_identity(compose(up, fold) + compose(across, proj));
    if (!ok)
        throw InvariantError("splitting of H_" + std::to_string(i) +
                             "(DW) into H(W_1) + H(DW, W_1) failed");
    return Splitting{std::move(hdw), std::move(habs), std::move(hrel), std::move(up),
                     std::move(across), std::move(fold), std::move(proj)};
}

std::vector<std::vector<std::size_t>> all_cells(const ChainComplex& c, int top)
{
    std::vector<std::vector<std::size_t>> out(top + 1);
    for (int i = 0; i <= top; ++i)
        for (std::size_t k = 0; k < c.rank(i); ++k)
            out[i].push_back(k);
    return out;
}

void check_page_degree(const PageData& page, int i)
{
    if (i < 0 || i > page.complex().top_degree())
        throw StructuralError("degree " + std::to_string(i) + " outside the page");
}

} // namespace

// -------------------------------------------------------------------- PageData

PageData::PageData(ChainComplex complex, std::vector<std::vector<std::size_t>> boundary_cells,
                   int q, bool weinstein_type)
    : pair_([&] {
          if (q < 1)
              throw StructuralError("half-dimension q must be at least 1");
          if (complex.top_degree() > 2 * q)
              throw StructuralError("page of dimension " + std::to_string(2 * q) +
                                    " has cells in degree " + std::to_string(complex.top_degree()));
          return SubcomplexPair(complex.padded(2 * q), std::move(boundary_cells));
      }()),
      q_(q),
      weinstein_type_(weinstein_type)
{
    if (pair_.sub_is_empty())
        throw StructuralError("page has empty boundary; an open book needs a binding");
    if (!weinstein_type_)
        return;
    const ChainComplex& w = pair_.ambient();
    for (int i = q_ + 1; i <= 2 * q_; ++i)
        if (!homology(w, i).is_trivial())
            throw StructuralError("page flagged weinstein_type has H_" + std::to_string(i) +
                                  "(W) = " + to_string(homology(w, i)));
    if (!is_torsion_free(homology(w, q_)))
        throw StructuralError("page flagged weinstein_type has torsion in H_q(W)");
    for (int i = 0; i < q_; ++i)
        if (!relative_homology(pair_, i).is_trivial())
            throw StructuralError("page flagged weinstein_type has H_" + std::to_string(i) +
                                  "(W, dW) = " + to_string(relative_homology(pair_, i)));
}

// ------------------------------------------------------------------- Monodromy

Monodromy::Monodromy(const PageData& page, std::vector<IntMatrix> components)
    : Monodromy(page, [&] {
          const ChainComplex& w = page.complex();
          for (int i = static_cast<int>(components.size()); i <= w.top_degree(); ++i) {
              if (w.rank(i) != 0)
                  throw StructuralError("monodromy has no component in degree " + std::to_string(i));
              components.emplace_back(0, 0);
          }
          return ChainMap(w, w, std::move(components));
      }())
{}

Monodromy::Monodromy(const PageData& page, ChainMap map) : map_(std::move(map))
{
    const ChainComplex& w = page.complex();
    if (!(map_.source() == w) || !(map_.target() == w))
        throw StructuralError("monodromy must be a self-map of the page complex");
    for (int i = 0; i <= w.top_degree(); ++i) {
        IntMatrix f = map_.component(i);
        for (std::size_t c : page.pair().sub_indices(i))
            for (std::size_t r = 0; r < w.rank(i); ++r)
                if (f(r, c) != (r == c ? 1 : 0))
                    throw StructuralError("monodromy is not the identity on boundary cell " +
                                          std::to_string(c) + " in degree " + std::to_string(i));
    }
}

Monodromy Monodromy::identity(const PageData& page)
{
    return Monodromy(page, ChainMap::identity(page.complex()));
}

// ---------------------------------------------------------------------- Double

SubcomplexPair DoubleData::copy0() const
{
    return SubcomplexPair(complex, copy0_cells);
}

SubcomplexPair DoubleData::copy1() const
{
    return SubcomplexPair(complex, copy1_cells);
}

SubcomplexPair DoubleData::seam() const
{
    std::vector<std::vector<std::size_t>> cells(copy0_cells.size());
    for (std::size_t i = 0; i < copy0_cells.size(); ++i)
        for (std::size_t k = 0; k < copy0_cells[i].size(); ++k)
            if (copy0_cells[i][k] == copy1_cells[i][k])
                cells[i].push_back(copy0_cells[i][k]);
    return SubcomplexPair(complex, std::move(cells));
}

IntMatrix DoubleData::include0(int i) const
{
    IntMatrix m(complex.rank(i), copy0_cells[i].size());
    for (std::size_t k = 0; k < copy0_cells[i].size(); ++k)
        m(copy0_cells[i][k], k) = 1;
    return m;
}

IntMatrix DoubleData::include1(int i) const
{
    IntMatrix m(complex.rank(i), copy1_cells[i].size());
    for (std::size_t k = 0; k < copy1_cells[i].size(); ++k)
        m(copy1_cells[i][k], k) = 1;
    return m;
}

IntMatrix DoubleData::fold(int i) const
{
    IntMatrix m(copy0_cells[i].size(), complex.rank(i));
    for (std::size_t k = 0; k < copy0_cells[i].size(); ++k) {
        m(k, copy0_cells[i][k]) = 1;
        m(k, copy1_cells[i][k]) = 1;
    }
    return m;
}

DoubleData build_double(const PageData& page)
{
    const ChainComplex& w = page.complex();
    const SubcomplexPair& p = page.pair();
    const int top = w.top_degree();

    DoubleData dw;
    dw.copy0_cells = all_cells(w, top);
    dw.copy1_cells.resize(top + 1);
    std::vector<std::size_t> ranks;
    for (int i = 0; i <= top; ++i) {
        const std::size_t n = w.rank(i);
        auto& c1 = dw.copy1_cells[i];
        c1.resize(n);
        std::size_t next = n;
        for (std::size_t c = 0; c < n; ++c)
            c1[c] = p.contains(i, c) ? c : next++;
        ranks.push_back(next);
    }
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= top; ++i) {
        const IntMatrix& d = w.boundary(i);
        IntMatrix dd(ranks[i - 1], ranks[i]);
        for (std::size_t c = 0; c < w.rank(i); ++c)
            for (std::size_t r = 0; r < w.rank(i - 1); ++r) {
                if (sgn(d(r, c)) == 0)
                    continue;
                dd(dw.copy0_cells[i - 1][r], dw.copy0_cells[i][c]) = d(r, c);
                if (!p.contains(i, c))
                    dd(dw.copy1_cells[i - 1][r], dw.copy1_cells[i][c]) = d(r, c);
            }
        ds.push_back(std::move(dd));
    }
    dw.complex = ChainComplex(std::move(ranks), std::move(ds));
    return dw;
}

ChainMap extend_monodromy(const PageData& page, const DoubleData& dw, const Monodromy& f)
{
    const ChainComplex& w = page.complex();
    std::vector<IntMatrix> comps;
    for (int i = 0; i <= w.top_degree(); ++i) {
        IntMatrix e = IntMatrix::identity(dw.complex.rank(i));
        IntMatrix fi = f.map().component(i);
        for (std::size_t c = 0; c < w.rank(i); ++c)
            for (std::size_t r = 0; r < w.rank(i); ++r)
                e(dw.copy0_cells[i][r], dw.copy0_cells[i][c]) = fi(r, c);
        comps.push_back(std::move(e));
    }
    return ChainMap(dw.complex, dw.complex, std::move(comps));
}

ChainMap extend_monodromy(const PageData& page, const Monodromy& f)
{
    return extend_monodromy(page, build_double(page), f);
}

// ------------------------------------------------------------ page-level maps

GroupHom variation(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    const std::size_t n = page.complex().rank(i);
    IntMatrix chain = (f.map().component(i) - IntMatrix::identity(n)) * page.pair().lift_matrix(i);
    return hom_from_chain_level(relative_homology_basis(page.pair(), i),
                                homology_basis(page.complex(), i), chain);
}

GroupHom variation(const PageData& page, const Monodromy& f)
{
    return variation(page, f, page.q());
}

GroupHom absolute_action(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    HomologyBasis h = homology_basis(page.complex(), i);
    return hom_from_chain_level(h, h, f.map().component(i));
}

GroupHom relative_action(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    HomologyBasis h = relative_homology_basis(page.pair(), i);
    IntMatrix chain =
        page.pair().projection_matrix(i) * f.map().component(i) * page.pair().lift_matrix(i);
    return hom_from_chain_level(h, h, chain);
}

// ------------------------------------------------------------ double actions

GroupHom double_action(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    DoubleData dw = build_double(page);
    return induced_hom(extend_monodromy(page, dw, f), i);
}

BlockMatrix double_action_blocks(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    DoubleData dw = build_double(page);
    Splitting s = make_splitting(page, dw, i);
    GroupHom e = induced_hom(extend_monodromy(page, dw, f), i);

    BlockMatrix b{compose(s.fold, compose(e, s.up)), compose(s.fold, compose(e, s.across)),
                  compose(s.proj, compose(e, s.up)), compose(s.proj, compose(e, s.across))};
    if (!hom_is_identity(b.top_left))
        throw InvariantError("e(f)_* does not fix H_" + std::to_string(i) + "(W_1)");
    if (!b.bottom_left.is_zero())
        throw InvariantError("e(f)_* has a nonzero lower-left block in degree " + std::to_string(i));
    return b;
}

GroupHom assembled_double_action(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    DoubleData dw = build_double(page);
    Splitting s = make_splitting(page, dw, i);
    GroupHom var = variation(page, f, i);
    GroupHom rel = relative_action(page, f, i);
    // P [[Id, var], [0, f_*]] Q with P = (up, across) and Q = (fold; proj).
    return compose(s.up, s.fold) + compose(s.up, compose(var, s.proj)) +
           compose(s.across, compose(rel, s.proj));
}

BlockMatrix mayer_vietoris_blocks(const PageData& page, const Monodromy& f, int i)
{
    check_page_degree(page, i);
    DoubleData dw = build_double(page);
    Splitting s = make_splitting(page, dw, i);
    ChainMap e = extend_monodromy(page, dw, f);
    GroupHom twisted = hom_from_chain_level(s.dw, s.absolute, dw.fold(i) * e.component(i));
    return BlockMatrix{compose(s.fold, s.up), compose(s.fold, s.across), compose(twisted, s.up),
                       compose(twisted, s.across)};
}

ChainComplex twisted_double_complex(const PageData& page, const Monodromy& f)
{
    const ChainComplex& w = page.complex();
    DoubleData dw = build_double(page);
    ChainMap e = extend_monodromy(page, dw, f);
    ChainComplex target = direct_sum(w, w);
    std::vector<IntMatrix> comps;
    for (int i = 0; i <= dw.complex.top_degree(); ++i) {
        IntMatrix fold = dw.fold(i);
        comps.push_back(vstack(fold, -(fold * e.component(i))));
    }
    ChainMap glue(dw.complex, std::move(target), std::move(comps));
    return mapping_cone(glue).padded(page.manifold_dimension());
}

// ------------------------------------------------------------ H_*(M)

std::string to_string(Method m)
{
    switch (m) {
    case Method::Formula:
        return "formula";
    case Method::Glued:
        return "glued";
    case Method::FormulaChecked:
        return "formula+glued";
    case Method::Duality:
        return "duality";
    }
    return "unknown";
}

OpenBookHomology open_book_homology(const PageData& page, const Monodromy& f, OpenBookOptions options)
{
    const int q = page.q();
    const int n = page.manifold_dimension();
    ChainComplex m = twisted_double_complex(page, f);
    OpenBookHomology out{{}, variation(page, f), {}};
    for (int i = 0; i <= n; ++i) {
        const bool formula = page.weinstein_type() && i <= q;
        if (!formula) {
            out.groups.push_back(homology(m, i));
            out.methods.push_back(Method::Glued);
            continue;
        }
        FgAbelianGroup g = i < q ? homology(page.complex(), i) : hom_cokernel(out.variation);
        if (options.oracle_check) {
            FgAbelianGroup glued = homology(m, i);
            if (!groups_isomorphic(g, glued))
                throw InvariantError("H_" + std::to_string(i) + "(M): formula gives " + to_string(g) +
                                     " but the glued complex gives " + to_string(glued));
        }
        out.groups.push_back(std::move(g));
        out.methods.push_back(options.oracle_check ? Method::FormulaChecked : Method::Formula);
    }
    return out;
}

OpenBookHomology open_book_homology_from_variation(const PageData& page, const IntMatrix& matrix)
{
    if (!page.weinstein_type())
        throw StructuralError("a variation matrix alone determines H_*(M) only for weinstein_type pages");
    const int q = page.q();
    const int n = page.manifold_dimension();
    GroupHom var(relative_homology(page.pair(), q), homology(page.complex(), q), matrix);
    OpenBookHomology out{std::vector<FgAbelianGroup>(n + 1), var, std::vector<Method>(n + 1)};
    for (int i = 0; i < q; ++i) {
        out.groups[i] = homology(page.complex(), i);
        out.methods[i] = Method::Formula;
    }
    out.groups[q] = hom_cokernel(var);
    out.methods[q] = Method::Formula;
    // H_{n-k} = free(H_k) + torsion(H_{k-1}) for a closed oriented n-manifold.
    for (int k = 0; k <= q; ++k) {
        std::vector<Integer> torsion;
        if (k > 0)
            torsion = out.groups[k - 1].torsion();
        out.groups[n - k] = FgAbelianGroup::from_cyclic_orders(out.groups[k].free_rank(), torsion);
        out.methods[n - k] = Method::Duality;
    }
    return out;
}

SkeletonCriterion skeleton_criterion(const PageData& page, const Monodromy& f)
{
    const int q = page.q();
    DoubleData dw = build_double(page);
    ChainMap sk = skeleton(extend_monodromy(page, dw, f), q);
    SkeletonCriterion c;
    c.homology_identity = hom_is_identity(induced_hom(sk, q));
    c.cohomology_identity = hom_is_identity(induced_cohom(sk, q));
    if (c.holds() && !variation(page, f).is_zero())
        throw InvariantError("e(f) is the identity on the q-skeleton of DW but var(f) is nonzero");
    return c;
}

std::vector<GroupHom> double_skeleton_cohomology_action(const PageData& page, const Monodromy& f)
{
    const int q = page.q();
    DoubleData dw = build_double(page);
    ChainMap sk = skeleton(extend_monodromy(page, dw, f), q);
    std::vector<GroupHom> out;
    for (int i = 0; i <= q; ++i)
        out.push_back(induced_cohom(sk, i));
    return out;
}

} // namespace varhom
