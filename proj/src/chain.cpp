#include "varhom/chain.hpp"

#include <algorithm>
#include <utility>

#include "varhom/errors.hpp"
#include "varhom/smith.hpp"

namespace varhom {
namespace {

const IntMatrix& empty_matrix()
{
    static const IntMatrix m;
    return m;
}

void check_degree(const ChainComplex& c, int i)
{
    if (i < 0 || i > c.top_degree())
        throw StructuralError("degree " + std::to_string(i) + " outside [0, " +
                              std::to_string(c.top_degree()) + "]");
}

// Any degree >= 0; degrees above the top give the zero group.
HomologyBasis basis_any_degree(const ChainComplex& c, int i)
{
    return HomologyBasis(c.boundary(i + 1), c.boundary(i));
}

HomologyBasis cobasis_any_degree(const ChainComplex& c, int i)
{
    return HomologyBasis(c.boundary(i).transpose(), c.boundary(i + 1).transpose());
}

std::string chain_to_string(std::span<const Integer> v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + v[k].get_str();
    return s + ")";
}

} // namespace

// ---------------------------------------------------------------- ChainComplex

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks))
{
    if (ranks_.empty())
        ranks_.push_back(0);
    if (boundaries.size() != ranks_.size() - 1)
        throw StructuralError("expected " + std::to_string(ranks_.size() - 1) +
                              " boundary matrices, got " + std::to_string(boundaries.size()));
    const int top = top_degree();
    boundaries_.reserve(ranks_.size() + 1);
    boundaries_.emplace_back(0, ranks_[0]);
    for (int i = 1; i <= top; ++i) {
        IntMatrix& d = boundaries[i - 1];
        if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
            throw StructuralError("boundary d_" + std::to_string(i) + " has shape " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                  ", expected " + std::to_string(ranks_[i - 1]) + "x" +
                                  std::to_string(ranks_[i]));
        boundaries_.push_back(std::move(d));
    }
    boundaries_.emplace_back(ranks_[top], 0);
    for (int i = 2; i <= top; ++i)
        if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
            throw StructuralError("d_" + std::to_string(i - 1) + " o d_" + std::to_string(i) +
                                  " is not zero");
}

std::size_t ChainComplex::rank(int i) const noexcept
{
    return (i < 0 || i > top_degree()) ? 0 : ranks_[i];
}

std::size_t ChainComplex::total_cells() const noexcept
{
    std::size_t n = 0;
    for (auto r : ranks_)
        n += r;
    return n;
}

const IntMatrix& ChainComplex::boundary(int i) const
{
    if (i < 0 || i > top_degree() + 1)
        return empty_matrix();
    return boundaries_[i];
}

ChainComplex ChainComplex::padded(int top) const
{
    if (top <= top_degree())
        return *this;
    std::vector<std::size_t> ranks = ranks_;
    ranks.resize(top + 1, 0);
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= top; ++i)
        ds.emplace_back(ranks[i - 1], ranks[i]);
    for (int i = 1; i <= top_degree(); ++i)
        ds[i - 1] = boundaries_[i];
    return ChainComplex(std::move(ranks), std::move(ds));
}

// -------------------------------------------------------------------- ChainMap

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    const int top = source_.top_degree();
    if (components_.size() != static_cast<std::size_t>(top + 1))
        throw StructuralError("chain map needs " + std::to_string(top + 1) +
                              " components, got " + std::to_string(components_.size()));
    for (int i = 0; i <= top; ++i) {
        const IntMatrix& f = components_[i];
        if (f.rows() != target_.rank(i) || f.cols() != source_.rank(i))
            throw StructuralError("chain map component " + std::to_string(i) + " has shape " +
                                  std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                  ", expected " + std::to_string(target_.rank(i)) + "x" +
                                  std::to_string(source_.rank(i)));
    }
    for (int i = 1; i <= top; ++i) {
        IntMatrix lhs = target_.boundary(i) * components_[i];
        IntMatrix rhs = components_[i - 1] * source_.boundary(i);
        if (lhs != rhs)
            throw StructuralError("chain map does not commute with the boundary in degree " +
                                  std::to_string(i));
    }
}

ChainMap ChainMap::identity(const ChainComplex& c)
{
    std::vector<IntMatrix> comps;
    for (int i = 0; i <= c.top_degree(); ++i)
        comps.push_back(IntMatrix::identity(c.rank(i)));
    return ChainMap(c, c, std::move(comps));
}

IntMatrix ChainMap::component(int i) const
{
    if (i < 0 || i > source_.top_degree())
        return IntMatrix(target_.rank(i), source_.rank(i));
    return components_[i];
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target() == g.source()))
        throw StructuralError("composition of chain maps with mismatched complexes");
    std::vector<IntMatrix> comps;
    for (int i = 0; i <= f.source().top_degree(); ++i)
        comps.push_back(g.component(i) * f.component(i));
    return ChainMap(f.source(), g.target(), std::move(comps));
}

// -------------------------------------------------------------- SubcomplexPair

SubcomplexPair::SubcomplexPair(ChainComplex ambient, std::vector<std::vector<std::size_t>> sub_indices)
    : ambient_(std::move(ambient)), sub_(std::move(sub_indices))
{
    const int top = ambient_.top_degree();
    if (sub_.size() > static_cast<std::size_t>(top + 1))
        throw StructuralError("sub_indices has more degrees than the ambient complex");
    sub_.resize(top + 1);
    rest_.resize(top + 1);
    for (int i = 0; i <= top; ++i) {
        auto& s = sub_[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw StructuralError("duplicate subcomplex cell in degree " + std::to_string(i));
        if (!s.empty() && s.back() >= ambient_.rank(i))
            throw StructuralError("subcomplex cell " + std::to_string(s.back()) +
                                  " out of range in degree " + std::to_string(i));
        for (std::size_t c = 0, k = 0; c < ambient_.rank(i); ++c) {
            if (k < s.size() && s[k] == c)
                ++k;
            else
                rest_[i].push_back(c);
        }
    }
    for (int i = 1; i <= top; ++i) {
        const IntMatrix& d = ambient_.boundary(i);
        for (std::size_t cell : sub_[i])
            for (std::size_t r : rest_[i - 1])
                if (sgn(d(r, cell)) != 0)
                    throw StructuralError("subcomplex not closed: boundary of cell " +
                                          std::to_string(cell) + " in degree " + std::to_string(i) +
                                          " meets cell " + std::to_string(r));
    }
}

const std::vector<std::size_t>& SubcomplexPair::sub_indices(int i) const
{
    check_degree(ambient_, i);
    return sub_[i];
}

const std::vector<std::size_t>& SubcomplexPair::quotient_indices(int i) const
{
    check_degree(ambient_, i);
    return rest_[i];
}

bool SubcomplexPair::contains(int i, std::size_t cell) const
{
    const auto& s = sub_indices(i);
    return std::binary_search(s.begin(), s.end(), cell);
}

bool SubcomplexPair::sub_is_empty() const
{
    return std::all_of(sub_.begin(), sub_.end(), [](const auto& s) { return s.empty(); });
}

ChainComplex SubcomplexPair::sub_complex() const
{
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> ds;
    for (int i = 0; i <= ambient_.top_degree(); ++i) {
        ranks.push_back(sub_[i].size());
        if (i > 0)
            ds.push_back(ambient_.boundary(i).select_rows(sub_[i - 1]).select_cols(sub_[i]));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex SubcomplexPair::quotient_complex() const
{
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> ds;
    for (int i = 0; i <= ambient_.top_degree(); ++i) {
        ranks.push_back(rest_[i].size());
        if (i > 0)
            ds.push_back(ambient_.boundary(i).select_rows(rest_[i - 1]).select_cols(rest_[i]));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

IntVector SubcomplexPair::lift(int i, std::span<const Integer> quotient_chain) const
{
    const auto& rest = quotient_indices(i);
    if (quotient_chain.size() != rest.size())
        throw StructuralError("quotient chain has the wrong length");
    IntVector out(ambient_.rank(i));
    for (std::size_t k = 0; k < rest.size(); ++k)
        out[rest[k]] = quotient_chain[k];
    return out;
}

IntMatrix SubcomplexPair::lift_matrix(int i) const
{
    return IntMatrix::identity(ambient_.rank(i)).select_cols(quotient_indices(i));
}

IntMatrix SubcomplexPair::projection_matrix(int i) const
{
    return IntMatrix::identity(ambient_.rank(i)).select_rows(quotient_indices(i));
}

IntMatrix SubcomplexPair::inclusion_matrix(int i) const
{
    return IntMatrix::identity(ambient_.rank(i)).select_cols(sub_indices(i));
}

// --------------------------------------------------------------- HomologyBasis

HomologyBasis::HomologyBasis(const IntMatrix& in, const IntMatrix& out) : out_(out)
{
    if (in.rows() != out.cols())
        throw StructuralError("incoming and outgoing maps do not meet in the same module");
    KernelLattice kernel = kernel_lattice(out);
    cycles_ = std::move(kernel.basis);
    cycle_coords_ = std::move(kernel.coordinates);

    IntMatrix boundaries = cycle_coords_ * in;
    if (cycles_ * boundaries != in)
        throw InvariantError("image of the incoming map is not contained in the cycles");

    SmithForm s = smith_normal_form(boundaries);
    const std::size_t k = cycles_.cols();
    std::vector<std::size_t> picked;
    std::vector<Integer> torsion;
    for (std::size_t j = s.rank; j < k; ++j)
        picked.push_back(j);
    for (std::size_t j = 0; j < s.rank; ++j)
        if (s.invariant_factors[j] > 1) {
            picked.push_back(j);
            torsion.push_back(s.invariant_factors[j]);
        }
    class_coords_ = s.U.select_rows(picked);
    representatives_ = cycles_ * s.U_inv.select_cols(picked);
    group_ = FgAbelianGroup::from_cyclic_orders(k - s.rank, torsion);
    if (group_.generator_count() != picked.size())
        throw InvariantError("homology generators do not match the normalized group");
}

bool HomologyBasis::is_cycle(std::span<const Integer> chain) const
{
    return is_zero_vector(out_.apply(chain));
}

IntVector HomologyBasis::coordinates(std::span<const Integer> cycle) const
{
    IntVector x = cycle_coords_.apply(cycle);
    if (cycles_.apply(x) != IntVector(cycle.begin(), cycle.end()))
        throw InvariantError("chain " + chain_to_string(cycle) + " is not a cycle");
    return reduce_coordinates(group_, class_coords_.apply(x));
}

HomologyBasis homology_basis(const ChainComplex& c, int i)
{
    check_degree(c, i);
    return basis_any_degree(c, i);
}

HomologyBasis cohomology_basis(const ChainComplex& c, int i)
{
    check_degree(c, i);
    return cobasis_any_degree(c, i);
}

HomologyBasis relative_homology_basis(const SubcomplexPair& p, int i)
{
    return homology_basis(p.quotient_complex(), i);
}

FgAbelianGroup homology(const ChainComplex& c, int i)
{
    return homology_basis(c, i).group();
}

FgAbelianGroup cohomology(const ChainComplex& c, int i)
{
    return cohomology_basis(c, i).group();
}

FgAbelianGroup relative_homology(const SubcomplexPair& p, int i)
{
    return relative_homology_basis(p, i).group();
}

GroupHom hom_from_chain_level(const HomologyBasis& src, const HomologyBasis& tgt,
                              const IntMatrix& chain_level)
{
    if (chain_level.rows() != tgt.ambient_rank() || chain_level.cols() != src.ambient_rank())
        throw StructuralError("chain-level matrix does not match the homology bases");
    const std::size_t n = src.group().generator_count();
    IntMatrix m(tgt.group().generator_count(), n);
    for (std::size_t g = 0; g < n; ++g) {
        IntVector image = chain_level.apply(src.representative(g));
        if (!tgt.is_cycle(image))
            throw InvariantError("generator " + std::to_string(g) + " maps to the non-cycle " +
                                 chain_to_string(image));
        m.set_column(g, tgt.coordinates(image));
    }
    return GroupHom(src.group(), tgt.group(), std::move(m));
}

GroupHom induced_hom(const ChainMap& f, int i)
{
    check_degree(f.source(), i);
    return hom_from_chain_level(basis_any_degree(f.source(), i), basis_any_degree(f.target(), i),
                                f.component(i));
}

GroupHom induced_cohom(const ChainMap& f, int i)
{
    check_degree(f.source(), i);
    return hom_from_chain_level(cobasis_any_degree(f.target(), i), cobasis_any_degree(f.source(), i),
                                f.component(i).transpose());
}

// ---------------------------------------------------------------- constructions

ChainComplex mapping_cone(const ChainMap& f)
{
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    const int top = std::max(t.top_degree(), s.top_degree() + 1);
    std::vector<std::size_t> ranks;
    for (int i = 0; i <= top; ++i)
        ranks.push_back(t.rank(i) + s.rank(i - 1));
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= top; ++i) {
        IntMatrix d(ranks[i - 1], ranks[i]);
        const std::size_t tr = t.rank(i - 1), tc = t.rank(i);
        const IntMatrix& dt = t.boundary(i);
        for (std::size_t r = 0; r < dt.rows(); ++r)
            for (std::size_t c = 0; c < dt.cols(); ++c)
                d(r, c) = dt(r, c);
        IntMatrix fc = f.component(i - 1);
        for (std::size_t r = 0; r < fc.rows(); ++r)
            for (std::size_t c = 0; c < fc.cols(); ++c)
                d(r, tc + c) = fc(r, c);
        const IntMatrix& ds_ = s.boundary(i - 1);
        for (std::size_t r = 0; r < ds_.rows(); ++r)
            for (std::size_t c = 0; c < ds_.cols(); ++c)
                d(tr + r, tc + c) = -ds_(r, c);
        ds.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    const int top = std::max(a.top_degree(), b.top_degree());
    std::vector<std::size_t> ranks;
    for (int i = 0; i <= top; ++i)
        ranks.push_back(a.rank(i) + b.rank(i));
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= top; ++i) {
        IntMatrix da = a.boundary(i), db = b.boundary(i);
        if (da.rows() != a.rank(i - 1) || da.cols() != a.rank(i))
            da = IntMatrix(a.rank(i - 1), a.rank(i));
        if (db.rows() != b.rank(i - 1) || db.cols() != b.rank(i))
            db = IntMatrix(b.rank(i - 1), b.rank(i));
        ds.push_back(block_diagonal(da, db));
    }
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainComplex skeleton(const ChainComplex& c, int k)
{
    check_degree(c, k);
    std::vector<std::size_t> ranks(c.ranks().begin(), c.ranks().begin() + k + 1);
    std::vector<IntMatrix> ds;
    for (int i = 1; i <= k; ++i)
        ds.push_back(c.boundary(i));
    return ChainComplex(std::move(ranks), std::move(ds));
}

ChainMap skeleton(const ChainMap& f, int k)
{
    ChainComplex s = skeleton(f.source(), k);
    ChainComplex t = skeleton(f.target(), k);
    std::vector<IntMatrix> comps;
    for (int i = 0; i <= k; ++i)
        comps.push_back(f.component(i));
    return ChainMap(std::move(s), std::move(t), std::move(comps));
}

long euler_characteristic(const ChainComplex& c)
{
    long chi = 0;
    for (int i = 0; i <= c.top_degree(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(i));
    return chi;
}

} // namespace varhom
