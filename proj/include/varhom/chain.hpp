#pragma once

#include <cstddef>
#include <vector>

#include "varhom/abgroup.hpp"
#include "varhom/int_matrix.hpp"

namespace varhom {

/// Bounded chain complex of free modules C_0 .. C_top with chosen bases.
///
/// boundary(i) is the matrix of d_i : C_i -> C_{i-1}, of shape
/// rank(i-1) x rank(i). d_0 and d_{top+1} are stored as empty matrices so
/// every degree in [0, top+1] has a boundary. d o d == 0 is checked on
/// construction.
class ChainComplex {
public:
    ChainComplex() : ChainComplex(std::vector<std::size_t>{0}, {}) {}
    // `boundaries[k]` is d_{k+1}; there must be ranks.size() - 1 of them.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int i) const noexcept;
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    std::size_t total_cells() const noexcept;

    // 0 <= i <= top + 1.
    const IntMatrix& boundary(int i) const;

    // Same complex with zero modules appended up to degree `top`.
    ChainComplex padded(int top) const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;  // index i holds d_i, i = 0..top+1
};

/// Degree-preserving family f_i : C_i(source) -> C_i(target) commuting with
/// the boundaries. Components are given for degrees 0..source.top_degree().
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components);

    static ChainMap identity(const ChainComplex& c);

    const ChainComplex& source() const noexcept { return source_; }
    const ChainComplex& target() const noexcept { return target_; }
    const std::vector<IntMatrix>& components() const noexcept { return components_; }
    // Zero matrix of the right shape outside the stored range.
    IntMatrix component(int i) const;

private:
    ChainComplex source_;
    ChainComplex target_;
    std::vector<IntMatrix> components_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Subcomplex of `ambient` spanned by a subset of basis cells in each degree.
class SubcomplexPair {
public:
    SubcomplexPair(ChainComplex ambient, std::vector<std::vector<std::size_t>> sub_indices);

    const ChainComplex& ambient() const noexcept { return ambient_; }
    const std::vector<std::size_t>& sub_indices(int i) const;
    // Ambient cells not in the subcomplex, increasing.
    const std::vector<std::size_t>& quotient_indices(int i) const;
    bool contains(int i, std::size_t cell) const;
    bool sub_is_empty() const;

    ChainComplex sub_complex() const;
    ChainComplex quotient_complex() const;

    // Extend a quotient chain by zeros on the subcomplex cells.
    IntVector lift(int i, std::span<const Integer> quotient_chain) const;
    // Matrix of the lift C_i(ambient, sub) -> C_i(ambient).
    IntMatrix lift_matrix(int i) const;
    // Matrix of the projection C_i(ambient) -> C_i(ambient, sub).
    IntMatrix projection_matrix(int i) const;
    // Matrix of the inclusion C_i(sub) -> C_i(ambient).
    IntMatrix inclusion_matrix(int i) const;

private:
    ChainComplex ambient_;
    std::vector<std::vector<std::size_t>> sub_;
    std::vector<std::vector<std::size_t>> rest_;
};

/// A subquotient ker(out) / im(in) of Z^n together with explicit generators.
///
/// Representatives are chains in Z^n, listed free generators first, then
/// torsion generators in divisibility order, matching `group`'s canonical
/// generator system.
class HomologyBasis {
public:
    // `in` : Z^m -> Z^n and `out` : Z^n -> Z^p with out * in == 0.
    HomologyBasis(const IntMatrix& in, const IntMatrix& out);

    const FgAbelianGroup& group() const noexcept { return group_; }
    std::size_t ambient_rank() const noexcept { return cycles_.rows(); }
    const IntMatrix& representatives() const noexcept { return representatives_; }
    IntVector representative(std::size_t g) const { return representatives_.column(g); }

    bool is_cycle(std::span<const Integer> chain) const;
    // Coordinates of the class of `cycle`, reduced. Throws InvariantError if
    // `cycle` is not in ker(out).
    IntVector coordinates(std::span<const Integer> cycle) const;

private:
    IntMatrix out_;
    IntMatrix cycles_;          // n x k saturated basis of ker(out)
    IntMatrix cycle_coords_;    // k x n left inverse of cycles_
    IntMatrix class_coords_;    // g x k: cycle coordinates -> generator coordinates
    IntMatrix representatives_; // n x g
    FgAbelianGroup group_;
};

HomologyBasis homology_basis(const ChainComplex& c, int i);
HomologyBasis cohomology_basis(const ChainComplex& c, int i);
// Basis of H_i of the quotient complex; representatives are quotient chains.
HomologyBasis relative_homology_basis(const SubcomplexPair& p, int i);

FgAbelianGroup homology(const ChainComplex& c, int i);
FgAbelianGroup cohomology(const ChainComplex& c, int i);
FgAbelianGroup relative_homology(const SubcomplexPair& p, int i);

/// Hom from `src` to `tgt` induced by a chain-level matrix mapping the ambient
/// space of `src` into that of `tgt`. Throws InvariantError (with the offending
/// chain) if a representative is not sent to a cycle.
GroupHom hom_from_chain_level(const HomologyBasis& src, const HomologyBasis& tgt,
                              const IntMatrix& chain_level);

GroupHom induced_hom(const ChainMap& f, int i);
// f^* : H^i(target) -> H^i(source).
GroupHom induced_cohom(const ChainMap& f, int i);

/// Cone with C_i = target_i + source_{i-1} and boundary [[d, f], [0, -d]].
ChainComplex mapping_cone(const ChainMap& f);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainComplex skeleton(const ChainComplex& c, int k);
ChainMap skeleton(const ChainMap& f, int k);

long euler_characteristic(const ChainComplex& c);

} // namespace varhom
