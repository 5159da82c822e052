#pragma once

#include <string>
#include <vector>

#include "varhom/abgroup.hpp"
#include "varhom/chain.hpp"

namespace varhom {

/// Cellular model of a page W of dimension 2q with its binding boundary
/// marked as a subcomplex.
///
/// With `weinstein_type` set the page must have the homology of a handlebody
/// with handles of index <= q: H_i(W) = 0 for i > q, H_q(W) free, and
/// H_i(W, dW) = 0 for i < q. The check is homological since any cellular
/// model that contains dW as a subcomplex has cells above degree q.
class PageData {
public:
    PageData(ChainComplex complex, std::vector<std::vector<std::size_t>> boundary_cells, int q,
             bool weinstein_type);

    const ChainComplex& complex() const noexcept { return pair_.ambient(); }
    const SubcomplexPair& pair() const noexcept { return pair_; }
    int q() const noexcept { return q_; }
    int manifold_dimension() const noexcept { return 2 * q_ + 1; }
    bool weinstein_type() const noexcept { return weinstein_type_; }
    bool is_boundary_cell(int degree, std::size_t cell) const { return pair_.contains(degree, cell); }

private:
    SubcomplexPair pair_;
    int q_;
    bool weinstein_type_;
};

/// Chain-level monodromy: a chain self-map of the page that is the identity
/// on every boundary cell.
class Monodromy {
public:
    Monodromy(const PageData& page, std::vector<IntMatrix> components);
    Monodromy(const PageData& page, ChainMap map);

    static Monodromy identity(const PageData& page);

    const ChainMap& map() const noexcept { return map_; }

private:
    ChainMap map_;
};

/// DW = W_0 u_Id W_1. Cells per degree: all cells of W_0 in page order, then
/// the interior cells of W_1 in page order. Seam cells belong to W_0.
struct DoubleData {
    ChainComplex complex;
    std::vector<std::vector<std::size_t>> copy0_cells;  // per degree, page cell -> DW cell
    std::vector<std::vector<std::size_t>> copy1_cells;

    SubcomplexPair copy0() const;
    SubcomplexPair copy1() const;
    SubcomplexPair seam() const;

    IntMatrix include0(int i) const;  // C_i(W) -> C_i(DW) onto W_0
    IntMatrix include1(int i) const;  // C_i(W) -> C_i(DW) onto W_1
    IntMatrix fold(int i) const;      // C_i(DW) -> C_i(W), identifies both copies
};

DoubleData build_double(const PageData& page);

/// e(f): f on W_0, identity on W_1.
ChainMap extend_monodromy(const PageData& page, const DoubleData& dw, const Monodromy& f);
ChainMap extend_monodromy(const PageData& page, const Monodromy& f);

/// var(f) : H_i(W, dW) -> H_i(W), [c] -> [f(c) - c].
GroupHom variation(const PageData& page, const Monodromy& f, int i);
GroupHom variation(const PageData& page, const Monodromy& f);

/// f_* on H_i(W) and on H_i(W, dW).
GroupHom absolute_action(const PageData& page, const Monodromy& f, int i);
GroupHom relative_action(const PageData& page, const Monodromy& f, int i);

/// A map written against the splitting H_i(DW) = H_i(W_1) + H_i(DW, W_1),
/// where H_i(DW, W_1) is identified with H_i(W, dW) through W_0 = W.
struct BlockMatrix {
    GroupHom top_left;
    GroupHom top_right;
    GroupHom bottom_left;
    GroupHom bottom_right;
};

/// e(f)_* on H_i(DW) computed on the double's own homology basis and then
/// conjugated into the split basis. Throws InvariantError if the splitting
/// maps fail to be mutually inverse or if the left column is not [Id; 0].
BlockMatrix double_action_blocks(const PageData& page, const Monodromy& f, int i);

/// The full e(f)_* on H_i(DW) in the double's own basis.
GroupHom double_action(const PageData& page, const Monodromy& f, int i);

/// Reassembles [[Id, var], [0, f_*]] from page-level data and maps it back
/// to the double's own basis, for comparison with double_action().
GroupHom assembled_double_action(const PageData& page, const Monodromy& f, int i);

/// (i_0*, i_1*) : H_i(DW) -> H_i(W'_0) + H_i(W'_1) in the split basis, where
/// i_0 is the fold and i_1 the fold after e(f). Rows: W'_0, W'_1.
BlockMatrix mayer_vietoris_blocks(const PageData& page, const Monodromy& f, int i);

/// Chain model of M = (W x I) u_{e(f)} (W x I): the cone of
/// C(DW) -> C(W) + C(W), x -> (fold x, -fold e(f) x). Its homology in
/// degree i is H_i(M); padded to degree 2q + 1.
ChainComplex twisted_double_complex(const PageData& page, const Monodromy& f);

enum class Method { Formula, Glued, FormulaChecked, Duality };
std::string to_string(Method m);

struct OpenBookHomology {
    std::vector<FgAbelianGroup> groups;  // H_0(M) .. H_{2q+1}(M)
    GroupHom variation;                  // degree q
    std::vector<Method> methods;
};

struct OpenBookOptions {
    // Recompute the formula degrees on the glued complex and require agreement.
    bool oracle_check = true;
};

/// Degrees i < q from H_i(W), degree q from coker(var(f)) when the page is of
/// Weinstein type; remaining degrees (or all, otherwise) from the glued
/// complex. A formula/glued disagreement throws InvariantError.
OpenBookHomology open_book_homology(const PageData& page, const Monodromy& f,
                                    OpenBookOptions options = {});

/// Variant for callers who only know var(f) as a matrix from the canonical
/// generators of H_q(W, dW) to those of H_q(W). Needs a Weinstein-type page;
/// degrees above q follow from Poincare duality of the closed manifold M.
OpenBookHomology open_book_homology_from_variation(const PageData& page, const IntMatrix& variation);

struct SkeletonCriterion {
    bool homology_identity = false;    // e(f)_* = Id on H_q(DW^(q))
    bool cohomology_identity = false;  // e(f)^* = Id on H^q(DW^(q))
    bool holds() const noexcept { return homology_identity || cohomology_identity; }
};

/// Either condition forces var(f) = 0 in degree q; that consequence is
/// re-checked here and a failure throws InvariantError.
SkeletonCriterion skeleton_criterion(const PageData& page, const Monodromy& f);

/// e(f)^* on H^i(DW^(q)) for i = 0..q.
std::vector<GroupHom> double_skeleton_cohomology_action(const PageData& page, const Monodromy& f);

} // namespace varhom
