#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "varhom/int_matrix.hpp"

namespace varhom {

/// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_k in invariant
/// factor form: t_1 | t_2 | ... | t_k and every t_i >= 2.
///
/// The canonical generator system lists the r free generators first, then
/// one generator of order t_i per torsion factor.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;

    static FgAbelianGroup free(std::size_t rank);
    // Accepts any list of cyclic orders and normalizes it: 1s are dropped,
    // 0 counts as a free summand, coprime parts are merged.
    static FgAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                             const std::vector<Integer>& orders);

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<Integer>& torsion() const noexcept { return torsion_; }

    std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
    // 0 for a free generator.
    Integer generator_order(std::size_t g) const;
    bool is_trivial() const noexcept { return generator_count() == 0; }

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Group with `generators` generators and one relation per column of
/// `relations` (which must have `generators` rows).
FgAbelianGroup from_presentation(std::size_t generators, const IntMatrix& relations);

bool is_torsion_free(const FgAbelianGroup& g);
bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);
std::string to_string(const FgAbelianGroup& g);

/// Homomorphism between two normalized groups, written on their canonical
/// generator systems: column j is the image of domain generator j.
///
/// Construction checks well-definedness (each relation of the domain lands in
/// the relation lattice of the codomain) and reduces torsion coordinates into
/// [0, t). Two homs are equal as maps iff their reduced matrices are equal.
class GroupHom {
public:
    GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix);

    static GroupHom identity(const FgAbelianGroup& g);
    static GroupHom zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain);

    const FgAbelianGroup& domain() const noexcept { return domain_; }
    const FgAbelianGroup& codomain() const noexcept { return codomain_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    bool is_zero() const { return matrix_.is_zero(); }

    friend bool operator==(const GroupHom&, const GroupHom&) = default;

private:
    FgAbelianGroup domain_;
    FgAbelianGroup codomain_;
    IntMatrix matrix_;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom operator+(const GroupHom& a, const GroupHom& b);
GroupHom operator-(const GroupHom& a, const GroupHom& b);

/// Reduce a coordinate vector on g's generators into canonical range.
IntVector reduce_coordinates(const FgAbelianGroup& g, IntVector coords);

/// codomain / image(h), normalized.
FgAbelianGroup hom_cokernel(const GroupHom& h);

/// True iff h is the identity of the abstract group. Throws StructuralError
/// when domain and codomain differ.
bool hom_is_identity(const GroupHom& h);

std::string to_string(const GroupHom& h);

} // namespace varhom
