#pragma once

// Cellular models of classical spaces and open-book pages, plus random
// generators used by the test suites and the selftest command.

#include <cstddef>
#include <random>

#include "varhom/chain.hpp"
#include "varhom/openbook.hpp"

namespace varhom::fixtures {

// Minimal CW structures.
ChainComplex sphere(int n);
ChainComplex real_projective_space(int n);
ChainComplex torus();
ChainComplex klein_bottle();

// D^1 with both endpoints as boundary (not of Weinstein type).
PageData interval_page();
// D^{2q}: one 0-cell, the boundary sphere as a (2q-1)-cell, one 2q-cell.
PageData disk_page(int q);
// S^q x D^q with boundary S^q x S^{q-1}; for q = 1 this is the annulus.
PageData sphere_bundle_page(int q);
inline PageData annulus_page() { return sphere_bundle_page(1); }
// (S^q x S^q) # ... # (S^q x S^q) (g copies) minus an open disk.
PageData punctured_product_page(std::size_t g, int q);

/// n-fold twist of a sphere_bundle_page: the cocore q-cell picks up n times
/// the core sphere. On the annulus this is the n-th power of the Dehn twist.
Monodromy twist_monodromy(const PageData& sphere_bundle, long n);

/// Monodromy of a punctured_product_page acting on the 2g middle cells by A.
Monodromy middle_monodromy(const PageData& punctured_product, const IntMatrix& a);

struct RandomPageOptions {
    std::size_t max_cells = 12;
    int max_q = 3;
};

/// One of the page families above, possibly with cancelling interior cell
/// pairs added, then subjected to a random subcomplex-preserving unimodular
/// change of basis and cell permutation. Always of Weinstein type.
PageData random_page(std::mt19937_64& rng, RandomPageOptions options = {});

enum class MonodromyKind {
    General,              // rank-one cycle/cocycle terms plus a homotopy
    HomotopicToIdentity,  // identity plus dh + hd
    SkeletonTrivial,      // identity on q-cycles of the double
};

Monodromy random_monodromy(const PageData& page, std::mt19937_64& rng,
                           MonodromyKind kind = MonodromyKind::General);

/// f + dh + hd for a random h vanishing on boundary cells.
Monodromy perturb_by_homotopy(const PageData& page, const Monodromy& f, std::mt19937_64& rng);

/// Random unimodular n x n matrix with small entries.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 0);

} // namespace varhom::fixtures
