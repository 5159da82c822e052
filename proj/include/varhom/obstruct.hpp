#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varhom/abgroup.hpp"
#include "varhom/int_matrix.hpp"

namespace varhom {

/// Geometric hypotheses that cannot be read off chain data. They are taken
/// on the user's word and echoed back in every verdict.
struct Hypotheses {
    int dim = 0;  // 2q + 1
    bool c1_vanishes_on_spheres = false;
    bool page_flexible = false;

    Hypotheses() = default;
    Hypotheses(int dim, bool c1_vanishes_on_spheres, bool page_flexible);

    int q() const noexcept { return (dim - 1) / 2; }
};

// Smallest dimension the torsion obstruction speaks about.
inline constexpr int kObstructionMinDimension = 7;

enum class ObstructionStatus { Obstructed, Consistent, Inapplicable };
std::string to_string(ObstructionStatus s);

struct ObstructionVerdict {
    ObstructionStatus status = ObstructionStatus::Inapplicable;
    std::vector<Integer> witness;  // torsion invariant factors of H_q(M)
    std::string reason;
    std::vector<std::string> citations;
    Hypotheses assumptions;
};

/// Torsion in H_q(M) rules out a supporting open book with flexible page,
/// provided dim >= 7 and c_1 vanishes on 2-spheres. Never asserts existence.
ObstructionVerdict flexible_obstruction(const FgAbelianGroup& hq, const Hypotheses& hyp);

struct MonodromyFilterResult {
    bool admissible = true;
    std::vector<int> failing_degrees;
};

/// An exact symplectomorphism of a flexible page acts as the identity on
/// cohomology. `action[i]` is the action on H^i.
MonodromyFilterResult flexible_monodromy_filter(const std::vector<GroupHom>& action);

/// (-1)^q-symmetric Gram matrix of the middle-dimensional pairing.
class BilinearForm {
public:
    BilinearForm(IntMatrix matrix, int symmetry);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    int symmetry() const noexcept { return symmetry_; }
    std::size_t size() const noexcept { return matrix_.rows(); }

private:
    IntMatrix matrix_;
    int symmetry_;
};

enum class Parity { Even, Odd };

/// Block sum of g copies of [[0, 1], [(-1)^q, 0]].
BilinearForm hyperbolic_form(std::size_t g, Parity q_parity);

/// A^T J A == J and A unimodular.
bool preserves_form(const IntMatrix& a, const BilinearForm& j);

/// Order of a unimodular matrix; nullopt means infinite order.
struct AutomorphismOrder {
    std::optional<Integer> finite;
    bool is_finite() const noexcept { return finite.has_value(); }
};
std::string to_string(const AutomorphismOrder& o);

/// Exact: A has finite order iff its minimal polynomial is a product of
/// distinct cyclotomic polynomials, and then the order is the lcm of their
/// indices.
AutomorphismOrder automorphism_order(const IntMatrix& a);

enum class LoopStatus { NontrivialLoop, NoConclusion };
std::string to_string(LoopStatus s);

struct LoopVerdict {
    LoopStatus status = LoopStatus::NoConclusion;
    std::optional<AutomorphismOrder> order;  // set for NontrivialLoop
    bool preserves_form = false;
    bool acts_nontrivially = false;
    bool formal_class_preserved = false;
    std::string reason;
    std::vector<std::string> citations;
};

LoopVerdict loop_verdict(const IntMatrix& a, const BilinearForm& j, bool formal_class_preserved);

} // namespace varhom
