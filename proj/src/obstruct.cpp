#include "varhom/obstruct.hpp"

#include <utility>

#include "polynomial.hpp"
#include "varhom/errors.hpp"
#include "varhom/smith.hpp"

namespace varhom {

Hypotheses::Hypotheses(int dim_, bool c1, bool flexible)
    : dim(dim_), c1_vanishes_on_spheres(c1), page_flexible(flexible)
{
    if (dim < 3 || dim % 2 == 0)
        throw StructuralError("manifold dimension must be odd and at least 3, got " + std::to_string(dim));
}

std::string to_string(ObstructionStatus s)
{
    switch (s) {
    case ObstructionStatus::Obstructed:
        return "OBSTRUCTED";
    case ObstructionStatus::Consistent:
        return "CONSISTENT";
    case ObstructionStatus::Inapplicable:
        return "INAPPLICABLE";
    }
    return "UNKNOWN";
}

ObstructionVerdict flexible_obstruction(const FgAbelianGroup& hq, const Hypotheses& hyp)
{
    ObstructionVerdict v;
    v.assumptions = hyp;
    v.citations = {"flexible-page-torsion-obstruction", "assumption:c1-vanishes-on-2-spheres",
                   "assumption:dimension-at-least-7"};
    if (hyp.dim < kObstructionMinDimension) {
        v.status = ObstructionStatus::Inapplicable;
        v.reason = "dimension " + std::to_string(hyp.dim) + " is below 7; the obstruction says nothing";
        return v;
    }
    if (!hyp.c1_vanishes_on_spheres) {
        v.status = ObstructionStatus::Inapplicable;
        v.reason = "c1 is not asserted to vanish on 2-spheres; the obstruction says nothing";
        return v;
    }
    if (is_torsion_free(hq)) {
        v.status = ObstructionStatus::Consistent;
        v.reason = "H_" + std::to_string(hyp.q()) +
                   "(M) is torsion free; no obstruction (existence is not implied)";
        return v;
    }
    v.status = ObstructionStatus::Obstructed;
    v.witness = hq.torsion();
    v.reason = "H_" + std::to_string(hyp.q()) + "(M) = " + to_string(hq) +
               " has torsion; no supporting open book with flexible page exists";
    if (hyp.page_flexible)
        v.reason += " (the asserted page flexibility is contradicted)";
    return v;
}

MonodromyFilterResult flexible_monodromy_filter(const std::vector<GroupHom>& action)
{
    MonodromyFilterResult r;
    for (std::size_t i = 0; i < action.size(); ++i)
        if (!hom_is_identity(action[i]))
            r.failing_degrees.push_back(static_cast<int>(i));
    r.admissible = r.failing_degrees.empty();
    return r;
}

BilinearForm::BilinearForm(IntMatrix matrix, int symmetry)
    : matrix_(std::move(matrix)), symmetry_(symmetry)
{
    if (symmetry_ != 1 && symmetry_ != -1)
        throw StructuralError("form symmetry must be +1 or -1");
    if (!matrix_.is_square())
        throw StructuralError("form matrix must be square");
    if (matrix_.transpose() != Integer(symmetry_) * matrix_)
        throw StructuralError("form matrix is not " +
                              std::string(symmetry_ == 1 ? "symmetric" : "skew-symmetric"));
}

BilinearForm hyperbolic_form(std::size_t g, Parity q_parity)
{
    if (g < 1)
        throw StructuralError("genus must be at least 1");
    const int sign = q_parity == Parity::Even ? 1 : -1;
    IntMatrix j(2 * g, 2 * g);
    for (std::size_t k = 0; k < g; ++k) {
        j(2 * k, 2 * k + 1) = 1;
        j(2 * k + 1, 2 * k) = sign;
    }
    return BilinearForm(std::move(j), sign);
}

bool preserves_form(const IntMatrix& a, const BilinearForm& j)
{
    if (!a.is_square() || a.rows() != j.size())
        throw StructuralError("matrix of size " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " does not act on a form of size " +
                              std::to_string(j.size()));
    return is_unimodular(a) && a.transpose() * j.matrix() * a == j.matrix();
}

std::string to_string(const AutomorphismOrder& o)
{
    return o.is_finite() ? o.finite->get_str() : "INFINITE";
}

AutomorphismOrder automorphism_order(const IntMatrix& a)
{
    if (!is_unimodular(a))
        throw StructuralError("automorphism order needs a unimodular matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return {Integer(1)};
    detail::IntPoly p = detail::minimal_polynomial(a);
    Integer order = 1;
    // phi(m) <= n forces m <= 2 n^2 (phi(m) >= sqrt(m / 2)).
    const unsigned long bound = 2 * n * n + 2;
    for (unsigned long m = 1; m <= bound && detail::degree(p) > 0; ++m) {
        if (detail::euler_phi(m) > static_cast<unsigned long>(detail::degree(p)))
            continue;
        detail::IntPoly phi = detail::cyclotomic(static_cast<unsigned>(m));
        detail::IntPoly quotient;
        if (!detail::divide_exact(p, phi, quotient))
            continue;
        detail::IntPoly again;
        if (detail::divide_exact(quotient, phi, again))
            return {};  // repeated factor: not diagonalizable
        p = std::move(quotient);
        mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), m);
    }
    if (detail::degree(p) > 0)
        return {};  // a non-cyclotomic factor
    return {order};
}

std::string to_string(LoopStatus s)
{
    return s == LoopStatus::NontrivialLoop ? "NONTRIVIAL_LOOP" : "NO_CONCLUSION";
}

LoopVerdict loop_verdict(const IntMatrix& a, const BilinearForm& j, bool formal_class_preserved)
{
    LoopVerdict v;
    v.citations = {"nontrivial-loop-from-cohomology-action", "realization:form-preserving-automorphisms",
                   "assumption:formal-symplectic-class-preserved"};
    v.formal_class_preserved = formal_class_preserved;
    v.preserves_form = preserves_form(a, j);
    v.acts_nontrivially = !a.is_identity();
    if (!formal_class_preserved) {
        v.reason = "formal symplectic class is not asserted to be preserved";
        return v;
    }
    if (!v.preserves_form) {
        v.reason = "matrix does not preserve the cup-product form, so it need not be realized by a diffeomorphism";
        return v;
    }
    if (!v.acts_nontrivially) {
        v.reason = "matrix acts trivially on cohomology";
        return v;
    }
    v.status = LoopStatus::NontrivialLoop;
    v.order = automorphism_order(a);
    v.reason = v.order->is_finite()
                   ? "nontrivial cohomology action gives a nontrivial loop of contact structures"
                   : "infinite-order cohomology action gives a loop of contact structures of infinite order";
    return v;
}

} // namespace varhom
