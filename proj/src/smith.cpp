#include "varhom/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "varhom/abgroup.hpp"
#include "varhom/errors.hpp"

namespace varhom {
namespace {

int cmpabs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Quotient rounded to nearest, so the remainder satisfies |r| <= |d| / 2.
Integer nearest_quotient(const Integer& n, const Integer& d)
{
    Integer q;
    Integer r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer twice_r = 2 * abs(r);
    if (twice_r > abs(d)) {
        // r has the sign of d; step the quotient so r moves toward zero.
        q += sgn(d) * sgn(r);
    }
    return q;
}

class Elimination {
public:
    Elimination(const IntMatrix& a, bool track_inverses)
        : A(a),
          U(IntMatrix::identity(a.rows())),
          V(IntMatrix::identity(a.cols())),
          inverses_(track_inverses)
    {
        if (inverses_) {
            Uinv = IntMatrix::identity(a.rows());
            Vinv = IntMatrix::identity(a.cols());
        }
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        if (inverses_)
            Uinv.swap_cols(i, j);
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        if (inverses_)
            Vinv.swap_rows(i, j);
    }

    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f)
    {
        A.add_row_multiple(dst, src, f);
        U.add_row_multiple(dst, src, f);
        if (inverses_)
            Uinv.add_col_multiple(src, dst, -f);
    }

    // col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f)
    {
        A.add_col_multiple(dst, src, f);
        V.add_col_multiple(dst, src, f);
        if (inverses_)
            Vinv.add_row_multiple(src, dst, -f);
    }

    void negate_row(std::size_t i)
    {
        A.negate_row(i);
        U.negate_row(i);
        if (inverses_)
            Uinv.negate_col(i);
    }

    std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < A.rows(); ++i)
            for (std::size_t j = t; j < A.cols(); ++j) {
                const Integer& v = A(i, j);
                if (sgn(v) == 0)
                    continue;
                if (!best || cmpabs(v, A(best->first, best->second)) < 0)
                    best = {i, j};
            }
        return best;
    }

    // Clears row t and column t outside the pivot, and enforces that the
    // pivot divides the rest of the active block.
    void settle_pivot(std::size_t t)
    {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < A.rows(); ++i) {
                if (sgn(A(i, t)) == 0)
                    continue;
                add_row(i, t, -nearest_quotient(A(i, t), A(t, t)));
                clean = clean && sgn(A(i, t)) == 0;
            }
            for (std::size_t j = t + 1; j < A.cols(); ++j) {
                if (sgn(A(t, j)) == 0)
                    continue;
                add_col(j, t, -nearest_quotient(A(t, j), A(t, t)));
                clean = clean && sgn(A(t, j)) == 0;
            }
            if (!clean) {
                // Some remainder is strictly smaller than the pivot; promote the smallest.
                std::size_t best_i = t, best_j = t;
                const Integer* best = nullptr;
                for (std::size_t i = t + 1; i < A.rows(); ++i)
                    if (sgn(A(i, t)) != 0 && (!best || cmpabs(A(i, t), *best) < 0)) {
                        best = &A(i, t);
                        best_i = i;
                        best_j = t;
                    }
                for (std::size_t j = t + 1; j < A.cols(); ++j)
                    if (sgn(A(t, j)) != 0 && (!best || cmpabs(A(t, j), *best) < 0)) {
                        best = &A(t, j);
                        best_i = t;
                        best_j = j;
                    }
                swap_rows(t, best_i);
                swap_cols(t, best_j);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < A.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < A.cols(); ++j)
                    if (sgn(A(i, j)) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                return;
        }
    }

    std::size_t run()
    {
        const std::size_t limit = std::min(A.rows(), A.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            auto pivot = smallest_entry(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            settle_pivot(t);
            if (sgn(A(t, t)) < 0)
                negate_row(t);
        }
        return t;
    }

    IntMatrix A, U, V, Uinv, Vinv;

private:
    bool inverses_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a, SmithOptions options)
{
    Elimination e(a, options.track_inverses);
    const std::size_t rank = e.run();
    SmithForm s;
    s.rank = rank;
    s.invariant_factors.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t)
        s.invariant_factors.push_back(e.A(t, t));
    s.D = std::move(e.A);
    s.U = std::move(e.U);
    s.V = std::move(e.V);
    s.U_inv = std::move(e.Uinv);
    s.V_inv = std::move(e.Vinv);
    return s;
}

KernelLattice kernel_lattice(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    const std::size_t n = a.cols();
    const std::size_t k = n - s.rank;
    KernelLattice out;
    out.basis = s.V.block(0, s.rank, n, k);
    out.coordinates = s.V_inv.block(s.rank, 0, k, n);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    return kernel_lattice(a).basis;
}

FgAbelianGroup cokernel_presentation(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a, {.track_inverses = false});
    std::vector<Integer> torsion;
    for (const auto& d : s.invariant_factors)
        if (d > 1)
            torsion.push_back(d);
    return FgAbelianGroup::from_cyclic_orders(a.rows() - s.rank, torsion);
}

bool is_unimodular(const IntMatrix& a)
{
    if (!a.is_square())
        throw StructuralError("unimodularity requires a square matrix, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    return abs(determinant(a)) == 1;
}

std::size_t matrix_rank(const IntMatrix& a)
{
    return smith_normal_form(a, {.track_inverses = false}).rank;
}

} // namespace varhom
