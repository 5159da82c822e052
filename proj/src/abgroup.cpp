#include "varhom/abgroup.hpp"

#include <sstream>
#include <utility>

#include "varhom/errors.hpp"
#include "varhom/smith.hpp"

namespace varhom {
namespace {

bool is_divisibility_chain(const std::vector<Integer>& t)
{
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 2)
            return false;
        if (i > 0 && !mpz_divisible_p(t[i].get_mpz_t(), t[i - 1].get_mpz_t()))
            return false;
    }
    return true;
}

void check_shape(const FgAbelianGroup& domain, const FgAbelianGroup& codomain, const IntMatrix& m)
{
    if (m.rows() != codomain.generator_count() || m.cols() != domain.generator_count())
        throw StructuralError("hom matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + " but groups have " +
                              std::to_string(codomain.generator_count()) + " and " +
                              std::to_string(domain.generator_count()) + " generators");
}

} // namespace

FgAbelianGroup FgAbelianGroup::free(std::size_t rank)
{
    FgAbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                                  const std::vector<Integer>& orders)
{
    FgAbelianGroup g;
    g.free_rank_ = free_rank;
    std::vector<Integer> nontrivial;
    for (const auto& o : orders) {
        Integer a = abs(o);
        if (a == 0)
            ++g.free_rank_;
        else if (a != 1)
            nontrivial.push_back(a);
    }
    if (is_divisibility_chain(nontrivial)) {
        g.torsion_ = std::move(nontrivial);
        return g;
    }
    SmithForm s = smith_normal_form(IntMatrix::diagonal(nontrivial), {.track_inverses = false});
    for (const auto& d : s.invariant_factors)
        if (d > 1)
            g.torsion_.push_back(d);
    return g;
}

Integer FgAbelianGroup::generator_order(std::size_t g) const
{
    if (g >= generator_count())
        throw StructuralError("generator index out of range");
    return g < free_rank_ ? Integer(0) : torsion_[g - free_rank_];
}

FgAbelianGroup from_presentation(std::size_t generators, const IntMatrix& relations)
{
    if (relations.rows() != generators)
        throw StructuralError("relation matrix has " + std::to_string(relations.rows()) +
                              " rows for " + std::to_string(generators) + " generators");
    return cokernel_presentation(relations);
}

bool is_torsion_free(const FgAbelianGroup& g)
{
    return g.torsion().empty();
}

bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b)
{
    return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

std::string to_string(const FgAbelianGroup& g)
{
    if (g.is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank() == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank() > 1) {
        os << "Z^" << g.free_rank();
        first = false;
    }
    for (const auto& t : g.torsion()) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

IntVector reduce_coordinates(const FgAbelianGroup& g, IntVector coords)
{
    if (coords.size() != g.generator_count())
        throw StructuralError("coordinate vector length does not match generator count");
    for (std::size_t k = 0; k < g.torsion().size(); ++k) {
        Integer& c = coords[g.free_rank() + k];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), g.torsion()[k].get_mpz_t());
    }
    return coords;
}

GroupHom::GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    check_shape(domain_, codomain_, matrix_);
    const std::size_t cf = codomain_.free_rank();
    for (std::size_t i = cf; i < matrix_.rows(); ++i) {
        const Integer& t = codomain_.torsion()[i - cf];
        for (auto& v : matrix_.row(i))
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), t.get_mpz_t());
    }
    // A domain generator of order t must map to an element killed by t.
    for (std::size_t j = domain_.free_rank(); j < matrix_.cols(); ++j) {
        const Integer& t = domain_.torsion()[j - domain_.free_rank()];
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            const Integer& v = matrix_(i, j);
            if (i < cf) {
                if (sgn(v) != 0)
                    throw StructuralError("ill-defined hom: torsion generator " + std::to_string(j) +
                                          " maps to a free coordinate");
            } else {
                Integer tv = t * v;
                if (!mpz_divisible_p(tv.get_mpz_t(), codomain_.torsion()[i - cf].get_mpz_t()))
                    throw StructuralError("ill-defined hom: relation of generator " +
                                          std::to_string(j) + " not respected");
            }
        }
    }
}

GroupHom GroupHom::identity(const FgAbelianGroup& g)
{
    return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain)
{
    return GroupHom(domain, codomain, IntMatrix(codomain.generator_count(), domain.generator_count()));
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    if (f.codomain() != g.domain())
        throw StructuralError("composition of homs with mismatched groups");
    return GroupHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

GroupHom operator+(const GroupHom& a, const GroupHom& b)
{
    if (a.domain() != b.domain() || a.codomain() != b.codomain())
        throw StructuralError("sum of homs with mismatched groups");
    return GroupHom(a.domain(), a.codomain(), a.matrix() + b.matrix());
}

GroupHom operator-(const GroupHom& a, const GroupHom& b)
{
    if (a.domain() != b.domain() || a.codomain() != b.codomain())
        throw StructuralError("difference of homs with mismatched groups");
    return GroupHom(a.domain(), a.codomain(), a.matrix() - b.matrix());
}

FgAbelianGroup hom_cokernel(const GroupHom& h)
{
    const FgAbelianGroup& c = h.codomain();
    const std::size_t n = c.generator_count();
    IntMatrix relations(n, c.torsion().size());
    for (std::size_t k = 0; k < c.torsion().size(); ++k)
        relations(c.free_rank() + k, k) = c.torsion()[k];
    return cokernel_presentation(hstack(relations, h.matrix()));
}

bool hom_is_identity(const GroupHom& h)
{
    if (h.domain() != h.codomain())
        throw StructuralError("identity test needs an endomorphism; domain " +
                              to_string(h.domain()) + " differs from codomain " +
                              to_string(h.codomain()));
    // The matrix is already reduced, so this compares canonical forms.
    return h == GroupHom::identity(h.domain());
}

std::string to_string(const GroupHom& h)
{
    return to_string(h.domain()) + " -> " + to_string(h.codomain()) + " " + to_string(h.matrix());
}

} // namespace varhom
