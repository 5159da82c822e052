#include "polynomial.hpp"

#include <map>

#include "varhom/errors.hpp"

namespace varhom::detail {

void trim(IntPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

int degree(const IntPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

bool divide_exact(const IntPoly& dividend, const IntPoly& monic_divisor, IntPoly& quotient)
{
    const int db = degree(monic_divisor);
    if (db < 0 || monic_divisor.back() != 1)
        throw InvariantError("polynomial division needs a monic divisor");
    IntPoly r = dividend;
    trim(r);
    const int da = degree(r);
    if (da < db) {
        quotient.clear();
        return r.empty();
    }
    quotient.assign(da - db + 1, 0);
    for (int k = da; k >= db; --k) {
        const Integer c = r[k];
        if (sgn(c) == 0)
            continue;
        quotient[k - db] = c;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] -= c * monic_divisor[j];
    }
    trim(r);
    trim(quotient);
    return r.empty();
}

IntPoly cyclotomic(unsigned n)
{
    static std::map<unsigned, IntPoly> cache;
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        IntPoly q;
        if (!divide_exact(p, cyclotomic(d), q))
            throw InvariantError("cyclotomic recursion failed");
        p = std::move(q);
    }
    cache[n] = p;
    return p;
}

unsigned long euler_phi(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

IntPoly minimal_polynomial(const IntMatrix& a)
{
    if (!a.is_square())
        throw StructuralError("minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    const std::size_t len = n * n;

    // Gaussian elimination over Q on the flattened powers I, A, A^2, ...; each
    // stored row keeps its combination of powers so the first dependency
    // yields the minimal polynomial directly.
    struct Row {
        std::vector<mpq_class> v;
        std::vector<mpq_class> combo;
        std::size_t pivot;
    };
    std::vector<Row> basis;
    IntMatrix power = IntMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Row row;
        row.v.resize(len);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                row.v[i * n + j] = power(i, j);
        row.combo.assign(k + 1, 0);
        row.combo[k] = 1;
        for (const Row& b : basis) {
            if (sgn(row.v[b.pivot]) == 0)
                continue;
            mpq_class factor = row.v[b.pivot] / b.v[b.pivot];
            for (std::size_t t = 0; t < len; ++t)
                row.v[t] -= factor * b.v[t];
            for (std::size_t t = 0; t < b.combo.size(); ++t)
                row.combo[t] -= factor * b.combo[t];
        }
        std::size_t pivot = 0;
        while (pivot < len && sgn(row.v[pivot]) == 0)
            ++pivot;
        if (pivot == len) {
            IntPoly p(k + 1);
            for (std::size_t t = 0; t <= k; ++t) {
                row.combo[t].canonicalize();
                if (row.combo[t].get_den() != 1)
                    throw InvariantError("minimal polynomial is not integral");
                p[t] = row.combo[t].get_num();
            }
            return p;
        }
        row.pivot = pivot;
        basis.push_back(std::move(row));
        power = power * a;
    }
    throw InvariantError("no polynomial relation found up to degree n");
}

} // namespace varhom::detail
