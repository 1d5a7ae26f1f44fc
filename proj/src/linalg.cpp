#include "hilbcells/linalg.hpp"

#include <utility>

namespace hilbcells {

std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> piv;
    if (m.empty())
        return piv;
    std::size_t ncols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& e : m[r])
            e *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0)
                continue;
            Q f = m[i][c];
            for (std::size_t k = c; k < ncols; ++k)
                m[i][k] -= f * m[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

std::size_t rank(Matrix m)
{
    return rref(m).size();
}

Q determinant(Matrix m)
{
    std::size_t n = m.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            Q f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

Matrix nullspace(Matrix m, std::size_t ncols)
{
    for (auto& row : m)
        row.resize(ncols);
    auto piv = rref(m);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv)
        is_piv[c] = true;
    Matrix out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f])
            continue;
        Row v(ncols, Q(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

bool solve(const Matrix& a, const Row& b, Row& x, bool& unique)
{
    std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Row r = a[i];
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    x.assign(n, Q(0));
    auto piv = rref(aug);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n)
            return false;
        x[piv[r]] = aug[r][n];
    }
    unique = piv.size() == n;
    return true;
}

Q binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(z);
}

} // namespace hilbcells
