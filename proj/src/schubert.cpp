#include "hilbcells/schubert.hpp"
#include "hilbcells/errors.hpp"
#include "hilbcells/linalg.hpp"

#include <algorithm>
#include <functional>

namespace hilbcells {

SchubertClass SchubertClass::basis(int rows, int cols, const Partition& p, long long coeff)
{
    SchubertClass s{rows, cols, {}};
    Partition q = normalized(p);
    if (fits_box(q, rows, cols) && coeff != 0)
        s.terms[q] = coeff;
    return s;
}

long long SchubertClass::coeff(const Partition& p) const
{
    auto it = terms.find(normalized(p));
    return it == terms.end() ? 0 : it->second;
}

namespace {

bool contains(const Partition& big, const Partition& small)
{
    if (small.size() > big.size())
        return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i])
            return false;
    return true;
}

// Partitions of weight w inside rows x cols.
void box_shapes(int rows, int cols, int w, Partition& cur, std::vector<Partition>& out)
{
    if (w == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == rows)
        return;
    int maxp = std::min(cur.empty() ? cols : cur.back(), w);
    for (int k = maxp; k >= 1; --k) {
        cur.push_back(k);
        box_shapes(rows, cols, w - k, cur, out);
        cur.pop_back();
    }
}

} // namespace

long long lr_coefficient(const Partition& lambda0, const Partition& mu0, const Partition& nu0)
{
    Partition lambda = normalized(lambda0), mu = normalized(mu0), nu = normalized(nu0);
    if (weight(nu) != weight(lambda) + weight(mu) || !contains(nu, lambda) || !contains(nu, mu))
        return 0;
    if (nu.empty())
        return 1;
    int nrows = static_cast<int>(nu.size());
    auto lam = [&](int r) { return r < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(r)] : 0; };
    std::vector<std::vector<int>> grid(nu.size(), std::vector<int>(static_cast<std::size_t>(nu[0]), 0));
    std::vector<int> content(mu.size() + 1, 0);
    long long count = 0;

    // reading order: rows top to bottom, right to left inside a row
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (c < lam(r)) {
            if (r + 1 == nrows)
                ++count;
            else
                fill(r + 1, nu[static_cast<std::size_t>(r + 1)] - 1);
            return;
        }
        auto& row = grid[static_cast<std::size_t>(r)];
        int hi = static_cast<int>(mu.size());
        if (c + 1 < nu[static_cast<std::size_t>(r)])
            hi = row[static_cast<std::size_t>(c + 1)];
        int lo = 1;
        if (r > 0 && c >= lam(r - 1))
            lo = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            std::size_t vi = static_cast<std::size_t>(v);
            if (content[vi] + 1 > mu[vi - 1])
                continue;
            if (v > 1 && content[vi] + 1 > content[vi - 1])
                continue;
            ++content[vi];
            row[static_cast<std::size_t>(c)] = v;
            fill(r, c - 1);
            row[static_cast<std::size_t>(c)] = 0;
            --content[vi];
        }
    };
    fill(0, nu[0] - 1);
    return count;
}

SchubertClass lr_multiply(const SchubertClass& x, const SchubertClass& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        fail("BoxMismatch", "Schubert classes live in different boxes");
    SchubertClass out{x.rows, x.cols, {}};
    for (auto& [l, a] : x.terms)
        for (auto& [m, b] : y.terms) {
            std::vector<Partition> shapes;
            Partition cur;
            box_shapes(x.rows, x.cols, weight(l) + weight(m), cur, shapes);
            for (auto& nu : shapes) {
                long long c = lr_coefficient(l, m, nu);
                if (c != 0)
                    out.terms[nu] += a * b * c;
            }
        }
    std::erase_if(out.terms, [](auto& kv) { return kv.second == 0; });
    return out;
}

SchubertClass pieri_multiply(const SchubertClass& x, int k)
{
    SchubertClass out{x.rows, x.cols, {}};
    for (auto& [l, a] : x.terms) {
        std::vector<Partition> shapes;
        Partition cur;
        box_shapes(x.rows, x.cols, weight(l) + k, cur, shapes);
        for (auto& nu : shapes) {
            if (!contains(nu, l))
                continue;
            // horizontal strip: nu_{i+1} <= lambda_i
            bool strip = true;
            for (std::size_t i = 0; i + 1 < nu.size(); ++i) {
                int li = i < l.size() ? l[i] : 0;
                if (nu[i + 1] > li)
                    strip = false;
            }
            if (strip)
                out.terms[nu] += a;
        }
    }
    std::erase_if(out.terms, [](auto& kv) { return kv.second == 0; });
    return out;
}

long long grass_degree(int d, int n)
{
    if (d < 1 || d > n)
        fail("OutOfRange", "grass_degree needs 1 <= d <= n");
    int cols = n - d;
    SchubertClass acc = SchubertClass::basis(d, cols, {});
    for (int k = 0; k < d * cols; ++k)
        acc = pieri_multiply(acc, 1);
    return acc.coeff(Partition(static_cast<std::size_t>(d), cols));
}

long long grass_degree_closed_form(int d, int n)
{
    int N = d * (n - d);
    mpz_class num, f;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(N));
    Q acc(num);
    for (int i = 0; i < d; ++i) {
        mpz_class a, b;
        mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n - d + i));
        Q r(a, b);
        r.canonicalize();
        acc *= r;
    }
    acc.canonicalize();
    return acc.get_num().get_si();
}

Q claimed_cover_degree(int d, int j)
{
    int N = d * (j + 1 - d);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(N));
    Q r = Q(f) / binomial(j, d);
    r.canonicalize();
    return r;
}

namespace {

void check_space(const MonomialSpace& e)
{
    for (std::size_t i = 0; i < e.xpows.size(); ++i) {
        if (e.xpows[i] < 0 || e.xpows[i] > e.degree)
            fail("MalformedE", "power of x outside [0, j]");
        if (i && e.xpows[i] <= e.xpows[i - 1])
            fail("MalformedE", "powers of x must be strictly increasing");
    }
}

} // namespace

Partition qram_of_monomial_space(const MonomialSpace& e)
{
    check_space(e);
    Partition q;
    for (std::size_t i = 0; i < e.xpows.size(); ++i)
        q.push_back(e.xpows[i] - static_cast<int>(i));
    std::sort(q.begin(), q.end(), std::greater<>());
    return q;
}

int total_ramification(const MonomialSpace& e)
{
    return weight(qram_of_monomial_space(e));
}

MonomialSpace swap_xy(const MonomialSpace& e)
{
    MonomialSpace s{e.degree, {}};
    for (int p : e.xpows)
        s.xpows.push_back(e.degree - p);
    std::sort(s.xpows.begin(), s.xpows.end());
    return s;
}

SchubertClass intersect_ramification(int d, int j, const std::vector<MonomialSpace>& conditions)
{
    if (d < 1 || d > j + 1)
        fail("DimensionMismatch", "need 1 <= d <= j+1");
    SchubertClass acc = SchubertClass::basis(d, j + 1 - d, {});
    for (auto& e : conditions) {
        if (e.degree != j || static_cast<int>(e.xpows.size()) != d)
            fail("DimensionMismatch", "condition is not a d-dimensional subspace of R_j");
        acc = lr_multiply(acc, SchubertClass::basis(d, j + 1 - d, qram_of_monomial_space(e)));
    }
    return acc;
}

} // namespace hilbcells
