#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

std::vector<Partition> naive_enumerate(const HilbertFunction& T)
{
    std::vector<Partition> out;
    for_each_partition(T.n(), [&](const Partition& p) {
        std::map<int, int> cnt;
        for (std::size_t r = 0; r < p.size(); ++r)
            for (int c = 0; c < p[r]; ++c)
                ++cnt[static_cast<int>(r) + c];
        std::vector<int> t;
        for (auto& [d, k] : cnt) {
            if (d != static_cast<int>(t.size()))
                return;
            t.push_back(k);
        }
        if (t == T.t)
            out.push_back(p);
    });
    return out;
}

namespace {

bool in_cobasis(const Partition& p, int x, int y)
{
    return x >= 0 && y >= 0 && y < static_cast<int>(p.size()) && x < p[static_cast<std::size_t>(y)];
}

} // namespace

std::vector<MonomialPair> naive_S(const Partition& p)
{
    std::vector<MonomialPair> out;
    int top = weight(p) + 2;
    for (int deg = 0; deg <= top; ++deg)
        for (int mx = 0; mx <= deg; ++mx) {
            int my = deg - mx;
            // mu in E, (mu : y) not in E
            if (in_cobasis(p, mx, my))
                continue;
            bool colon_in_E = my == 0 ? true : !in_cobasis(p, mx, my - 1);
            if (colon_in_E)
                continue;
            for (int nx = 0; nx <= deg; ++nx) {
                int ny = deg - nx;
                if (!in_cobasis(p, nx, ny) || in_cobasis(p, nx + 1, ny))
                    continue;
                if (!(ny < my)) // mu < nu
                    continue;
                out.push_back({Monomial{mx, my}, Monomial{nx, ny}});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

HookCode naive_code(const Partition& p)
{
    HilbertFunction T = diagonal_lengths(p);
    int rows = static_cast<int>(p.size());
    auto len = [&](int r) { return r < rows ? p[static_cast<std::size_t>(r)] : 0; };
    auto col = [&](int c) {
        int n = 0;
        while (n < rows && len(n) > c)
            ++n;
        return n;
    };
    HookCode d{T.mu(), T.j(), {}};
    for (int i = T.mu(); i <= T.j(); ++i) {
        std::vector<int> counts; // rows whose hand has degree i, top to bottom
        for (int r = 0; r < rows; ++r) {
            if (r + len(r) - 1 != i)
                continue;
            int k = 0;
            for (int c = 0; c < len(r); ++c)
                if ((len(r) - c) - (col(c) - r) == 1)
                    ++k;
            counts.push_back(k);
        }
        counts.resize(static_cast<std::size_t>(T.delta(i + 1)), 0);
        d.qs.push_back(counts);
    }
    return d;
}

IntPoly box_count(int rows, int cols)
{
    IntPoly out(static_cast<std::size_t>(rows * cols) + 1, 0);
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            int w = 0;
            for (int x : cur)
                w += x;
            ++out[static_cast<std::size_t>(w)];
            return;
        }
        for (int k = 0; k <= maxp; ++k) {
            cur.push_back(k);
            rec(left - 1, k);
            cur.pop_back();
        }
    };
    rec(rows, cols);
    return out;
}

long long hook_length_degree(int d, int n)
{
    int c = n - d, N = d * c;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(N));
    mpz_class den = 1;
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < c; ++k)
            den *= (c - k) + (d - r) - 1;
    return mpz_class(num / den).get_si();
}

namespace {

using Hom = std::vector<Q>; // index k multiplies x^{m-k} y^k

Hom dx(const Hom& f)
{
    int m = static_cast<int>(f.size()) - 1;
    if (m <= 0)
        return Hom{Q(0)};
    Hom g(static_cast<std::size_t>(m), Q(0));
    for (int k = 0; k < m; ++k)
        g[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * (m - k);
    return g;
}

Hom dy(const Hom& f)
{
    int m = static_cast<int>(f.size()) - 1;
    if (m <= 0)
        return Hom{Q(0)};
    Hom g(static_cast<std::size_t>(m), Q(0));
    for (int k = 1; k <= m; ++k)
        g[static_cast<std::size_t>(k - 1)] = f[static_cast<std::size_t>(k)] * k;
    return g;
}

Hom hmul(const Hom& a, const Hom& b)
{
    Hom r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            r[i + k] += a[i] * b[k];
    return r;
}

Q eval_hom(const Hom& f, const Q& x, const Q& y)
{
    int m = static_cast<int>(f.size()) - 1;
    Q s = 0;
    for (int k = 0; k <= m; ++k) {
        Q t = f[static_cast<std::size_t>(k)];
        for (int e = 0; e < m - k; ++e)
            t *= x;
        for (int e = 0; e < k; ++e)
            t *= y;
        s += t;
    }
    return s;
}

} // namespace

Q eval(const std::vector<Q>& f, const Q& x, const Q& y) { return eval_hom(f, x, y); }

BinaryForm homogeneous_wronskian(const FormSpace& v)
{
    int d = v.dim(), j = v.degree, N = d * (j + 1 - d);
    std::vector<std::vector<Hom>> m(static_cast<std::size_t>(d), std::vector<Hom>(static_cast<std::size_t>(d)));
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
            Hom f = v.basis[static_cast<std::size_t>(r)];
            for (int a = 0; a < d - 1 - k; ++a)
                f = dx(f);
            for (int b = 0; b < k; ++b)
                f = dy(f);
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = f;
        }
    // Leibniz expansion
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    Hom total(static_cast<std::size_t>(N) + 1, Q(0));
    do {
        int inv = 0;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inv;
        Hom prod{Q(1)};
        for (int r = 0; r < d; ++r)
            prod = hmul(prod, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]);
        if (prod.size() != total.size())
            continue; // a zero derivative collapsed the degree
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += (inv % 2 ? -prod[k] : prod[k]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return normalize(BinaryForm{N, total});
}

std::vector<int> derivative_degree_sequence(const FormSpace& v, const PointP1& p)
{
    int j = v.degree, d = v.dim();
    Q px = p.b, py = -p.a; // zero of a x + b y
    auto dim_divisible = [&](int m) {
        // combinations c with all derivatives of order < m of sum c_r f_r vanishing at the point
        Matrix conds;
        for (int ord = 0; ord < m; ++ord)
            for (int k = 0; k <= ord; ++k) {
                Row row;
                for (int r = 0; r < d; ++r) {
                    Hom f = v.basis[static_cast<std::size_t>(r)];
                    for (int a = 0; a < ord - k; ++a)
                        f = dx(f);
                    for (int b = 0; b < k; ++b)
                        f = dy(f);
                    row.push_back(eval_hom(f, px, py));
                }
                conds.push_back(row);
            }
        return d - static_cast<int>(rank(conds));
    };
    std::vector<int> n;
    int prev = d;
    for (int m = 1; m <= j + 1; ++m) {
        int cur = m > j ? 0 : dim_divisible(m);
        for (int k = 0; k < prev - cur; ++k)
            n.push_back(m - 1);
        prev = cur;
    }
    return n;
}

bool proportional(const BinaryForm& a, const BinaryForm& b)
{
    return a.degree == b.degree && normalize(a) == normalize(b);
}

} // namespace oracle

namespace support {

using oracle::eval;

Q Rng::rational(long num, long den)
{
    Q q(range(-num, num), range(1, den));
    q.canonicalize();
    return q;
}

FormSpace random_space(Rng& rng, int d, int j)
{
    for (;;) {
        Matrix rows(static_cast<std::size_t>(d), Row(static_cast<std::size_t>(j) + 1));
        for (auto& r : rows)
            for (auto& e : r)
                e = rng.rational();
        if (rank(rows) == static_cast<std::size_t>(d))
            return make_space(j, rows);
    }
}

FormSpace ramified_space(Rng& rng, int j, const std::vector<int>& n, const PointP1& p)
{
    BinaryForm L{1, {p.a, p.b}};
    for (;;) {
        std::vector<BinaryForm> forms;
        for (int m : n) {
            BinaryForm f{0, {Q(1)}};
            for (int k = 0; k < m; ++k)
                f = form_mul(f, L);
            BinaryForm g{j - m, std::vector<Q>(static_cast<std::size_t>(j - m) + 1)};
            do
                for (auto& c : g.coeffs)
                    c = rng.rational();
            while (eval(g.coeffs, p.b, -p.a) == 0); // g must not vanish at p
            forms.push_back(form_mul(f, g));
        }
        Matrix rows;
        for (auto& f : forms)
            rows.push_back(f.coeffs);
        if (rank(rows) == n.size())
            return make_space(forms);
    }
}

CellParams random_params(Rng& rng, const Partition& p)
{
    CellParams cp{p, {}};
    for (auto& s : pair_set_S(MonomialIdeal{p}))
        cp.values[s] = rng.rational();
    return cp;
}

std::vector<Q> secant_sample(Rng& rng, int j, int r)
{
    std::vector<Q> a(static_cast<std::size_t>(j) + 1, Q(0));
    std::set<Q> used;
    bool with_y = r > 0 && rng.range(0, 3) == 0;
    int finite = with_y ? r - 1 : r;
    for (int k = 0; k < finite; ++k) {
        Q t;
        do
            t = rng.rational(6, 3);
        while (used.count(t));
        used.insert(t);
        Q lam;
        do
            lam = rng.rational(5, 2);
        while (sgn(lam) == 0);
        Q pw = 1;
        for (int i = 0; i <= j; ++i) {
            a[static_cast<std::size_t>(i)] += lam * pw;
            pw *= t;
        }
    }
    if (with_y)
        a[static_cast<std::size_t>(j)] += 1;
    return a;
}

BinaryForm substitute(const BinaryForm& f, const Q& a, const Q& b, const Q& c, const Q& d)
{
    BinaryForm u{1, {a, b}}, v{1, {c, d}};
    BinaryForm out{f.degree, std::vector<Q>(static_cast<std::size_t>(f.degree) + 1, Q(0))};
    for (int k = 0; k <= f.degree; ++k) {
        BinaryForm term{0, {f.coeffs[static_cast<std::size_t>(k)]}};
        for (int e = 0; e < f.degree - k; ++e)
            term = form_mul(term, u);
        for (int e = 0; e < k; ++e)
            term = form_mul(term, v);
        for (std::size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += term.coeffs[i];
    }
    return out;
}

std::vector<GradedIdeal> split_ideals(Rng& rng, const HilbertFunction& T, int want, int tries)
{
    std::vector<GradedIdeal> out;
    std::set<std::vector<std::vector<Q>>> seen;
    auto cells = enumerate_with_diagonal_lengths(T);
    for (int t = 0; t < tries && static_cast<int>(out.size()) < want; ++t) {
        const Partition& p = cells[static_cast<std::size_t>(rng.range(0, static_cast<long>(cells.size()) - 1))];
        CellParams cp{p, {}};
        for (auto& s : pair_set_S(MonomialIdeal{p}))
            cp.values[s] = Q(rng.range(-2, 2));
        GradedIdeal I = build_ideal(cp);
        Q a = rng.range(-2, 2), b = rng.range(-2, 2), c = rng.range(-2, 2), d = rng.range(-2, 2);
        if (a * d - b * c == 0)
            continue;
        std::vector<BinaryForm> gens;
        for (auto& g : I.generators)
            gens.push_back(substitute(g, a, b, c, d));
        GradedIdeal J = make_ideal(gens);
        if (!(J.T == T))
            continue;
        std::vector<std::vector<Q>> key;
        for (int i = T.mu(); i <= T.j(); ++i)
            for (auto& r : J.piece(i).basis)
                key.push_back(r);
        if (seen.count(key))
            continue;
        bool split = true;
        for (int i = T.mu(); i <= T.j() && split; ++i)
            split = total_ramification_check(J.piece(i)).irrational_degree == 0;
        if (!split)
            continue;
        seen.insert(key);
        out.push_back(J);
    }
    return out;
}

SplitCheck ramification_sum(const GradedIdeal& I)
{
    SplitCheck sc;
    std::set<PointP1> points;
    for (int i = I.T.mu(); i <= I.T.j(); ++i) {
        RamCheck rc = total_ramification_check(I.piece(i));
        if (rc.irrational_degree != 0)
            return sc;
        for (auto& [p, m] : rc.rational_point_valuations)
            points.insert(p);
    }
    sc.split = true;
    for (auto& p : points)
        for (auto& q : qram_ideal(I, p))
            sc.total += weight(q);
    return sc;
}

} // namespace support
