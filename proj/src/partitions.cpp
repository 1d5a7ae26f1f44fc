#include "hilbcells/partitions.hpp"
#include "hilbcells/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hilbcells {

bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1)
            return false;
        if (i + 1 < p.size() && p[i] < p[i + 1])
            return false;
    }
    return true;
}

int weight(const Partition& p)
{
    int s = 0;
    for (int x : p)
        s += x;
    return s;
}

Partition dual(const Partition& p)
{
    Partition d;
    if (p.empty())
        return d;
    for (int c = 0; c < p[0]; ++c)
        d.push_back(col_length(p, c));
    return d;
}

int row_length(const Partition& p, int r)
{
    return r >= 0 && r < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(r)] : 0;
}

int col_length(const Partition& p, int c)
{
    int n = 0;
    for (int x : p)
        if (x > c)
            ++n;
    return n;
}

bool contains_cell(const Partition& p, int r, int c)
{
    return r >= 0 && c >= 0 && c < row_length(p, r);
}

bool fits_box(const Partition& p, int rows, int cols)
{
    if (static_cast<int>(p.size()) > rows)
        return false;
    for (int x : p)
        if (x > cols || x < 0)
            return false;
    return true;
}

Partition normalized(Partition p)
{
    std::sort(p.begin(), p.end(), std::greater<>());
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

std::string to_string(const Partition& p)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

int HilbertFunction::at(int i) const
{
    return i >= 0 && i < static_cast<int>(t.size()) ? t[static_cast<std::size_t>(i)] : 0;
}

int HilbertFunction::mu() const
{
    int i = 0;
    while (at(i) > i)
        ++i;
    return i;
}

int HilbertFunction::n() const
{
    int s = 0;
    for (int x : t)
        s += x;
    return s;
}

bool is_admissible(const HilbertFunction& T)
{
    int mu = T.mu();
    for (int i = 0; i < mu; ++i)
        if (T.at(i) != i + 1)
            return false;
    for (int i = mu; i <= T.j(); ++i) {
        if (T.at(i) <= 0)
            return false;
        if (T.at(i) > T.at(i - 1) && i > mu)
            return false;
    }
    return T.at(mu) <= mu;
}

void require_admissible(const HilbertFunction& T)
{
    if (!is_admissible(T)) {
        std::ostringstream os;
        os << "T = " << to_string(Partition(T.t.begin(), T.t.end())) << " violates the shape 1,2,..,mu,t_mu>=..>=t_j>0";
        fail("InvalidT", os.str());
    }
}

HilbertFunction diagonal_lengths(const Partition& p, bool check)
{
    HilbertFunction T;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) {
            std::size_t d = r + static_cast<std::size_t>(c);
            if (T.t.size() <= d)
                T.t.resize(d + 1, 0);
            ++T.t[d];
        }
    if (check && !is_admissible(T))
        fail("NonAdmissible", "diagonal lengths of " + to_string(p) + " are not admissible");
    return T;
}

std::vector<Hook> hooks(const Partition& p)
{
    std::vector<Hook> out;
    for (int r = 0; r < static_cast<int>(p.size()); ++r) {
        int L = p[static_cast<std::size_t>(r)];
        for (int c = 0; c < L; ++c)
            out.push_back(Hook{r, c, L - c, col_length(p, c) - r, r + L - 1});
    }
    return out;
}

int count_hooks_diff(const Partition& p, int a, int degree)
{
    int n = 0;
    for (auto& h : hooks(p))
        if (h.difference() == a && (degree < 0 || h.hand_degree == degree))
            ++n;
    return n;
}

namespace {

void gen(int rest, int maxp, Partition& cur, const std::function<void(const Partition&)>& fn)
{
    if (rest == 0) {
        fn(cur);
        return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
        cur.push_back(k);
        gen(rest - k, k, cur, fn);
        cur.pop_back();
    }
}

// Row-by-row generation keeping diagonal counts at or below T.
void gen_diag(const HilbertFunction& T, int r, int maxp, std::vector<int>& used, int rest,
              Partition& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        if (used == T.t)
            out.push_back(cur);
        return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
        bool ok = true;
        int c = 0;
        for (; c < k; ++c) {
            int d = r + c;
            if (d > T.j() || used[static_cast<std::size_t>(d)] + 1 > T.at(d)) {
                ok = false;
                break;
            }
            ++used[static_cast<std::size_t>(d)];
        }
        if (ok) {
            cur.push_back(k);
            gen_diag(T, r + 1, k, used, rest - k, cur, out);
            cur.pop_back();
        }
        for (int u = 0; u < c; ++u)
            --used[static_cast<std::size_t>(r + u)];
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn)
{
    Partition cur;
    gen(n, n, cur, fn);
}

std::vector<Partition> enumerate_with_diagonal_lengths(const HilbertFunction& T)
{
    require_admissible(T);
    std::vector<Partition> out;
    std::vector<int> used(T.t.size(), 0);
    Partition cur;
    gen_diag(T, 0, T.n(), used, T.n(), cur, out);
    return out;
}

std::vector<HilbertFunction> admissible_up_to(int nmax)
{
    std::set<HilbertFunction> seen;
    for (int n = 0; n <= nmax; ++n)
        for_each_partition(n, [&](const Partition& p) { seen.insert(diagonal_lengths(p, false)); });
    return {seen.begin(), seen.end()};
}

TInvariants t_invariants(const HilbertFunction& T)
{
    require_admissible(T);
    TInvariants r{};
    r.mu = T.mu();
    r.j = T.j();
    r.n = T.n();
    for (int i = 0; i <= r.j + 2; ++i)
        r.delta.push_back(T.delta(i));
    long sym = 0, gt = 0;
    for (int i = r.mu; i <= r.j + 2; ++i) {
        long d = T.delta(i), d1 = T.delta(i + 1);
        sym += d * (d + 1) / 2;
        gt += (d + 1) * d1;
    }
    r.dim_GT = gt;
    r.dim_ZT = r.n - sym;
    r.f_T = r.dim_ZT - gt;
    long bg = 0;
    for (int i = r.mu; i <= r.j; ++i)
        bg += static_cast<long>(T.at(i)) * (i + 1 - T.at(i));
    r.dim_BGrass = bg;
    return r;
}

} // namespace hilbcells
