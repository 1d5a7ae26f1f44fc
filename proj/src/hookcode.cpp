#include "hilbcells/hookcode.hpp"
#include "hilbcells/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hilbcells {

std::vector<Box> boxes(const HilbertFunction& T)
{
    require_admissible(T);
    std::vector<Box> out;
    for (int i = T.mu(); i <= T.j(); ++i)
        out.push_back(Box{T.delta(i + 1), 1 + T.delta(i)});
    return out;
}

int code_length(const HookCode& d)
{
    int s = 0;
    for (auto& q : d.qs)
        s += weight(q);
    return s;
}

bool fits(const HilbertFunction& T, const HookCode& d)
{
    auto bx = boxes(T);
    if (d.mu != T.mu() || d.j != T.j() || d.qs.size() != bx.size())
        return false;
    for (std::size_t k = 0; k < bx.size(); ++k) {
        auto& q = d.qs[k];
        if (static_cast<int>(q.size()) != bx[k].rows)
            return false;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] < 0 || q[i] > bx[k].cols)
                return false;
            if (i + 1 < q.size() && q[i] < q[i + 1])
                return false;
        }
    }
    return true;
}

HookCode code(const Partition& p)
{
    HilbertFunction T = diagonal_lengths(p, false);
    if (!is_admissible(T))
        fail("InvalidT", "diagonal lengths of " + to_string(p) + " are not admissible");
    HookCode d{T.mu(), T.j(), {}};
    // hands by degree: row -> number of difference-one hooks ending there
    std::map<int, std::map<int, int>> hands;
    for (int r = 0; r < static_cast<int>(p.size()); ++r)
        hands[r + p[static_cast<std::size_t>(r)] - 1][r] = 0;
    for (auto& h : hooks(p))
        if (h.difference() == 1)
            ++hands[h.hand_degree][h.row];
    for (int i = d.mu; i <= d.j; ++i) {
        int rows = T.delta(i + 1);
        Partition q;
        // ascending row = descending power of x
        for (auto& [r, cnt] : hands[i])
            q.push_back(cnt);
        // a hand on the y-axis row may appear beyond the box; it never carries a hook
        while (static_cast<int>(q.size()) > rows) {
            if (q.back() != 0)
                fail("NotFound", "unexpected hook count on extra hand of " + to_string(p));
            q.pop_back();
        }
        q.resize(static_cast<std::size_t>(rows), 0);
        d.qs.push_back(q);
    }
    return d;
}

namespace {

std::mutex table_mu;
std::map<HilbertFunction, std::map<HookCode, Partition>> tables;

} // namespace

Partition decode(const HilbertFunction& T, const HookCode& d)
{
    require_admissible(T);
    std::lock_guard<std::mutex> lock(table_mu);
    auto it = tables.find(T);
    if (it == tables.end()) {
        std::map<HookCode, Partition> tab;
        for (auto& p : enumerate_with_diagonal_lengths(T))
            tab[code(p)] = p;
        it = tables.emplace(T, std::move(tab)).first;
    }
    auto f = it->second.find(d);
    if (f == it->second.end())
        fail("NotFound", "no partition with code " + to_string(d));
    return f->second;
}

HookCode complement(const HilbertFunction& T, const HookCode& d)
{
    auto bx = boxes(T);
    if (!fits(T, d))
        fail("BoxMismatch", "code " + to_string(d) + " does not fit the boxes of T");
    HookCode out{d.mu, d.j, {}};
    for (std::size_t k = 0; k < bx.size(); ++k) {
        auto& q = d.qs[k];
        std::size_t rows = q.size();
        Partition c(rows);
        for (std::size_t i = 0; i < rows; ++i)
            c[i] = bx[k].cols - q[rows - 1 - i];
        out.qs.push_back(c);
    }
    return out;
}

namespace {

void box_partitions(int rows, int cols, Partition& cur, std::vector<Partition>& out)
{
    if (static_cast<int>(cur.size()) == rows) {
        out.push_back(cur);
        return;
    }
    int maxp = cur.empty() ? cols : cur.back();
    for (int k = maxp; k >= 0; --k) {
        cur.push_back(k);
        box_partitions(rows, cols, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<HookCode> all_codes(const HilbertFunction& T)
{
    auto bx = boxes(T);
    std::vector<HookCode> out{HookCode{T.mu(), T.j(), {}}};
    for (auto& b : bx) {
        std::vector<Partition> qs;
        Partition cur;
        box_partitions(b.rows, b.cols, cur, qs);
        std::vector<HookCode> next;
        for (auto& c : out)
            for (auto& q : qs) {
                HookCode e = c;
                e.qs.push_back(q);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

IntPoly gaussian_binomial(int a, int b)
{
    // p(a, b; n) by the recursion on the box: [a+b, a] = [a+b-1, a-1] + q^a [a+b-1, a]
    std::vector<std::vector<IntPoly>> memo(static_cast<std::size_t>(a) + 1,
                                           std::vector<IntPoly>(static_cast<std::size_t>(b) + 1));
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= b; ++y) {
            IntPoly& m = memo[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (x == 0 || y == 0) {
                m = {1};
                continue;
            }
            // partitions in an x-by-y box: those with fewer than x parts, plus x parts each >= 1
            IntPoly lhs = memo[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
            IntPoly rhs = memo[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
            m.assign(static_cast<std::size_t>(x * y) + 1, 0);
            for (std::size_t k = 0; k < lhs.size(); ++k)
                m[k] += lhs[k];
            for (std::size_t k = 0; k < rhs.size(); ++k)
                m[k + static_cast<std::size_t>(x)] += rhs[k];
        }
    return memo[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

IntPoly poincare(const HilbertFunction& T)
{
    IntPoly acc{1};
    for (auto& b : boxes(T)) {
        IntPoly g = gaussian_binomial(b.rows, b.cols);
        IntPoly sq(g.size() * 2 - 1, 0);
        for (std::size_t k = 0; k < g.size(); ++k)
            sq[2 * k] = g[k];
        acc = mul(acc, sq);
    }
    return acc;
}

long long cell_count(const HilbertFunction& T)
{
    long long b = 1;
    for (auto& bx : boxes(T))
        b *= binomial(bx.rows + bx.cols, bx.rows).get_num().get_si();
    return b;
}

std::string to_string(const HookCode& d)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < d.qs.size(); ++k) {
        Partition q = normalized(d.qs[k]);
        os << (k ? ", " : "") << "Q" << d.mu + static_cast<int>(k) << "=[";
        for (std::size_t i = 0; i < q.size(); ++i)
            os << (i ? "," : "") << q[i];
        os << "]";
    }
    return os.str();
}

} // namespace hilbcells
