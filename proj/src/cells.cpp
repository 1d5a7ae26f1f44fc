#include "hilbcells/cells.hpp"
#include "hilbcells/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hilbcells {

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.y > b.y;
}

std::string to_string(const Monomial& m)
{
    return "x^" + std::to_string(m.x) + " y^" + std::to_string(m.y);
}

Monomial parse_monomial(const std::string& s)
{
    Monomial m;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (ch == '1' && !any) {
            ++i;
            any = true;
            continue;
        }
        if (ch != 'x' && ch != 'y')
            fail("MalformedE", "cannot read monomial '" + s + "'");
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (st == i)
                fail("MalformedE", "cannot read monomial '" + s + "'");
            e = std::stoi(s.substr(st, i - st));
        }
        (ch == 'x' ? m.x : m.y) += e;
        any = true;
    }
    if (!any)
        fail("MalformedE", "empty monomial");
    return m;
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return !contains_cell(partition, m.y, m.x);
}

std::vector<Monomial> MonomialIdeal::generators() const
{
    std::vector<Monomial> g;
    int rows = static_cast<int>(partition.size());
    // corners: x^{p_r} y^r where row r is strictly longer than row r+... read from the columns
    for (int r = 0; r <= rows; ++r) {
        int len = row_length(partition, r);
        if (r == 0 || len < row_length(partition, r - 1))
            g.push_back(Monomial{len, r});
    }
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<Monomial> MonomialIdeal::cobasis() const
{
    std::vector<Monomial> c;
    for (int r = 0; r < static_cast<int>(partition.size()); ++r)
        for (int k = 0; k < partition[static_cast<std::size_t>(r)]; ++k)
            c.push_back(Monomial{k, r});
    std::sort(c.begin(), c.end());
    return c;
}

bool operator<(const MonomialPair& a, const MonomialPair& b)
{
    if (a.mu.degree() != b.mu.degree())
        return a.mu.degree() < b.mu.degree();
    if (!(a.mu == b.mu))
        return a.mu < b.mu;
    return a.nu < b.nu;
}

std::vector<MonomialPair> pair_set_S(const MonomialIdeal& e, int degree)
{
    std::vector<MonomialPair> out;
    const Partition& p = e.partition;
    for (auto& h : hooks(p)) {
        if (h.difference() != 1 || (degree >= 0 && h.hand_degree != degree))
            continue;
        Monomial mu{h.col, col_length(p, h.col)};
        Monomial nu{row_length(p, h.row) - 1, h.row};
        out.push_back({mu, nu});
    }
    std::sort(out.begin(), out.end());
    return out;
}

WSets pair_set_W(const MonomialIdeal& e)
{
    // pairs whose monomials bound a common hook: the foot side below column c
    // against the hand of a row crossing it, and symmetrically
    WSets w;
    const Partition& p = e.partition;
    for (auto& h : hooks(p)) {
        Monomial below{h.col, col_length(p, h.col)};
        Monomial hand{row_length(p, h.row) - 1, h.row};
        if (below.degree() < hand.degree())
            w.plus.push_back({below, hand});
        Monomial right{row_length(p, h.row), h.row};
        Monomial foot{h.col, col_length(p, h.col) - 1};
        if (right.degree() < foot.degree())
            w.minus.push_back({right, foot});
    }
    std::sort(w.plus.begin(), w.plus.end());
    std::sort(w.minus.begin(), w.minus.end());
    w.w = static_cast<int>(w.plus.size() + w.minus.size());
    return w;
}

CellDims dims(const MonomialIdeal& e)
{
    TInvariants inv = t_invariants(e.T());
    CellDims d{};
    d.dim_V = static_cast<int>(pair_set_S(e).size());
    d.codim_V = count_hooks_diff(e.partition, -1);
    d.z_E = inv.n - static_cast<long>(pair_set_S(e.dual()).size()) - count_hooks_diff(e.partition, 0);
    d.v_E = d.z_E - inv.f_T;
    if (d.v_E != d.dim_V)
        fail("InconsistentParams", "cell dimension formulas disagree for " + to_string(e.partition));
    return d;
}

MonomialIdeal big_cell(const HilbertFunction& T)
{
    for (auto& p : enumerate_with_diagonal_lengths(T)) {
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] == p[i + 1])
                distinct = false;
        if (distinct)
            return MonomialIdeal{p};
    }
    fail("NotFound", "no distinct-parts partition for T");
}

const FormSpace& GradedIdeal::piece(int d) const
{
    if (d < 0)
        fail("OutOfRange", "negative degree");
    if (d >= static_cast<int>(pieces.size()))
        fail("OutOfRange", "degree beyond the stored pieces");
    return pieces[static_cast<std::size_t>(d)];
}

namespace {

Matrix reduce_low_x(Matrix rows)
{
    for (auto& r : rows)
        std::reverse(r.begin(), r.end());
    rref(rows);
    for (auto& r : rows)
        std::reverse(r.begin(), r.end());
    return rows;
}

Row times_x(const Row& r)
{
    Row o = r;
    o.push_back(Q(0));
    return o;
}

Row times_y(const Row& r)
{
    Row o;
    o.push_back(Q(0));
    o.insert(o.end(), r.begin(), r.end());
    return o;
}

HilbertFunction hilbert_of(const std::vector<FormSpace>& pieces)
{
    HilbertFunction T;
    for (std::size_t d = 0; d < pieces.size(); ++d)
        T.t.push_back(static_cast<int>(d) + 1 - pieces[d].dim());
    while (!T.t.empty() && T.t.back() == 0)
        T.t.pop_back();
    return T;
}

} // namespace

GradedIdeal make_ideal(const std::vector<BinaryForm>& gens, int max_degree)
{
    GradedIdeal I;
    for (auto& g : gens)
        if (!g.is_zero())
            I.generators.push_back(g);
    Matrix prev;
    for (int d = 0; d <= max_degree; ++d) {
        Matrix rows;
        for (auto& r : prev) {
            rows.push_back(times_x(r));
            rows.push_back(times_y(r));
        }
        for (auto& g : I.generators)
            if (g.degree == d)
                rows.push_back(g.coeffs);
        Matrix red = reduce_low_x(std::move(rows));
        I.pieces.push_back(FormSpace{d, red});
        prev = std::move(red);
        if (static_cast<int>(prev.size()) == d + 1) {
            I.T = hilbert_of(I.pieces);
            return I;
        }
    }
    fail("NotAnIdeal", "ideal does not reach finite colength");
}

namespace {

// Affine expression: index 0 constant, index u the u-th unknown.
using Affine = std::vector<Q>;

bool is_zero(const Affine& a)
{
    for (auto& e : a)
        if (sgn(e) != 0)
            return false;
    return true;
}

} // namespace

GradedIdeal build_ideal(const CellParams& params)
{
    if (!is_partition(params.partition))
        fail("MalformedE", "not a partition: " + to_string(params.partition));
    MonomialIdeal E{params.partition};
    HilbertFunction T = E.T();
    auto S = pair_set_S(E);
    if (S.size() != params.values.size())
        fail("InconsistentParams", "parameters must be keyed exactly by S(E)");
    for (auto& s : S)
        if (!params.values.count(s))
            fail("InconsistentParams", "missing parameter for (" + to_string(s.mu) + ", " + to_string(s.nu) + ")");

    const Partition& P = params.partition;
    if (P.empty())
        return make_ideal({BinaryForm{0, {Q(1)}}});
    int p = P[0];
    std::vector<int> q(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i <= p; ++i)
        q[static_cast<std::size_t>(i)] = col_length(P, i);

    // f[i] = f(beta_i) with beta_i = x^i y^{q_i}; coefficient index is the power of y
    std::vector<Row> f(static_cast<std::size_t>(p) + 1);
    f[static_cast<std::size_t>(p)] = Row(static_cast<std::size_t>(p) + 1, Q(0));
    f[static_cast<std::size_t>(p)][0] = 1;
    for (int i = p - 1; i >= 0; --i) {
        int qi = q[static_cast<std::size_t>(i)];
        int D = i + qi;
        std::vector<Monomial> unknowns;
        std::vector<std::pair<Monomial, Q>> given;
        for (int a = i + 1; a <= D; ++a) {
            Monomial nu{a, D - a};
            if (E.contains(nu))
                continue;
            if (E.contains(Monomial{a + 1, D - a}))
                given.push_back({nu, params.values.at(MonomialPair{Monomial{i, qi}, nu})});
            else
                unknowns.push_back(nu);
        }
        std::size_t U = unknowns.size();
        std::vector<Affine> fa(static_cast<std::size_t>(D) + 1, Affine(U + 1, Q(0)));
        fa[static_cast<std::size_t>(qi)][0] = 1;
        for (auto& [nu, v] : given)
            fa[static_cast<std::size_t>(nu.y)][0] = -v;
        for (std::size_t u = 0; u < U; ++u)
            fa[static_cast<std::size_t>(unknowns[u].y)][u + 1] = 1;

        // reduce x f(beta_i) by f(beta_{i+1}), ..., f(beta_p); terms ordered by power of x
        int G = D + 1;
        std::vector<Affine> g(static_cast<std::size_t>(G) + 1, Affine(U + 1, Q(0)));
        for (int k = 0; k <= D; ++k)
            g[static_cast<std::size_t>(k)] = fa[static_cast<std::size_t>(k)];
        Matrix eqs;
        Row rhs;
        for (int a = i + 1; a <= G; ++a) {
            int b = G - a;
            Affine c = g[static_cast<std::size_t>(b)];
            if (is_zero(c))
                continue;
            if (!E.contains(Monomial{a, b})) {
                eqs.push_back(Row(c.begin() + 1, c.end()));
                rhs.push_back(-c[0]);
                continue;
            }
            int k = std::min(a, p);
            int shift_y = b - q[static_cast<std::size_t>(k)];
            const Row& fk = f[static_cast<std::size_t>(k)];
            for (std::size_t t = 0; t < fk.size(); ++t) {
                if (sgn(fk[t]) == 0)
                    continue;
                std::size_t idx = t + static_cast<std::size_t>(shift_y);
                for (std::size_t u = 0; u <= U; ++u)
                    g[idx][u] -= c[u] * fk[t];
            }
        }
        Row z(U, Q(0));
        if (U > 0 || !eqs.empty()) {
            bool unique = true;
            if (U == 0) {
                for (auto& r : rhs)
                    if (sgn(r) != 0)
                        fail("InconsistentParams", "reduction leaves a nonzero remainder");
            } else if (!solve(eqs, rhs, z, unique) || !unique) {
                fail("InconsistentParams", "forced coefficients are not determined");
            }
        }
        Row fi(static_cast<std::size_t>(D) + 1, Q(0));
        for (int k = 0; k <= D; ++k) {
            const Affine& e = fa[static_cast<std::size_t>(k)];
            Q v = e[0];
            for (std::size_t u = 0; u < U; ++u)
                v += e[u + 1] * z[u];
            fi[static_cast<std::size_t>(k)] = v;
        }
        f[static_cast<std::size_t>(i)] = std::move(fi);
    }
    std::vector<BinaryForm> gens;
    for (int i = 0; i <= p; ++i) {
        Row& fi = f[static_cast<std::size_t>(i)];
        gens.push_back(BinaryForm{static_cast<int>(fi.size()) - 1, fi});
    }
    GradedIdeal I = make_ideal(gens);
    if (!(I.T == T))
        fail("InconsistentParams", "built ideal has the wrong Hilbert function");
    return I;
}

BinaryForm standard_generator(const GradedIdeal& I, const Monomial& beta)
{
    const FormSpace& v = I.piece(beta.degree());
    for (auto& r : v.basis) {
        int k = static_cast<int>(r.size()) - 1;
        while (k >= 0 && sgn(r[static_cast<std::size_t>(k)]) == 0)
            --k;
        if (k == beta.y)
            return BinaryForm{v.degree, r};
    }
    fail("NotFound", "no element with initial monomial " + to_string(beta));
}

MonomialIdeal initial_ideal(const GradedIdeal& I)
{
    return initial_ideal(I, make_point(Q(1), Q(0)));
}

MonomialIdeal initial_ideal(const GradedIdeal& I, const PointP1& p)
{
    int top = static_cast<int>(I.pieces.size()) - 1;
    if (top < 0 || I.pieces.back().dim() != top + 1)
        fail("NotAnIdeal", "top piece is not all of R_d");
    for (int d = 0; d < top; ++d) {
        Matrix rows = I.pieces[static_cast<std::size_t>(d) + 1].basis;
        std::size_t dim = rows.size();
        for (auto& r : I.pieces[static_cast<std::size_t>(d)].basis) {
            rows.push_back(times_x(r));
            rows.push_back(times_y(r));
        }
        if (rank(rows) != dim)
            fail("NotAnIdeal", "R_1 I_d is not inside I_{d+1} at d = " + std::to_string(d));
    }
    std::map<int, std::set<int>> cells; // row -> columns
    for (int d = 0; d <= top; ++d) {
        auto in = initial_space(I.pieces[static_cast<std::size_t>(d)], p);
        std::set<int> inset(in.xpows.begin(), in.xpows.end());
        for (int n = 0; n <= d; ++n)
            if (!inset.count(n))
                cells[d - n].insert(n);
    }
    Partition part;
    for (int r = 0; cells.count(r); ++r) {
        auto& cs = cells[r];
        int len = static_cast<int>(cs.size());
        if (*cs.rbegin() != len - 1 || (!part.empty() && len > part.back()))
            fail("NotAnIdeal", "initial monomials do not form a monomial ideal");
        part.push_back(len);
    }
    if (static_cast<int>(cells.size()) != static_cast<int>(part.size()))
        fail("NotAnIdeal", "initial monomials do not form a monomial ideal");
    return MonomialIdeal{part};
}

std::vector<Partition> qram_ideal(const GradedIdeal& I, const PointP1& p)
{
    std::vector<Partition> out;
    int mu = I.T.mu(), j = I.T.j();
    for (int i = mu; i <= j; ++i)
        out.push_back(ram_data(I.piece(i), p).qram);
    return out;
}

std::vector<Partition> qram_monomial_ideal(const MonomialIdeal& e)
{
    HilbertFunction T = e.T();
    std::vector<Partition> out;
    for (int i = T.mu(); i <= T.j(); ++i) {
        std::vector<int> n;
        for (int a = 0; a <= i; ++a)
            if (e.contains(Monomial{a, i - a}))
                n.push_back(a);
        out.push_back(ram_data_from_sequence(i, n).qram);
    }
    return out;
}

std::vector<SmallGrassCoord> small_grass_coords(const GradedIdeal& I)
{
    HilbertFunction T = I.T;
    MonomialIdeal E0 = big_cell(T);
    if (!(initial_ideal(I) == E0))
        fail("NotInBigCell", "initial ideal is not the big cell");
    std::vector<SmallGrassCoord> out;
    for (int i = T.mu(); i <= T.j(); ++i) {
        auto cob = [&](const Monomial& m) { return m.x >= 0 && m.y >= 0 && !E0.contains(m); };
        std::set<int> shadow, uset;
        for (int a = 0; a <= i; ++a) {
            bool sh = (a > 0 && cob(Monomial{a - 1, i - a})) || (i - a > 0 && cob(Monomial{a, i - a - 1}));
            if (sh)
                shadow.insert(a);
            if (cob(Monomial{a + 1, i - a}))
                uset.insert(a);
        }
        SmallGrassCoord sg{i, {}, {}, {}};
        std::vector<int> vcols; // x-powers of the V_i basis
        for (int a : shadow)
            if (!uset.count(a)) {
                vcols.push_back(a);
                sg.columns.push_back(Monomial{a, i - a});
            }
        std::sort(sg.columns.begin(), sg.columns.end());
        std::sort(vcols.begin(), vcols.end(), [&](int l, int r) { return Monomial{l, i - l} < Monomial{r, i - r}; });
        for (int a : vcols)
            if (cob(Monomial{a, i - a}))
                sg.rows.push_back(Monomial{a, i - a});

        // I_i meets the span of the shadow
        const Matrix& B = I.piece(i).basis;
        std::size_t k = B.size();
        Matrix outside; // transpose restricted to non-shadow columns
        for (int a = 0; a <= i; ++a) {
            if (shadow.count(a))
                continue;
            Row col;
            for (std::size_t r = 0; r < k; ++r)
                col.push_back(B[r][static_cast<std::size_t>(i - a)]);
            outside.push_back(col);
        }
        Matrix combos = outside.empty() ? Matrix{} : nullspace(outside, k);
        if (outside.empty())
            for (std::size_t r = 0; r < k; ++r) {
                Row e(k, Q(0));
                e[r] = 1;
                combos.push_back(e);
            }
        Matrix G;
        for (auto& cmb : combos) {
            Row v;
            for (int a : vcols) {
                Q s = 0;
                for (std::size_t r = 0; r < k; ++r)
                    s += cmb[r] * B[r][static_cast<std::size_t>(i - a)];
                v.push_back(s);
            }
            G.push_back(v);
        }
        rref(G);
        // annihilator of G_i inside the dual of V_i, pivots on the W_i monomials
        Matrix ann = nullspace(G, vcols.size());
        std::vector<std::size_t> order;
        for (std::size_t c = 0; c < vcols.size(); ++c)
            if (cob(Monomial{vcols[c], i - vcols[c]}))
                order.push_back(c);
        for (std::size_t c = 0; c < vcols.size(); ++c)
            if (!cob(Monomial{vcols[c], i - vcols[c]}))
                order.push_back(c);
        Matrix perm;
        for (auto& r : ann) {
            Row pr;
            for (auto c : order)
                pr.push_back(r[c]);
            perm.push_back(pr);
        }
        rref(perm);
        for (auto& pr : perm) {
            Row r(vcols.size(), Q(0));
            for (std::size_t c = 0; c < order.size(); ++c)
                r[order[c]] = pr[c];
            sg.matrix.push_back(r);
        }
        out.push_back(std::move(sg));
    }
    return out;
}

} // namespace hilbcells
