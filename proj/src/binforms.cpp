#include "hilbcells/binforms.hpp"
#include "hilbcells/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcells {

bool BinaryForm::is_zero() const
{
    for (auto& c : coeffs)
        if (sgn(c) != 0)
            return false;
    return true;
}

BinaryForm make_form(int degree, std::vector<Q> coeffs)
{
    if (degree < 0 || static_cast<int>(coeffs.size()) != degree + 1)
        fail("ShapeMismatch", "form of degree j needs j+1 coefficients");
    return BinaryForm{degree, std::move(coeffs)};
}

BinaryForm normalize(BinaryForm f)
{
    for (auto& c : f.coeffs)
        if (sgn(c) != 0) {
            Q s = 1 / c;
            for (auto& e : f.coeffs)
                e *= s;
            break;
        }
    return f;
}

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g)
{
    BinaryForm h{f.degree + g.degree, std::vector<Q>(static_cast<std::size_t>(f.degree + g.degree) + 1, Q(0))};
    for (std::size_t a = 0; a < f.coeffs.size(); ++a)
        for (std::size_t b = 0; b < g.coeffs.size(); ++b)
            h.coeffs[a + b] += f.coeffs[a] * g.coeffs[b];
    return h;
}

std::string to_string(const BinaryForm& f)
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= f.degree; ++k) {
        const Q& c = f.coeffs[static_cast<std::size_t>(k)];
        if (sgn(c) == 0)
            continue;
        int px = f.degree - k, py = k;
        std::string cs = c.get_str();
        bool unit = (px + py > 0) && (cs == "1" || cs == "-1");
        if (!first && cs[0] != '-')
            os << "+";
        if (unit)
            os << (cs == "-1" ? "-" : "");
        else
            os << cs;
        if (px > 0)
            os << "x" << (px > 1 ? "^" + std::to_string(px) : "");
        if (py > 0)
            os << "y" << (py > 1 ? "^" + std::to_string(py) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

PointP1 make_point(Q a, Q b)
{
    if (sgn(a) == 0 && sgn(b) == 0)
        fail("ZeroForm", "a point of P^1 needs (a, b) != (0, 0)");
    Q s = sgn(a) != 0 ? a : b;
    a /= s;
    b /= s;
    return PointP1{a, b};
}

std::string to_string(const PointP1& p)
{
    return p.a.get_str() + "," + p.b.get_str();
}

namespace {

// rref with pivots on the highest index (lowest power of the first variable).
Matrix reduce_reversed(Matrix rows)
{
    for (auto& r : rows)
        std::reverse(r.begin(), r.end());
    rref(rows);
    for (auto& r : rows)
        std::reverse(r.begin(), r.end());
    return rows;
}

// pivot power of the first variable for a row reduced by reduce_reversed
int valuation(const Row& r, int j)
{
    for (int k = j; k >= 0; --k)
        if (sgn(r[static_cast<std::size_t>(k)]) != 0)
            return j - k;
    return -1;
}

} // namespace

FormSpace make_space(int degree, const Matrix& rows)
{
    for (auto& r : rows)
        if (static_cast<int>(r.size()) != degree + 1)
            fail("ShapeMismatch", "basis row length must be j+1");
    Matrix red = reduce_reversed(rows);
    if (red.size() != rows.size())
        fail("DegenerateBasis", "basis rows are linearly dependent");
    return FormSpace{degree, std::move(red)};
}

FormSpace make_space(const std::vector<BinaryForm>& forms)
{
    if (forms.empty())
        fail("DegenerateBasis", "empty basis");
    Matrix rows;
    for (auto& f : forms) {
        if (f.degree != forms[0].degree)
            fail("ShapeMismatch", "forms of different degrees");
        rows.push_back(f.coeffs);
    }
    return make_space(forms[0].degree, rows);
}

BinaryForm basis_form(const FormSpace& v, int i)
{
    return BinaryForm{v.degree, v.basis[static_cast<std::size_t>(i)]};
}

std::pair<Q, Q> default_complement(const PointP1& p)
{
    if (sgn(p.a) != 0)
        return {Q(0), Q(1)};
    return {Q(1), Q(0)};
}

FormSpace change_basis(const FormSpace& v, const PointP1& p)
{
    return change_basis(v, p, default_complement(p));
}

namespace {

using Hom = std::vector<Q>; // homogeneous in (L, C): index k multiplies L^{m-k} C^k

Hom hmul(const Hom& a, const Hom& b)
{
    Hom r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            r[i + k] += a[i] * b[k];
    return r;
}

Hom hpow(const Hom& a, int e)
{
    Hom r{Q(1)};
    for (int i = 0; i < e; ++i)
        r = hmul(r, a);
    return r;
}

} // namespace

FormSpace change_basis(const FormSpace& v, const PointP1& p0, const std::pair<Q, Q>& complement)
{
    PointP1 p = make_point(p0.a, p0.b);
    const Q &a = p.a, &b = p.b, &c = complement.first, &d = complement.second;
    Q det = a * d - b * c;
    if (sgn(det) == 0)
        fail("DegenerateBasis", "complement is proportional to L_p");
    // x = (d L - b C)/det, y = (-c L + a C)/det
    Hom xs{d / det, -b / det};
    Hom ys{-c / det, a / det};
    int j = v.degree;
    std::vector<Hom> xp, yp;
    for (int e = 0; e <= j; ++e) {
        xp.push_back(hpow(xs, e));
        yp.push_back(hpow(ys, e));
    }
    Matrix rows;
    for (auto& row : v.basis) {
        Row out(static_cast<std::size_t>(j) + 1, Q(0));
        for (int k = 0; k <= j; ++k) {
            const Q& ck = row[static_cast<std::size_t>(k)];
            if (sgn(ck) == 0)
                continue;
            Hom t = hmul(xp[static_cast<std::size_t>(j - k)], yp[static_cast<std::size_t>(k)]);
            for (int m = 0; m <= j; ++m)
                out[static_cast<std::size_t>(m)] += ck * t[static_cast<std::size_t>(m)];
        }
        rows.push_back(std::move(out));
    }
    return FormSpace{j, reduce_reversed(std::move(rows))};
}

RamData ram_data_from_sequence(int j, const std::vector<int>& n)
{
    RamData rd;
    rd.degree_sequence = n;
    int d = static_cast<int>(n.size());
    for (int i = 0; i < d; ++i)
        rd.qram.push_back(n[static_cast<std::size_t>(i)] - i);
    std::sort(rd.qram.begin(), rd.qram.end(), std::greater<>());
    std::vector<int> comp;
    for (int m = 0, k = 0; m <= j; ++m) {
        if (k < d && n[static_cast<std::size_t>(k)] == m) {
            ++k;
            continue;
        }
        comp.push_back(m);
    }
    for (std::size_t i = 0; i < comp.size(); ++i)
        rd.q_partition.push_back(comp[i] - static_cast<int>(i));
    std::sort(rd.q_partition.begin(), rd.q_partition.end(), std::greater<>());
    rd.r = weight(rd.qram);

    // qram is the dual of the complement of Q(V,p) in its t x d box
    int t = static_cast<int>(rd.q_partition.size());
    Partition c(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        c[static_cast<std::size_t>(i)] = d - rd.q_partition[static_cast<std::size_t>(t - 1 - i)];
    Partition chk = dual(normalized(c));
    chk.resize(static_cast<std::size_t>(d), 0);
    if (chk != rd.qram)
        fail("DegenerateBasis", "ramification partitions disagree");
    return rd;
}

RamData ram_data(const FormSpace& v, const PointP1& p)
{
    return ram_data_from_sequence(v.degree, initial_space(v, p).xpows);
}

MonomialSpace initial_space(const FormSpace& v, const PointP1& p)
{
    FormSpace w = change_basis(v, p);
    MonomialSpace e{v.degree, {}};
    for (auto& r : w.basis)
        e.xpows.push_back(valuation(r, v.degree));
    std::sort(e.xpows.begin(), e.xpows.end());
    return e;
}

bool has_form_divisible_by_Ld(const FormSpace& v, const PointP1& p)
{
    FormSpace w = change_basis(v, p);
    int j = v.degree, d = v.dim();
    // f is divisible by L^d iff its coefficients on L^m C^{j-m}, m < d, vanish
    Matrix sub;
    for (auto& r : w.basis) {
        Row s;
        for (int m = 0; m < d && m <= j; ++m)
            s.push_back(r[static_cast<std::size_t>(j - m)]);
        sub.push_back(std::move(s));
    }
    if (sub.empty() || sub[0].empty())
        return true;
    return rank(sub) < static_cast<std::size_t>(d);
}

QPoly dehomogenize(const BinaryForm& f)
{
    std::vector<Q> c(static_cast<std::size_t>(f.degree) + 1, Q(0));
    for (int k = 0; k <= f.degree; ++k)
        c[static_cast<std::size_t>(f.degree - k)] = f.coeffs[static_cast<std::size_t>(k)];
    return QPoly(std::move(c));
}

namespace {

QPoly classical_wronskian(const std::vector<QPoly>& fs, int deg_bound)
{
    std::size_t d = fs.size();
    std::vector<std::vector<QPoly>> m(d, std::vector<QPoly>(d));
    for (std::size_t r = 0; r < d; ++r) {
        QPoly g = fs[r];
        for (std::size_t s = 0; s < d; ++s) {
            m[r][s] = g;
            g = g.derivative();
        }
    }
    return poly_determinant(m, deg_bound);
}

} // namespace

BinaryForm wronskian(const FormSpace& v)
{
    int j = v.degree, d = v.dim();
    if (d < 1)
        fail("DegenerateBasis", "empty space");
    if (rank(v.basis) != static_cast<std::size_t>(d))
        fail("DegenerateBasis", "basis rows are linearly dependent");
    int N = d * (j + 1 - d);
    std::vector<QPoly> fx, fy;
    for (int i = 0; i < d; ++i) {
        BinaryForm f = basis_form(v, i);
        fx.push_back(dehomogenize(f));
        fy.push_back(QPoly(f.coeffs)); // f(1, y)
    }
    QPoly wx = classical_wronskian(fx, d * j);
    QPoly wy = classical_wronskian(fy, d * j);
    if (wx.is_zero() || wy.is_zero() || wx.degree() > N || wy.degree() > N)
        fail("DegenerateBasis", "Wronskian vanishes or exceeds degree N");
    BinaryForm w{N, std::vector<Q>(static_cast<std::size_t>(N) + 1, Q(0))};
    for (int m = 0; m <= wx.degree(); ++m)
        w.coeffs[static_cast<std::size_t>(N - m)] = wx.coeff(m);
    // the chart x = 1 must give the same form up to scalar
    QPoly from_x(w.coeffs);
    Q s = wy.lead() / from_x.lead();
    if (!(s * from_x == wy))
        fail("DegenerateBasis", "Wronskian charts disagree");
    return normalize(w);
}

RamCheck total_ramification_check(const FormSpace& v)
{
    RamCheck rc;
    BinaryForm w = wronskian(v);
    rc.degree_W = w.degree;
    QPoly wx = dehomogenize(w);
    auto roots = rational_roots(wx);
    for (auto& [r, m] : roots.roots)
        rc.rational_point_valuations.push_back({make_point(Q(1), -r), m});
    int at_infinity = w.degree - wx.degree();
    if (at_infinity > 0)
        rc.rational_point_valuations.push_back({make_point(Q(0), Q(1)), at_infinity});
    std::sort(rc.rational_point_valuations.begin(), rc.rational_point_valuations.end());
    rc.irrational_degree = roots.residual_degree;
    rc.consistent = true;
    int total = rc.irrational_degree;
    for (auto& [p, m] : rc.rational_point_valuations) {
        int r = ram_data(v, p).r;
        rc.r_from_qram.push_back(r);
        if (r != m)
            rc.consistent = false;
        total += m;
    }
    if (total != rc.degree_W)
        rc.consistent = false;
    return rc;
}

} // namespace hilbcells
