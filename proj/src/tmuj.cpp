#include "hilbcells/tmuj.hpp"
#include "hilbcells/errors.hpp"
#include "hilbcells/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcells {

namespace {

long long binom(long n, long k)
{
    return binomial(n, k).get_num().get_si();
}

} // namespace

bool in_range(int mu, int a, int b)
{
    return a >= 0 && a <= mu - 1 && b >= 0 && b <= mu;
}

TClass TClass::basis(int mu, int j, int a, int b, long long coeff)
{
    TClass c{mu, j, {}};
    c.add(a, b, coeff);
    return c;
}

long long TClass::coeff(int a, int b) const
{
    auto it = terms.find({a, b});
    return it == terms.end() ? 0 : it->second;
}

void TClass::add(int a, int b, long long c)
{
    if (c == 0 || !in_range(mu, a, b))
        return;
    auto& e = terms[{a, b}];
    e += c;
    if (e == 0)
        terms.erase({a, b});
}

void AmbientClass::add(int u, int v, long long c)
{
    if (c == 0 || u < 0 || v < 0 || u > mu || v > j)
        return;
    auto& e = terms[{u, v}];
    e += c;
    if (e == 0)
        terms.erase({u, v});
}

TClass iota_pullback(const AmbientClass& x)
{
    TClass out{x.mu, x.j, {}};
    int mu = x.mu, e = x.j + 1 - x.mu;
    for (auto& [uv, c] : x.terms) {
        auto [u, v] = uv;
        if (u + v < mu) {
            out.add(u, v, c);
            continue;
        }
        for (int i = 0; i <= e; ++i)
            out.add(u + i - 1, v - i + 1, c * binom(e, i));
    }
    return out;
}

AmbientClass class_GT(int mu, int j)
{
    if (mu < 1 || j < mu)
        fail("OutOfRange", "need 1 <= mu <= j");
    AmbientClass g{mu, j, {}};
    int e = j + 1 - mu;
    for (int i = 0; i <= e; ++i)
        g.add(i, e - i, binom(e, i));
    return g;
}

AmbientClass ambient_multiply(const AmbientClass& x, const AmbientClass& y)
{
    if (x.mu != y.mu || x.j != y.j)
        fail("ShapeMismatch", "classes for different (mu, j)");
    AmbientClass out{x.mu, x.j, {}};
    for (auto& [p, c] : x.terms)
        for (auto& [q, d] : y.terms)
            out.add(p.first + q.first, p.second + q.second, c * d);
    return out;
}

AmbientClass iota_pushforward(const TClass& x)
{
    AmbientClass out{x.mu, x.j, {}};
    AmbientClass g = class_GT(x.mu, x.j);
    for (auto& [ab, c] : x.terms) {
        auto [a, b] = ab;
        if (a + b >= x.mu) {
            out.add(a + 1, b + x.j - x.mu, c);
        } else {
            AmbientClass m{x.mu, x.j, {}};
            m.add(a, b, c);
            for (auto& [uv, k] : ambient_multiply(m, g).terms)
                out.add(uv.first, uv.second, k);
        }
    }
    return out;
}

TClass t_multiply(const TClass& x, const TClass& y)
{
    if (x.mu != y.mu || x.j != y.j)
        fail("ShapeMismatch", "classes for different (mu, j)");
    int mu = x.mu;
    TClass out{mu, x.j, {}};
    for (auto& [ab, c1] : x.terms)
        for (auto& [ce, c2] : y.terms) {
            int s1 = ab.first + ab.second, s2 = ce.first + ce.second;
            int u = ab.first + ce.first, v = ab.second + ce.second;
            if (s1 >= mu && s2 >= mu)
                continue;
            if (s1 + s2 < mu || s1 >= mu || s2 >= mu) {
                out.add(u, v, c1 * c2);
                continue;
            }
            AmbientClass z{mu, x.j, {}};
            z.terms[{u, v}] = c1 * c2; // untruncated: the pullback formula handles the range
            for (auto& [k, c] : iota_pullback(z).terms)
                out.add(k.first, k.second, c);
        }
    return out;
}

TClass point_class(int mu, int j)
{
    return TClass::basis(mu, j, mu - 1, mu);
}

TClass secant_pullback(int mu, int j, int i)
{
    if (i < 1 || i > mu)
        fail("OutOfRange", "secant index must satisfy 1 <= i <= mu");
    if (2 * mu >= j + 1)
        fail("OutOfRange", "secant classes need 2 mu < j + 1");
    int e1 = j - mu - i + 1, e2 = i + 1, k = mu - i;
    AmbientClass z{mu, j, {}};
    for (int u = 0; u <= k; ++u) {
        long long c = binom(e1, u) * binom(e2, k - u);
        if (u % 2)
            c = -c;
        z.add(u, k - u, c);
    }
    return iota_pullback(z);
}

TClass secant_closed_form(int mu, int j)
{
    TClass c{mu, j, {}};
    c.add(0, 1, mu);
    c.add(1, 0, -(j + 2 - 2 * mu));
    return c;
}

Matrix hankel_matrix(const std::vector<Q>& a, int mu)
{
    int j = static_cast<int>(a.size()) - 1;
    if (mu < 0 || mu > j)
        fail("OutOfRange", "Hankel window needs 0 <= mu <= j");
    Matrix h(static_cast<std::size_t>(mu) + 1, Row(static_cast<std::size_t>(j - mu) + 1));
    for (int r = 0; r <= mu; ++r)
        for (int c = 0; c <= j - mu; ++c)
            h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = a[static_cast<std::size_t>(r + c)];
    return h;
}

int hankel_rank(const std::vector<Q>& a, int mu)
{
    bool zero = true;
    for (auto& e : a)
        if (sgn(e) != 0)
            zero = false;
    if (zero)
        fail("ZeroForm", "Hankel rank of the zero form");
    return static_cast<int>(rank(hankel_matrix(a, mu)));
}

std::vector<Q> scaled_coefficients(const BinaryForm& f)
{
    std::vector<Q> a;
    for (int i = 0; i <= f.degree; ++i)
        a.push_back(f.coeffs[static_cast<std::size_t>(i)] / binomial(f.degree, i));
    return a;
}

int secant_stratum(const std::vector<Q>& a)
{
    int j = static_cast<int>(a.size()) - 1, best = 0;
    for (int m = 0; m <= j; ++m)
        best = std::max(best, hankel_rank(a, m));
    return best;
}

int fiber_dimension(const std::vector<Q>& a, int mu)
{
    return mu - hankel_rank(a, mu);
}

Example74 example_7_4()
{
    const int mu = 3, j = 6;
    Example74 ex;
    ex.product = t_multiply(TClass::basis(mu, j, 1, 1), TClass::basis(mu, j, 0, 2));
    ex.coeff_13 = ex.product.coeff(1, 3);
    ex.triple = t_multiply(ex.product, TClass::basis(mu, j, 1, 0));
    ex.count = ex.triple.coeff(mu - 1, mu);

    // f = x (x + y)(x + a y) with coefficients in Q[a]; index k multiplies x^{d-k} y^k
    using HomA = std::vector<QPoly>;
    auto mulh = [](const HomA& p, const HomA& q) {
        HomA r(p.size() + q.size() - 1);
        for (std::size_t s = 0; s < p.size(); ++s)
            for (std::size_t t = 0; t < q.size(); ++t)
                r[s + t] = r[s + t] + p[s] * q[t];
        return r;
    };
    QPoly one = QPoly::constant(1), zero, a({Q(0), Q(1)});
    HomA f = mulh(mulh(HomA{one, zero}, HomA{one, one}), HomA{one, a});
    // rows x^{3-k} y^k f in the basis x^5y, x^4y^2, x^3y^3, x^2y^4 (x^6, xy^5, y^6 dropped)
    for (int k = 0; k <= 3; ++k) {
        HomA shifted(7);
        for (std::size_t s = 0; s < f.size(); ++s)
            shifted[s + static_cast<std::size_t>(k)] = f[s];
        std::vector<QPoly> row;
        for (int c = 1; c <= 4; ++c)
            row.push_back(shifted[static_cast<std::size_t>(c)]);
        ex.matrix.push_back(row);
    }
    ex.det = poly_determinant(ex.matrix, 4);
    ex.degree = ex.det.degree();
    ex.roots_with_multiplicity = ex.degree;
    QPoly g = gcd(ex.det, ex.det.derivative());
    ex.distinct_roots = ex.degree - g.degree();
    return ex;
}

long long wronskian_cover_degree(const HilbertFunction& T)
{
    require_admissible(T);
    long long d = 1;
    for (int i = T.mu(); i <= T.j(); ++i)
        d *= grass_degree(i + 1 - T.at(i), i + 1);
    return d;
}

std::string to_string(const TClass& c)
{
    std::ostringstream os;
    bool first = true;
    for (auto& [ab, k] : c.terms) {
        if (!first)
            os << (k < 0 ? " - " : " + ");
        else if (k < 0)
            os << "-";
        long long m = k < 0 ? -k : k;
        if (m != 1)
            os << m;
        os << "[" << ab.first << "," << ab.second << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace hilbcells
