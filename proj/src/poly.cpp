#include "hilbcells/poly.hpp"
#include "hilbcells/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcells {

QPoly::QPoly(std::vector<Q> coeffs) : c(std::move(coeffs))
{
    trim();
}

QPoly QPoly::constant(const Q& v)
{
    return QPoly(std::vector<Q>{v});
}

QPoly QPoly::monomial(const Q& v, int deg)
{
    std::vector<Q> cs(static_cast<std::size_t>(deg) + 1, Q(0));
    cs.back() = v;
    return QPoly(std::move(cs));
}

void QPoly::trim()
{
    while (!c.empty() && sgn(c.back()) == 0)
        c.pop_back();
}

Q QPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c.size()))
        return 0;
    return c[static_cast<std::size_t>(k)];
}

Q QPoly::eval(const Q& x) const
{
    Q acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const
{
    std::vector<Q> d;
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(c[k] * static_cast<long>(k));
    return QPoly(std::move(d));
}

int QPoly::valuation() const
{
    for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0)
            return static_cast<int>(k);
    return -1;
}

QPoly operator+(const QPoly& a, const QPoly& b)
{
    std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
    for (std::size_t k = 0; k < a.c.size(); ++k)
        r[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k)
        r[k] += b.c[k];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b)
{
    return a + Q(-1) * b;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Q> r(a.c.size() + b.c.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t k = 0; k < b.c.size(); ++k)
            r[i + k] += a.c[i] * b.c[k];
    return QPoly(std::move(r));
}

QPoly operator*(const Q& s, const QPoly& a)
{
    std::vector<Q> r = a.c;
    for (auto& e : r)
        e *= s;
    return QPoly(std::move(r));
}

bool operator==(const QPoly& a, const QPoly& b)
{
    return a.c == b.c;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem)
{
    if (b.is_zero())
        fail("ZeroForm", "polynomial division by zero");
    rem = a;
    std::vector<Q> q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Q(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int s = rem.degree() - b.degree();
        Q f = rem.lead() / b.lead();
        q[static_cast<std::size_t>(s)] += f;
        for (std::size_t k = 0; k < b.c.size(); ++k)
            rem.c[k + static_cast<std::size_t>(s)] -= f * b.c[k];
        rem.trim();
    }
    quot = QPoly(std::move(q));
}

QPoly monic(const QPoly& a)
{
    if (a.is_zero())
        return a;
    return Q(1 / a.lead()) * a;
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

QPoly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys)
{
    std::size_t n = xs.size();
    std::vector<Q> dd = ys;
    for (std::size_t lvl = 1; lvl < n; ++lvl)
        for (std::size_t i = n - 1; i >= lvl; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
            if (i == lvl)
                break;
        }
    QPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * QPoly(std::vector<Q>{-xs[i], Q(1)}) + QPoly::constant(dd[i]);
    }
    return acc;
}

QPoly poly_determinant(const std::vector<std::vector<QPoly>>& m, int deg_bound)
{
    std::size_t n = m.size();
    if (n == 0)
        return QPoly::constant(1);
    std::vector<Q> xs, ys;
    for (int k = 0; k <= deg_bound; ++k) {
        Q x = k;
        Matrix num(n, Row(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < n; ++c)
                num[i][c] = m[i][c].eval(x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(num)));
    }
    QPoly d = interpolate(xs, ys);
    Q probe(2 * deg_bound + 3, 2); // past the nodes, never one of them
    Matrix num(n, Row(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            num[i][c] = m[i][c].eval(probe);
    if (determinant(std::move(num)) != d.eval(probe))
        fail("DegenerateBasis", "determinant degree bound too small");
    return d;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    const unsigned long cap = 2000000;
    for (unsigned long p = 2; p <= cap && mpz_class(p) * p <= n; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            fac.push_back({mpz_class(p), e});
        }
    }
    // a leftover cofactor above the cap is treated as prime; that can only miss roots
    if (n > 1)
        fac.push_back({n, 1});
    std::vector<mpz_class> out{1};
    for (auto& [p, e] : fac) {
        std::size_t sz = out.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < sz; ++i)
                out.push_back(out[i] * pw);
        }
    }
    return out;
}

} // namespace

RationalRoots rational_roots(const QPoly& p0)
{
    RationalRoots res;
    if (p0.is_zero())
        fail("ZeroForm", "roots of the zero polynomial");
    QPoly p = p0;
    int v = p.valuation();
    if (v > 0) {
        res.roots.push_back({Q(0), v});
        p.c.erase(p.c.begin(), p.c.begin() + v);
    }
    // clear denominators
    auto integral = [](const QPoly& f) {
        mpz_class l = 1;
        for (auto& e : f.c)
            l = lcm(l, mpz_class(e.get_den()));
        std::vector<mpz_class> z;
        for (auto& e : f.c)
            z.push_back(mpz_class(e * l));
        return z;
    };
    if (p.degree() >= 1) {
        auto z = integral(p);
        auto ps = divisors(z.front());
        auto qs = divisors(z.back());
        std::vector<Q> cands;
        for (auto& a : ps)
            for (auto& b : qs) {
                Q r(a, b);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (auto& r : cands) {
            int mult = 0;
            QPoly lin(std::vector<Q>{-r, Q(1)});
            while (p.degree() >= 1 && sgn(p.eval(r)) == 0) {
                QPoly q, rem;
                divmod(p, lin, q, rem);
                p = q;
                ++mult;
            }
            if (mult > 0)
                res.roots.push_back({r, mult});
        }
    }
    std::sort(res.roots.begin(), res.roots.end());
    res.residual_degree = p.degree();
    return res;
}

namespace {

std::string term(const std::string& coef, const std::string& var, long k)
{
    std::ostringstream os;
    if (k == 0)
        return coef;
    if (coef != "1")
        os << (coef == "-1" ? "-" : coef);
    os << var;
    if (k > 1)
        os << "^" << k;
    return os.str();
}

} // namespace

std::string to_string(const QPoly& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        if (sgn(p.c[k]) == 0)
            continue;
        std::string s = term(p.c[k].get_str(), var, static_cast<long>(k));
        if (!out.empty() && s[0] != '-')
            out += "+";
        out += s;
    }
    return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            r[i + k] += a[i] * b[k];
    return r;
}

std::string to_string(const IntPoly& p, const std::string& var)
{
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0)
            continue;
        std::string s = term(std::to_string(p[k]), var, static_cast<long>(k));
        if (!out.empty() && s[0] != '-')
            out += "+";
        out += s;
    }
    return out.empty() ? "0" : out;
}

} // namespace hilbcells
