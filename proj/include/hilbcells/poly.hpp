#pragma once

#include "hilbcells/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hilbcells {

// Univariate polynomial over Q, coefficients from degree 0 upward, trimmed.
struct QPoly {
    std::vector<Q> c;

    QPoly() = default;
    explicit QPoly(std::vector<Q> coeffs);
    static QPoly constant(const Q& v);
    static QPoly monomial(const Q& v, int deg);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    Q coeff(int k) const;
    Q lead() const { return c.empty() ? Q(0) : c.back(); }
    Q eval(const Q& x) const;
    QPoly derivative() const;
    int valuation() const; // lowest nonzero power, -1 for zero

    void trim();
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Q& s, const QPoly& a);
bool operator==(const QPoly& a, const QPoly& b);

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly gcd(QPoly a, QPoly b);
QPoly monic(const QPoly& a);

// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys);

// Determinant of a square matrix of polynomials, by evaluation at deg_bound+1
// points and interpolation; one extra point is used as a check.
QPoly poly_determinant(const std::vector<std::vector<QPoly>>& m, int deg_bound);

struct RationalRoots {
    std::vector<std::pair<Q, int>> roots; // root, multiplicity
    int residual_degree = 0;              // degree of the part with no rational root
};

RationalRoots rational_roots(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var);

// Integer polynomial (coefficients from degree 0).
using IntPoly = std::vector<long long>;

IntPoly mul(const IntPoly& a, const IntPoly& b);
std::string to_string(const IntPoly& p, const std::string& var);

} // namespace hilbcells
