#pragma once

#include "hilbcells/binforms.hpp"
#include "hilbcells/poly.hpp"

#include <map>
#include <utility>

namespace hilbcells {

// Combination of [a, b], 0 <= a <= mu-1, 0 <= b <= mu.
struct TClass {
    int mu = 0;
    int j = 0;
    std::map<std::pair<int, int>, long long> terms;

    static TClass basis(int mu, int j, int a, int b, long long coeff = 1);
    long long coeff(int a, int b) const;
    void add(int a, int b, long long c); // drops out-of-range targets
    bool operator==(const TClass&) const = default;
};

// Combination of zeta^u eta^v with zeta^{mu+1} = eta^{j+1} = 0.
struct AmbientClass {
    int mu = 0;
    int j = 0;
    std::map<std::pair<int, int>, long long> terms;

    void add(int u, int v, long long c);
    bool operator==(const AmbientClass&) const = default;
};

bool in_range(int mu, int a, int b);

TClass t_multiply(const TClass& x, const TClass& y);
AmbientClass class_GT(int mu, int j);
TClass iota_pullback(const AmbientClass& x);
AmbientClass iota_pushforward(const TClass& x);
AmbientClass ambient_multiply(const AmbientClass& x, const AmbientClass& y);

TClass point_class(int mu, int j);
TClass secant_pullback(int mu, int j, int i);
// mu [0,1] - (j + 2 - 2 mu) [1,0]
TClass secant_closed_form(int mu, int j);

// HANKEL(mu, j - mu, a): (mu+1) x (j+1-mu), entry a_{r+c}.
Matrix hankel_matrix(const std::vector<Q>& a, int mu);
int hankel_rank(const std::vector<Q>& a, int mu);
// a_i = c_i / C(j, i) for F = sum c_i x^{j-i} y^i.
std::vector<Q> scaled_coefficients(const BinaryForm& f);
// Smallest i with F in V(i, j): the largest rank over all Hankel windows.
int secant_stratum(const std::vector<Q>& a);
// Projective dimension of the degree-mu apolar forms: mu - rank.
int fiber_dimension(const std::vector<Q>& a, int mu);

struct Example74 {
    TClass product;           // [1,1]*[0,2]
    long long coeff_13 = 0;   // its [1,3] coefficient
    TClass triple;            // times [1,0]
    long long count = 0;      // coefficient of the point class
    std::vector<std::vector<QPoly>> matrix;
    QPoly det;
    int degree = 0;
    int roots_with_multiplicity = 0;
    int distinct_roots = 0;
};
Example74 example_7_4();

long long wronskian_cover_degree(const HilbertFunction& T);

std::string to_string(const TClass& c);

} // namespace hilbcells
