#pragma once

#include "hilbcells/linalg.hpp"
#include "hilbcells/partitions.hpp"
#include "hilbcells/poly.hpp"
#include "hilbcells/schubert.hpp"

#include <utility>
#include <vector>

namespace hilbcells {

// coeffs[k] is the coefficient of x^{j-k} y^k.
struct BinaryForm {
    int degree = 0;
    std::vector<Q> coeffs;

    bool is_zero() const;
    bool operator==(const BinaryForm&) const = default;
};

BinaryForm make_form(int degree, std::vector<Q> coeffs);
BinaryForm normalize(BinaryForm f); // first nonzero coefficient 1
BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g);
std::string to_string(const BinaryForm& f);

// The point a x + b y = 0, with L_p = a x + b y.
struct PointP1 {
    Q a, b;
    bool operator==(const PointP1&) const = default;
    auto operator<=>(const PointP1& o) const
    {
        if (a != o.a)
            return a < o.a ? std::strong_ordering::less : std::strong_ordering::greater;
        if (b != o.b)
            return b < o.b ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

PointP1 make_point(Q a, Q b);
std::string to_string(const PointP1& p);

// d-dimensional subspace of R_j. Rows use the BinaryForm coefficient layout and
// are kept reduced, pivots on the lowest power of x.
struct FormSpace {
    int degree = 0;
    Matrix basis;

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const FormSpace&) const = default;
};

FormSpace make_space(int degree, const Matrix& rows); // DegenerateBasis on dependent rows
FormSpace make_space(const std::vector<BinaryForm>& forms);
BinaryForm basis_form(const FormSpace& v, int i);

// The complement C used with L_p: y if a != 0, else x.
std::pair<Q, Q> default_complement(const PointP1& p);

// Coordinates in the basis (L_p, C): coeffs[k] multiplies L^{j-k} C^k, reduced so
// the L-adic valuations strictly increase.
FormSpace change_basis(const FormSpace& v, const PointP1& p);
FormSpace change_basis(const FormSpace& v, const PointP1& p, const std::pair<Q, Q>& complement);

struct RamData {
    std::vector<int> degree_sequence; // n_1 < ... < n_d
    Partition qram;                   // d parts, zeros kept
    Partition q_partition;            // j+1-d parts, zeros kept
    int r = 0;                        // weight of qram
};

RamData ram_data(const FormSpace& v, const PointP1& p);
RamData ram_data_from_sequence(int j, const std::vector<int>& n);

// In_p(V) as powers of L (read x = L, y = C).
MonomialSpace initial_space(const FormSpace& v, const PointP1& p);

// Whether some nonzero f in V is divisible by L_p^d.
bool has_form_divisible_by_Ld(const FormSpace& v, const PointP1& p);

BinaryForm wronskian(const FormSpace& v);

// Dehomogenization f(x, 1).
QPoly dehomogenize(const BinaryForm& f);

struct RamCheck {
    int degree_W = 0;
    std::vector<std::pair<PointP1, int>> rational_point_valuations; // from W
    std::vector<int> r_from_qram;                                   // same order, from ram_data
    int irrational_degree = 0;
    bool consistent = false;
};

RamCheck total_ramification_check(const FormSpace& v);

} // namespace hilbcells
