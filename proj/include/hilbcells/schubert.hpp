#pragma once

#include "hilbcells/linalg.hpp"
#include "hilbcells/partitions.hpp"

#include <map>
#include <vector>

namespace hilbcells {

// Class in H*(Grass(rows, rows+cols)); keys are normalized partitions in the box.
struct SchubertClass {
    int rows = 0;
    int cols = 0;
    std::map<Partition, long long> terms;

    static SchubertClass basis(int rows, int cols, const Partition& p, long long coeff = 1);
    long long coeff(const Partition& p) const;
    bool operator==(const SchubertClass&) const = default;
};

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

SchubertClass lr_multiply(const SchubertClass& x, const SchubertClass& y);

// sigma_lambda * sigma_(k) by the Pieri rule.
SchubertClass pieri_multiply(const SchubertClass& x, int k);

// Degree [c_1^N] of Grass(d, n), by iterated Pieri.
long long grass_degree(int d, int n);
// N! prod_{i<d} i!/(n-d+i)!
long long grass_degree_closed_form(int d, int n);
// The value N!/C(j,d) for Grass(d, R_j) (n = j+1); kept to document the mismatch.
Q claimed_cover_degree(int d, int j);

struct MonomialSpace {
    int degree;             // j
    std::vector<int> xpows; // strictly increasing powers of x
};

// QRAM(E), weakly decreasing with zeros kept (d parts).
Partition qram_of_monomial_space(const MonomialSpace& e);
int total_ramification(const MonomialSpace& e);
// Exchange x and y.
MonomialSpace swap_xy(const MonomialSpace& e);

SchubertClass intersect_ramification(int d, int j, const std::vector<MonomialSpace>& conditions);

} // namespace hilbcells
