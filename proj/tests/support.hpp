#pragma once

#include "hilbcells/binforms.hpp"
#include "hilbcells/cells.hpp"
#include "hilbcells/hookcode.hpp"
#include "hilbcells/tmuj.hpp"

#include <random>
#include <vector>

// Independent oracles: computed straight from the definitions, without the
// library's shortcuts.
namespace oracle {

using namespace hilbcells;

// All partitions of n(T) filtered by their raw diagonal counts.
std::vector<Partition> naive_enumerate(const HilbertFunction& T);

// S(E) from the membership conditions on monomials.
std::vector<MonomialPair> naive_S(const Partition& p);

// Hook code from arm/leg counts on the Ferrers grid.
HookCode naive_code(const Partition& p);

// Number of partitions in a rows x cols box, by weight.
IntPoly box_count(int rows, int cols);

// N! / (product of hook lengths of the d x (n-d) rectangle).
long long hook_length_degree(int d, int n);

// det [ d^{d-1} f_r / dx^{d-1-k} dy^k ], a form of degree d(j+1-d).
BinaryForm homogeneous_wronskian(const FormSpace& v);

// Degree sequence from dim(V cap L^m R_{j-m}) via vanishing of derivatives.
std::vector<int> derivative_degree_sequence(const FormSpace& v, const PointP1& p);

bool proportional(const BinaryForm& a, const BinaryForm& b);

// value of sum f_k x^{m-k} y^k
Q eval(const std::vector<Q>& f, const Q& x, const Q& y);

} // namespace oracle

namespace support {

using namespace hilbcells;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    Q rational(long num = 9, long den = 4);
};

FormSpace random_space(Rng& rng, int d, int j);
// d-dimensional space with a prescribed degree sequence n at p (times random forms).
FormSpace ramified_space(Rng& rng, int j, const std::vector<int>& n, const PointP1& p);

CellParams random_params(Rng& rng, const Partition& p);

// a_i = sum_k lambda_k t_k^i, r terms, optionally one y^j term.
std::vector<Q> secant_sample(Rng& rng, int j, int r);

// f(ax + by, cx + dy)
BinaryForm substitute(const BinaryForm& f, const Q& a, const Q& b, const Q& c, const Q& d);

// Built ideals of the given T, moved by small GL2 substitutions, whose
// Wronskians split over Q in every degree. Stops after `want` or `tries`.
std::vector<GradedIdeal> split_ideals(Rng& rng, const HilbertFunction& T, int want, int tries);

struct SplitCheck {
    bool split = false;
    long total = 0; // sum over points and degrees of |QRAM(I_i, p)|
};
// Sum rule over the rational ramification points of all pieces I_mu..I_j.
SplitCheck ramification_sum(const GradedIdeal& I);

} // namespace support
