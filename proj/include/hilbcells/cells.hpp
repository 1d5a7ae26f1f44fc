#pragma once

#include "hilbcells/binforms.hpp"
#include "hilbcells/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbcells {

struct Monomial {
    int x = 0;
    int y = 0;
    int degree() const { return x + y; }
    bool operator==(const Monomial&) const = default;
};

// 1 < y < x < y^2 < xy < x^2 < ...
bool operator<(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m); // "x^a y^b"
Monomial parse_monomial(const std::string& s);

struct MonomialIdeal {
    Partition partition;

    bool contains(const Monomial& m) const; // m in E
    HilbertFunction T() const { return diagonal_lengths(partition); }
    std::vector<Monomial> generators() const;
    std::vector<Monomial> cobasis() const;
    MonomialIdeal dual() const { return {hilbcells::dual(partition)}; }
    bool operator==(const MonomialIdeal&) const = default;
};

struct MonomialPair {
    Monomial mu, nu;
    bool operator==(const MonomialPair&) const = default;
};
bool operator<(const MonomialPair& a, const MonomialPair& b);

// S(E), or its degree-i part when degree >= 0.
std::vector<MonomialPair> pair_set_S(const MonomialIdeal& e, int degree = -1);

struct WSets {
    std::vector<MonomialPair> plus, minus;
    int w = 0;
};
WSets pair_set_W(const MonomialIdeal& e);

struct CellDims {
    int dim_V, codim_V;
    long z_E, v_E;
};
CellDims dims(const MonomialIdeal& e);

MonomialIdeal big_cell(const HilbertFunction& T);

struct CellParams {
    Partition partition;
    std::map<MonomialPair, Q> values;
};

// Degreewise pieces I_d for d = 0 .. top, with I_top = R_top.
struct GradedIdeal {
    HilbertFunction T;
    std::vector<FormSpace> pieces;
    std::vector<BinaryForm> generators;

    const FormSpace& piece(int d) const;
};

// Ideal generated by the given forms (pieces grown until some I_d = R_d).
GradedIdeal make_ideal(const std::vector<BinaryForm>& gens, int max_degree = 256);

GradedIdeal build_ideal(const CellParams& params);

// Standard generator with initial monomial beta, read off the reduced pieces.
BinaryForm standard_generator(const GradedIdeal& I, const Monomial& beta);

MonomialIdeal initial_ideal(const GradedIdeal& I);
MonomialIdeal initial_ideal(const GradedIdeal& I, const PointP1& p);

// QRAM of I_i at p for mu <= i <= j.
std::vector<Partition> qram_ideal(const GradedIdeal& I, const PointP1& p);
std::vector<Partition> qram_monomial_ideal(const MonomialIdeal& e);

struct SmallGrassCoord {
    int degree;
    std::vector<Monomial> columns; // basis of V_i
    std::vector<Monomial> rows;    // the monomials spanning W_i
    Matrix matrix;                 // delta_{i+1} x (1 + delta_i + delta_{i+1})
};
std::vector<SmallGrassCoord> small_grass_coords(const GradedIdeal& I);

} // namespace hilbcells
