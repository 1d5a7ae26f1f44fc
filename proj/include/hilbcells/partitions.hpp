#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hilbcells {

// Weakly decreasing positive parts. Row r (power of y) has parts[r] cells,
// cell (r, c) is the monomial x^c y^r.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int weight(const Partition& p);
Partition dual(const Partition& p);
int row_length(const Partition& p, int r);
int col_length(const Partition& p, int c);
bool contains_cell(const Partition& p, int r, int c);
bool fits_box(const Partition& p, int rows, int cols);

// Drop trailing zeros / sort descending.
Partition normalized(Partition p);

std::string to_string(const Partition& p);

// Hilbert function (t_0, ..., t_j).
struct HilbertFunction {
    std::vector<int> t;

    int at(int i) const; // 0 outside [0, j]
    int mu() const;      // min{i : t_i <= i}
    int j() const { return static_cast<int>(t.size()) - 1; }
    int delta(int i) const { return at(i - 1) - at(i); }
    int n() const;
    bool operator==(const HilbertFunction&) const = default;
    auto operator<=>(const HilbertFunction&) const = default;
};

bool is_admissible(const HilbertFunction& T);
void require_admissible(const HilbertFunction& T); // InvalidT

// Raw diagonal counts; with check=true raises NonAdmissible on a bad shape.
HilbertFunction diagonal_lengths(const Partition& p, bool check = true);

struct Hook {
    int row, col;
    int arm, leg;
    int difference() const { return arm - leg; }
    int hand_degree; // degree of x^{rowlen-1} y^row
};

std::vector<Hook> hooks(const Partition& p);

// Number of difference-a hooks; degree < 0 means all degrees.
int count_hooks_diff(const Partition& p, int a, int degree = -1);

// All partitions of n, lexicographically descending.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_with_diagonal_lengths(const HilbertFunction& T);

// Every admissible T with n(T) <= nmax (the diagonal sequences of all partitions).
std::vector<HilbertFunction> admissible_up_to(int nmax);

struct TInvariants {
    int mu, j, n;
    std::vector<int> delta; // delta[i] for i = 0 .. j+2
    long dim_GT, dim_ZT, f_T, dim_BGrass;
};

TInvariants t_invariants(const HilbertFunction& T);

} // namespace hilbcells
