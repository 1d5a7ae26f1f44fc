#pragma once

#include "hilbcells/partitions.hpp"
#include "hilbcells/poly.hpp"

#include <map>
#include <vector>

namespace hilbcells {

struct Box {
    int rows; // delta_{i+1}
    int cols; // 1 + delta_i
};

// Boxes B_i(T) for mu <= i <= j.
std::vector<Box> boxes(const HilbertFunction& T);

// qs[k] belongs to degree mu + k; parts padded with zeros to rows(B_i).
struct HookCode {
    int mu = 0;
    int j = -1;
    std::vector<Partition> qs;
    bool operator==(const HookCode&) const = default;
    auto operator<=>(const HookCode&) const = default;
};

int code_length(const HookCode& d);
bool fits(const HilbertFunction& T, const HookCode& d);

HookCode code(const Partition& p);
Partition decode(const HilbertFunction& T, const HookCode& d);
HookCode complement(const HilbertFunction& T, const HookCode& d);

// Every box-bounded code sequence for T.
std::vector<HookCode> all_codes(const HilbertFunction& T);

// Coefficients of the q-binomial [a+b choose a]_q.
IntPoly gaussian_binomial(int a, int b);

// Polynomial in q; only even powers occur.
IntPoly poincare(const HilbertFunction& T);

long long cell_count(const HilbertFunction& T);

std::string to_string(const HookCode& d);

} // namespace hilbcells
