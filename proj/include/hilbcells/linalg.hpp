#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace hilbcells {

using Q = mpq_class;
using Row = std::vector<Q>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form. Zero rows are dropped; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

Q determinant(Matrix m);

// Basis of {v : m v = 0}.
Matrix nullspace(Matrix m, std::size_t ncols);

// Solve A x = b. Returns false if inconsistent; x is set to one solution
// (free variables zero) and `unique` reports whether the solution is unique.
bool solve(const Matrix& a, const Row& b, Row& x, bool& unique);

Q binomial(long n, long k);

} // namespace hilbcells
