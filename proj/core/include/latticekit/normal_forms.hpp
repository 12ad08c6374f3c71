#pragma once

#include <optional>

#include "latticekit/matrix.hpp"

namespace latk {

// Column-style Hermite normal form. The convention, used everywhere in
// this library:
//   - h = m * u with u unimodular;
//   - nonzero columns come first, ordered by strictly increasing pivot row
//     (pivot = topmost nonzero entry of a column), zero columns last;
//   - pivots are positive;
//   - within a pivot's row, entries in earlier columns lie in [0, pivot).
// For a nonsingular square matrix this is the lower-triangular form with
// positive diagonal. The output is a canonical invariant of the column span.
struct HnfResult {
    Matrix h;
    Matrix u;
};
HnfResult hnf(const Matrix& m);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// d_1 | d_2 | ... , all diagonal entries nonnegative.
struct SnfResult {
    Matrix d;
    Matrix u;
    Matrix v;
};
SnfResult snf(const Matrix& m);

// Canonical basis (as columns) of { x : m x = 0 } over the integers.
Matrix kernel(const Matrix& m);

// Rank over Q.
std::size_t rank(const Matrix& m);

// An integral solution x of a x = b (b may have several columns), or absent
// if none exists. When a has full column rank the solution is unique; in
// general the solution with zero coefficients on the kernel directions of
// the internal Hermite form is returned, deterministically.
std::optional<Matrix> integer_solve(const Matrix& a, const Matrix& b);

} // namespace latk
