#ifndef FUNDOM_LINALG_HPP_
#define FUNDOM_LINALG_HPP_

#include <optional>
#include <vector>

#include "fundom/fp.hpp"

namespace fundom {

// Exact Gauss elimination over F_p with deterministic pivoting: columns are
// scanned left to right, the pivot is the first row (in order) with a nonzero
// entry.  All bases derived from it are therefore reproducible across runs.

struct Rref {
  Mat m;                    // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
};

Rref rref(const Mat& a);

int rank(const Mat& a);

// Columns form a basis of {x : Ax = 0}; free variables taken in column order.
Mat kernel_basis(const Mat& a);

// Some x with Ax = b, free variables set to 0; nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Columns of the result are an independent spanning subset of the columns of
// a, chosen deterministically (first independent columns win).
Mat col_space_basis(const Mat& a);

bool in_col_span(const Mat& basis, const Vec& v);

// Coordinates of each column of b in the (independent) columns of basis.
// Throws std::invalid_argument if some column is outside the span.
Mat coords_in_basis(const Mat& basis, const Mat& b);

// dim span(U) - dim span(V); checks span(V) subseteq span(U).
int quotient_dim(const Mat& u, const Mat& v);

Mat identity(int n);
Mat zeros(int rows, int cols);

// [a 0; 0 b]
Mat direct_sum(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

}  // namespace fundom

#endif  // FUNDOM_LINALG_HPP_
