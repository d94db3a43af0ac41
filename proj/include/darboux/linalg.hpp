#ifndef DARBOUX_LINALG_HPP
#define DARBOUX_LINALG_HPP

#include <optional>
#include <vector>

#include "darboux/cyclo.hpp"

namespace darboux {

/// Dense exact matrix over Scalar, row major.
using Matrix = std::vector<std::vector<Scalar>>;

/// Row-reduce in place; returns pivot column per row rank.
std::vector<size_t> row_reduce(Matrix& m);

/// Solve A x = b exactly; empty optional when inconsistent.  A is m x n.
std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b);

/// Is w in the span of the rows of m?
bool in_row_span(const Matrix& m, const std::vector<Scalar>& w);

Scalar det(Matrix m);

}  // namespace darboux

#endif
