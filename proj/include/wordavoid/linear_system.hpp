#ifndef WORDAVOID_LINEAR_SYSTEM_HPP
#define WORDAVOID_LINEAR_SYSTEM_HPP

#include <vector>

#include "wordavoid/rational_function.hpp"

namespace wordavoid {

using RfVector = std::vector<RationalFunction>;
/// Row-major square matrix over Q(z).
using RfMatrix = std::vector<RfVector>;

/// Unique solution of matrix * x = rhs by Gaussian elimination with
/// first-nonzero pivoting. Throws SingularMatrixError with the failing
/// column, or InvalidArgument on a shape mismatch.
RfVector solve_linear(RfMatrix matrix, RfVector rhs);

RationalFunction determinant(RfMatrix matrix);

/// matrix * x, for residual checks.
RfVector multiply(const RfMatrix& matrix, const RfVector& x);

}  // namespace wordavoid

#endif  // WORDAVOID_LINEAR_SYSTEM_HPP
