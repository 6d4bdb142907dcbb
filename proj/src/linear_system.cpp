#include "wordavoid/linear_system.hpp"

#include <utility>

#include "wordavoid/errors.hpp"

namespace wordavoid {

namespace {

void require_square(const RfMatrix& matrix) {
  for (const auto& row : matrix) {
    if (row.size() != matrix.size()) {
      throw InvalidArgument("matrix is not square");
    }
  }
}

// Forward elimination to upper-triangular form. Applies the same row
// operations to `rhs` when given. Returns the number of row swaps, or throws
// SingularMatrixError when a column has no pivot.
std::size_t eliminate(RfMatrix& a, RfVector* rhs) {
  const std::size_t n = a.size();
  std::size_t swaps = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      throw SingularMatrixError(col);
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      if (rhs != nullptr) {
        std::swap((*rhs)[pivot], (*rhs)[col]);
      }
      ++swaps;
    }
    const RationalFunction inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) {
        continue;
      }
      const RationalFunction factor = a[row][col] * inv;
      a[row][col] = RationalFunction();
      for (std::size_t k = col + 1; k < n; ++k) {
        if (!a[col][k].is_zero()) {
          a[row][k] -= factor * a[col][k];
        }
      }
      if (rhs != nullptr && !(*rhs)[col].is_zero()) {
        (*rhs)[row] -= factor * (*rhs)[col];
      }
    }
  }
  return swaps;
}

}  // namespace

RfVector solve_linear(RfMatrix matrix, RfVector rhs) {
  require_square(matrix);
  if (rhs.size() != matrix.size()) {
    throw InvalidArgument("right-hand side length does not match matrix");
  }
  eliminate(matrix, &rhs);
  const std::size_t n = matrix.size();
  RfVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    RationalFunction acc = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) {
      if (!matrix[i][k].is_zero() && !x[k].is_zero()) {
        acc -= matrix[i][k] * x[k];
      }
    }
    x[i] = acc / matrix[i][i];
  }
  return x;
}

RationalFunction determinant(RfMatrix matrix) {
  require_square(matrix);
  std::size_t swaps = 0;
  try {
    swaps = eliminate(matrix, nullptr);
  } catch (const SingularMatrixError&) {
    return RationalFunction();
  }
  RationalFunction det = swaps % 2 == 0 ? RationalFunction(1)
                                        : RationalFunction(-1);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    det *= matrix[i][i];
  }
  return det;
}

RfVector multiply(const RfMatrix& matrix, const RfVector& x) {
  require_square(matrix);
  if (x.size() != matrix.size()) {
    throw InvalidArgument("vector length does not match matrix");
  }
  RfVector out(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      out[i] += matrix[i][k] * x[k];
    }
  }
  return out;
}

}  // namespace wordavoid
