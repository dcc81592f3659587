#pragma once

#include <vector>

#include "rootmean/rational.hpp"

namespace rootmean {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Divides by the gcd of the entries and flips the sign so the first nonzero
/// entry is positive. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

/// Clears the denominators of a rational vector, then makes it primitive.
IntVector primitive_from_rational(const std::vector<Rational>& v);

/// Right nullspace of an integer matrix with `cols` columns, by fraction-free
/// Gauss-Jordan elimination. One primitive vector per free column, in
/// ascending free-column order.
std::vector<IntVector> nullspace(const IntMatrix& m, size_t cols);

/// Same, for a rational matrix (row denominators are cleared first).
std::vector<IntVector> nullspace(const RationalMatrix& m, size_t cols);

size_t rank(const IntMatrix& m, size_t cols);

/// Nonzero rows of the reduced echelon form; same column dependencies as m.
IntMatrix echelon_rows(const IntMatrix& m, size_t cols);

}  // namespace rootmean
