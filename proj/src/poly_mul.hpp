#pragma once

// Internal: multiplication of dense big-integer polynomials with
// nonnegative coefficients (lowest degree first).

#include <momentpoly/numeric.hpp>

#include <vector>

namespace momentpoly::detail {

using IntPoly = std::vector<BigInt>;

/// Schoolbook product.
IntPoly poly_mul_school(const IntPoly& a, const IntPoly& b);

/// Product via Kronecker substitution: pack each polynomial into one big
/// integer with a fixed limb-aligned stride wide enough that no column sum
/// carries into its neighbour, multiply once, unpack. Requires nonnegative
/// coefficients. Much faster than schoolbook for large degree * large
/// coefficients because it rides GMP's subquadratic integer multiplication.
IntPoly poly_mul_kronecker(const IntPoly& a, const IntPoly& b);

/// Dispatches between the two based on operand size.
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

}  // namespace momentpoly::detail
