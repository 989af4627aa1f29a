#pragma once

// Rational Gaussian elimination: rank, affine solution sets, kernels.

#include <cstddef>
#include <span>
#include <vector>

#include "capcalc/arith.hpp"

namespace capcalc {

/// Solution set {particular + span(kernel)} of A x = b, or inconsistent.
struct AffineSolution {
  bool consistent = false;
  RatVector particular;
  std::vector<RatVector> kernel;

  bool unique() const { return consistent && kernel.empty(); }
};

std::size_t rational_rank(const RatMatrix& a);
std::size_t rational_rank(const IntMatrix& a);

AffineSolution solve_affine(const RatMatrix& a, std::span<const Rational> b);

/// Rational kernel basis, each vector scaled to a primitive integer vector.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_integer_vector(std::span<const Rational> v);

}  // namespace capcalc
