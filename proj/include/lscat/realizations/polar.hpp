#pragma once

#include "lscat/exact/matrix.hpp"

namespace lscat {

QuatMatrixD to_double(const QuatMatrix& m);

/// Largest entry modulus of g g* - I.
double unitarity_defect(const QuatMatrixD& g);
/// Largest quaternion modulus of a - b, entrywise.
double max_abs_diff(const QuatMatrixD& a, const QuatMatrixD& b);

/// The unitary factor kappa(g) = g (g* g)^{-1/2} of the polar decomposition
/// g = kappa(g) exp(rho(g)). Computed by the Newton iteration
/// U <- (U + U^{-*}) / 2 on the complex image phi(g); the result satisfies
/// |kappa kappa* - I| <= 1e-10. Throws std::invalid_argument for a singular
/// or non-square g and std::runtime_error if 100 iterations do not converge.
QuatMatrixD polar_sp_part(const QuatMatrixD& g);

}  // namespace lscat
