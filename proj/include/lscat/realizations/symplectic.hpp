#pragma once

#include <random>

#include "lscat/affine_alcove.hpp"

namespace lscat {

/// Complex 2n x 2n image of an n x n quaternion matrix. Writing M = A + B j
/// with A, B complex (a + bi + cj + dk has A-part a + bi and B-part c + di),
/// phi(M) = [[A, B], [-conj(B), conj(A)]]. This is an injective ring
/// homomorphism: phi(MN) = phi(M) phi(N).
CMat phi_embed(const QuatMatrix& m);
/// Inverse of phi_embed on its image. Throws std::invalid_argument otherwise.
QuatMatrix phi_unembed(const CMat& c);

/// det(phi(M)); always real and nonnegative.
CRat reduced_norm(const QuatMatrix& m);

/// g g* = I and reduced_norm(g) = 1, exactly.
bool is_symplectic(const QuatMatrix& g);

/// exp of a point of the Sp(n) torus, diag(exp(2 pi i H_j)) as quaternions.
/// Exact only when every H_j is a multiple of 1/4; throws std::domain_error
/// otherwise.
QuatMatrix sp_exp_torus(const TorusPoint& h);
/// exp v_k = diag(-I_k, I_{n-k}).
QuatMatrix sp_exp_vertex(int n, int k);

/// q = p^2 / |p|^2 for a random nonzero rational p: a rational unit quaternion.
QuatRat random_unit_quaternion(std::mt19937_64& rng, long max_abs = 4);
/// Rational rotation (c, s) with c^2 + s^2 = 1 from a Pythagorean triple.
std::pair<Rat, Rat> random_circle_point(std::mt19937_64& rng, long max_abs = 6);
/// Exactly symplectic rational matrix: a product of diagonal unit
/// quaternions, real plane rotations and coordinate permutations.
QuatMatrix random_symplectic(std::size_t n, std::mt19937_64& rng, int factors = 6);

}  // namespace lscat
