#pragma once

#include <random>

#include "lscat/realizations/symplectic.hpp"

namespace lscat {

/// A point of Gr_k(H^n): the right H-span of the columns of an n x k matrix of
/// rank k. Two points are equal when their canonical forms agree.
class GrassPoint {
public:
    /// Throws std::invalid_argument unless rep has full column rank.
    explicit GrassPoint(QuatMatrix rep);
    /// The column space of an arbitrary matrix. Throws std::invalid_argument
    /// when that space is zero.
    static GrassPoint span_of(const QuatMatrix& m);

    [[nodiscard]] const QuatMatrix& rep() const { return rep_; }
    /// Reduced column-echelon form; unchanged under rep -> rep * h, h in GL(k, H).
    [[nodiscard]] const QuatMatrix& canonical() const { return canonical_; }
    [[nodiscard]] std::size_t n() const { return rep_.rows(); }
    [[nodiscard]] std::size_t k() const { return rep_.cols(); }

    friend bool operator==(const GrassPoint& a, const GrassPoint& b) { return a.canonical_ == b.canonical_; }

private:
    QuatMatrix rep_;
    QuatMatrix canonical_;
};

QuatMatrix grass_canonical(const GrassPoint& x);

/// x in X_{j,k}: the plane contains the standard basis vector e_j, which is
/// the same as the rank dropping once row j is deleted. Requires 1 <= j <= k+1
/// and k = x.k(); throws std::out_of_range otherwise.
bool in_X(std::size_t j, std::size_t k, const GrassPoint& x);
/// x in Y_{j,k}: row j of the plane is zero. Requires 1 <= j <= n.
bool in_Y(std::size_t j, std::size_t k, const GrassPoint& x);

/// Scales row j by (1 - s). Throws std::invalid_argument when x lies in
/// X_{j,k} or s is outside [0, 1].
GrassPoint grass_retract(std::size_t j, std::size_t k, const GrassPoint& x, const Rat& s);

/// min(k, n - k).
std::size_t grass_dim(std::size_t n, std::size_t k);

/// tau_k(c_g(exp v_k)) for a conjugator g in Sp(n): the first k columns of g
/// when k <= n - k, otherwise the last n - k. Throws std::invalid_argument if
/// g is not symplectic or k is not in 1..n-1.
GrassPoint tau_k(const QuatMatrix& g, std::size_t k);

/// c_g(exp v_k) = g exp(v_k) g*.
QuatMatrix orbit_element(const QuatMatrix& g, std::size_t k);
/// tau_k read off an orbit element x: the (-1)-eigenspace of x when
/// k <= n - k, the (+1)-eigenspace otherwise.
GrassPoint orbit_tau(const QuatMatrix& x, std::size_t k);

/// Decides whether an orbit element x of O_k with tau_k(x) in Y_{j,k} has the
/// block form with row and column j equal to +-e_j and a symplectic
/// complement in the right conjugacy class. With d = min(k, n - k):
/// d = k gives centre +1 and complement conjugate to exp v_{k, n-1};
/// d = n - k gives centre -1 and complement conjugate to exp v_{k-1, n-1}.
/// Returns false for any x that does not have this form. Throws
/// std::invalid_argument if x is not symplectic or j, k are out of range.
bool block_structure_check(const QuatMatrix& x, std::size_t j, std::size_t k);

/// Conjugacy class of a symplectic involution, located by its count of -1
/// eigenvalues: x^2 = I and trace(phi(x)) = 2 (n - 2c).
bool is_conjugate_to_vertex(const QuatMatrix& x, std::size_t minus_count);

/// Random quaternion matrix of full column rank with small integer entries.
QuatMatrix random_full_rank(std::size_t n, std::size_t k, std::mt19937_64& rng, long max_abs = 3);
/// Invertible k x k quaternion matrix (random, small integer entries).
QuatMatrix random_invertible(std::size_t k, std::mt19937_64& rng, long max_abs = 3);

}  // namespace lscat
