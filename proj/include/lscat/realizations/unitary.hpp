#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lscat/affine_alcove.hpp"

namespace lscat {

/// Diagonal unitary matrix diag(exp(2 pi i t_1), ..., exp(2 pi i t_m)) with
/// each angle t_j held exactly as a rational number of turns in [0, 1).
struct UnitaryDiagonal {
    std::vector<Rat> turns;

    /// The common turn when every entry is equal.
    [[nodiscard]] std::optional<Rat> scalar_turn() const;
    [[nodiscard]] std::vector<std::complex<double>> to_complex() const;
    /// Sum of the turns modulo 1; zero exactly when the determinant is 1.
    [[nodiscard]] Rat determinant_turn() const;
};

/// exp of a point of the SU(n+1) torus (trace-zero coordinates). Throws
/// std::invalid_argument if the coordinates do not sum to zero.
UnitaryDiagonal su_exp_torus(const TorusPoint& h);
/// exp v_k in SU(n+1).
UnitaryDiagonal su_exp_vertex(int n, std::size_t k);

}  // namespace lscat
