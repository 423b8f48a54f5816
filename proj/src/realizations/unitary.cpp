#include "lscat/realizations/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lscat {

std::optional<Rat> UnitaryDiagonal::scalar_turn() const {
    if (turns.empty()) return std::nullopt;
    for (const auto& t : turns)
        if (t != turns.front()) return std::nullopt;
    return turns.front();
}

std::vector<std::complex<double>> UnitaryDiagonal::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(turns.size());
    for (const auto& t : turns) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * t.to_double()));
    return out;
}

Rat UnitaryDiagonal::determinant_turn() const {
    Rat s;
    for (const auto& t : turns) s += t;
    return s.frac();
}

UnitaryDiagonal su_exp_torus(const TorusPoint& h) {
    Rat trace;
    for (const auto& x : h) trace += x;
    if (!trace.is_zero()) throw std::invalid_argument("su_exp_torus: coordinates must sum to zero");
    UnitaryDiagonal d;
    for (const auto& x : h) d.turns.push_back(x.frac());
    return d;
}

UnitaryDiagonal su_exp_vertex(int n, std::size_t k) {
    const FundamentalAlcove alcove(build(LieType::make(Family::A, n)));
    return su_exp_torus(alcove.vertex(k));
}

}  // namespace lscat
