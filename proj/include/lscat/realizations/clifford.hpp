#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "lscat/affine_alcove.hpp"

namespace lscat {

/// Element of the Clifford algebra C_m(R) with e_i^2 = -1 and e_i e_j = -e_j e_i.
/// A basis monomial e_{i1} ... e_{ir} (i1 < ... < ir) is stored as the bit mask
/// with bits i1-1, ..., ir-1 set. Only nonzero coefficients are kept.
template <class T>
class Clifford {
public:
    using Blade = std::uint32_t;
    static constexpr std::size_t kMaxDim = 32;

    explicit Clifford(std::size_t m) : m_(m) {
        if (m > kMaxDim) throw std::invalid_argument("Clifford: dimension above 32");
    }
    static Clifford scalar(std::size_t m, const T& s) {
        Clifford c(m);
        c.add(0, s);
        return c;
    }
    /// e_i for 1 <= i <= m.
    static Clifford basis(std::size_t m, std::size_t i) {
        if (i < 1 || i > m) throw std::out_of_range("Clifford::basis: index outside 1..m");
        Clifford c(m);
        c.add(Blade{1} << (i - 1), T(1));
        return c;
    }
    /// c - s e_i e_j.
    static Clifford rotor(std::size_t m, std::size_t i, std::size_t j, const T& c, const T& s) {
        Clifford out = scalar(m, c);
        out -= Clifford::scalar(m, s) * basis(m, i) * basis(m, j);
        return out;
    }

    [[nodiscard]] std::size_t dim() const { return m_; }
    [[nodiscard]] const std::map<Blade, T>& terms() const { return terms_; }
    [[nodiscard]] T coeff(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? T(0) : it->second;
    }

    void add(Blade b, const T& v) {
        T& slot = terms_[b];
        slot += v;
        if (is_negligible(slot)) terms_.erase(b);
    }

    [[nodiscard]] bool is_even() const {
        for (const auto& [b, v] : terms_)
            if (std::popcount(b) % 2 != 0) return false;
        return true;
    }
    /// Only grade-1 terms.
    [[nodiscard]] bool is_vector() const {
        for (const auto& [b, v] : terms_)
            if (std::popcount(b) != 1) return false;
        return true;
    }
    [[nodiscard]] bool is_scalar(const T& s) const {
        Clifford d = *this;
        d.add(0, -s);
        return d.terms_.empty();
    }

    /// (x_1 ... x_r)* = (-1)^r x_r ... x_1.
    [[nodiscard]] Clifford conj() const {
        Clifford out(m_);
        for (const auto& [b, v] : terms_) {
            const int r = std::popcount(b);
            const bool neg = ((r + r * (r - 1) / 2) % 2) != 0;
            out.terms_.emplace(b, neg ? T(-v) : v);
        }
        return out;
    }

    Clifford& operator+=(const Clifford& o) {
        check_dim(o);
        for (const auto& [b, v] : o.terms_) add(b, v);
        return *this;
    }
    Clifford& operator-=(const Clifford& o) {
        check_dim(o);
        for (const auto& [b, v] : o.terms_) add(b, T(-v));
        return *this;
    }
    friend Clifford operator+(Clifford a, const Clifford& b) { return a += b; }
    friend Clifford operator-(Clifford a, const Clifford& b) { return a -= b; }
    friend Clifford operator-(const Clifford& a) { return Clifford::scalar(a.m_, T(-1)) * a; }

    friend Clifford operator*(const Clifford& a, const Clifford& b) {
        a.check_dim(b);
        Clifford out(a.m_);
        for (const auto& [ba, va] : a.terms_)
            for (const auto& [bb, vb] : b.terms_) {
                const T prod = va * vb;
                out.add(ba ^ bb, blade_sign(ba, bb) < 0 ? T(-prod) : prod);
            }
        return out;
    }

    friend bool operator==(const Clifford& a, const Clifford& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

    /// Sign of e_A e_B = sign * e_{A xor B}: one factor -1 for each pair
    /// (i in A, j in B) with i > j, and one for each shared index (e_i^2 = -1).
    static int blade_sign(Blade a, Blade b) {
        int swaps = 0;
        for (Blade rest = b; rest != 0; rest &= rest - 1) {
            const Blade low = rest & (~rest + 1);
            swaps += std::popcount(a & ~((low << 1) - 1));
        }
        swaps += std::popcount(a & b);
        return (swaps % 2 == 0) ? 1 : -1;
    }

private:
    static bool is_negligible(const T& v) {
        if constexpr (std::is_floating_point_v<T>) return std::abs(v) < 1e-15;
        else return lscat::is_zero(v);
    }
    void check_dim(const Clifford& o) const {
        if (m_ != o.m_) throw std::invalid_argument("Clifford: ambient dimension mismatch");
    }

    std::size_t m_;
    std::map<Blade, T> terms_;
};

using CliffordElement = Clifford<Rat>;
using CliffordD = Clifford<double>;

/// Tolerance used by the floating-point Spin checks.
inline constexpr double kSpinTolerance = 1e-12;

/// g is even, g g* = 1, and g e_i g* is a vector for each i.
bool is_spin(const CliffordElement& g);
bool is_spin(const CliffordD& g, double tol = kSpinTolerance);

/// Matrix of x -> g x g*: column i holds the coordinates of g e_i g*.
/// Throws std::invalid_argument if g is not in Spin(m).
QMat vector_action(const CliffordElement& g);

/// exp(theta E_k) for theta = 2 pi * turns: cos(pi t) - sin(pi t) e_{2k-1} e_{2k}.
/// Exact only when turns is a multiple of 1/2; throws std::domain_error otherwise.
/// spin_exp_E_float accepts any angle.
CliffordElement spin_exp_E(const Rat& turns, std::size_t k, std::size_t m);
CliffordD spin_exp_E_float(double turns, std::size_t k, std::size_t m);

/// c - s e_{2k-1} e_{2k} for a rational point (c, s) of the unit circle: the
/// exact rotor lifting the block rotation with (cos, sin) = (c^2 - s^2, 2cs).
CliffordElement spin_rotor(const Rat& c, const Rat& s, std::size_t k, std::size_t m);

/// exp of a torus point of Spin(m) in epsilon coordinates, theta_j = 2 pi H_j.
CliffordElement spin_exp_torus(const TorusPoint& h, std::size_t m);

/// m x m block rotation with block k equal to (cos, sin; -sin, cos).
QMat so_block_rotation(std::size_t m, std::size_t k, const Rat& cos, const Rat& sin);
/// exp_SO(sum_j 2 pi H_j E_j) for H_j in (1/4)Z, exact.
QMat so_exp_torus(const TorusPoint& h, std::size_t m);

/// exp v_k in Spin(2n+1) (family B) or Spin(2n) (family D).
CliffordElement spin_vertex_element(Family family, int n, std::size_t k);
/// 2n+1 for B, 2n for D; throws std::invalid_argument for other families.
std::size_t spin_ambient_dim(Family family, int n);

/// Witness for the two-point fibre of the double cover over A(exp v_k): a
/// Weyl group element w (a product of root reflections) with
/// exp(w v_k) = -exp(v_k).
struct DoublePointFiber {
    QMat weyl;                     // w acting on torus points
    TorusPoint moved_vertex;       // w(v_k)
    CliffordElement element;       // exp v_k
    CliffordElement moved_element; // exp w(v_k)
};
/// Requires 2 <= k <= n for B and 2 <= k <= n - 2 for D.
DoublePointFiber double_point_fiber(Family family, int n, std::size_t k);

/// "1", "-1", "-e1e2e3e4", "3/5-4/5e1e2", ...
std::string to_string(const CliffordElement& g);

}  // namespace lscat
