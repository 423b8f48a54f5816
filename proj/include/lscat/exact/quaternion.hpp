#pragma once

#include <ostream>
#include <string>

#include "lscat/exact/complex.hpp"
#include "lscat/exact/rational.hpp"

namespace lscat {

inline bool is_zero(double x) { return x == 0.0; }
inline double inverse(double x) { return 1.0 / x; }
inline double conj(double x) { return x; }

/// Quaternion a + b i + c j + d k over T.
template <class T>
struct Quat {
    T a{}, b{}, c{}, d{};

    Quat() = default;
    Quat(T re) : a(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Quat(T a_, T b_, T c_, T d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Quat unit_i() { return {T(0), T(1), T(0), T(0)}; }
    static Quat unit_j() { return {T(0), T(0), T(1), T(0)}; }
    static Quat unit_k() { return {T(0), T(0), T(0), T(1)}; }

    [[nodiscard]] Quat conj() const { return {a, -b, -c, -d}; }
    [[nodiscard]] T norm2() const { return a * a + b * b + c * c + d * d; }
    [[nodiscard]] bool is_zero() const {
        return lscat::is_zero(a) && lscat::is_zero(b) && lscat::is_zero(c) && lscat::is_zero(d);
    }
    [[nodiscard]] bool is_real() const { return lscat::is_zero(b) && lscat::is_zero(c) && lscat::is_zero(d); }
    /// q^{-1} = conj(q) / |q|^2.
    [[nodiscard]] Quat inverse() const {
        const T n = norm2();
        return {a / n, -b / n, -c / n, -d / n};
    }

    Quat& operator+=(const Quat& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
    Quat& operator-=(const Quat& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    friend Quat operator+(Quat p, const Quat& q) { return p += q; }
    friend Quat operator-(Quat p, const Quat& q) { return p -= q; }
    friend Quat operator-(const Quat& p) { return {-p.a, -p.b, -p.c, -p.d}; }
    /// Hamilton product.
    friend Quat operator*(const Quat& p, const Quat& q) {
        return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
    }
    friend bool operator==(const Quat& p, const Quat& q) = default;

    friend std::ostream& operator<<(std::ostream& os, const Quat& q) {
        return os << '(' << q.a << ',' << q.b << ',' << q.c << ',' << q.d << ')';
    }
};

using QuatRat = Quat<Rat>;
using QuatD = Quat<double>;

template <class T>
bool is_zero(const Quat<T>& q) { return q.is_zero(); }
template <class T>
Quat<T> inverse(const Quat<T>& q) { return q.inverse(); }
template <class T>
Quat<T> conj(const Quat<T>& q) { return q.conj(); }

inline QuatRat quat_mul(const QuatRat& p, const QuatRat& q) { return p * q; }

/// "a+bi+cj+dk" with zero terms omitted.
std::string to_string(const QuatRat& q);

}  // namespace lscat
