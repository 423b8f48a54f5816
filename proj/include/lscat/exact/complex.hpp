#pragma once

#include <ostream>
#include <string>

#include "lscat/exact/rational.hpp"

namespace lscat {

/// Complex number over an ordered field T (Rat for exact work).
template <class T>
struct Cplx {
    T re{};
    T im{};

    Cplx() = default;
    Cplx(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static Cplx i() { return {T(0), T(1)}; }

    [[nodiscard]] Cplx conj() const { return {re, -im}; }
    [[nodiscard]] T norm2() const { return re * re + im * im; }
    [[nodiscard]] bool is_zero() const { return lscat::is_zero(re) && lscat::is_zero(im); }
    [[nodiscard]] bool is_real() const { return lscat::is_zero(im); }
    [[nodiscard]] Cplx inverse() const {
        const T n = norm2();
        return {re / n, -im / n};
    }

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) {
        T r = re * o.re - im * o.im;
        T i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Cplx& operator/=(const Cplx& o) { return *this *= o.inverse(); }

    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
    friend Cplx operator/(Cplx a, const Cplx& b) { return a /= b; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Cplx& a, const Cplx& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Cplx& z) {
        return os << '(' << z.re << ',' << z.im << ')';
    }
};

using CRat = Cplx<Rat>;

template <class T>
bool is_zero(const Cplx<T>& z) { return z.is_zero(); }
template <class T>
Cplx<T> inverse(const Cplx<T>& z) { return z.inverse(); }
template <class T>
Cplx<T> conj(const Cplx<T>& z) { return z.conj(); }

}  // namespace lscat
