#include "lscat/realizations/symplectic.hpp"

#include <stdexcept>

namespace lscat {

CMat phi_embed(const QuatMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    CMat out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const QuatRat& q = m(i, j);
            const CRat a(q.a, q.b), b(q.c, q.d);
            out(i, j) = a;
            out(i, c + j) = b;
            out(r + i, j) = -b.conj();
            out(r + i, c + j) = a.conj();
        }
    return out;
}

QuatMatrix phi_unembed(const CMat& cm) {
    if (cm.rows() % 2 != 0 || cm.cols() % 2 != 0) throw std::invalid_argument("phi_unembed: odd dimensions");
    const std::size_t r = cm.rows() / 2, c = cm.cols() / 2;
    QuatMatrix out(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const CRat& a = cm(i, j);
            const CRat& b = cm(i, c + j);
            if (cm(r + i, j) != -b.conj() || cm(r + i, c + j) != a.conj())
                throw std::invalid_argument("phi_unembed: matrix is not in the image of phi");
            out(i, j) = QuatRat(a.re, a.im, b.re, b.im);
        }
    return out;
}

CRat reduced_norm(const QuatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("reduced_norm: square matrix required");
    return determinant(phi_embed(m));
}

bool is_symplectic(const QuatMatrix& g) {
    if (!g.is_square()) return false;
    if (!(g * g.star()).is_identity()) return false;
    return reduced_norm(g) == CRat(1);
}

QuatMatrix sp_exp_torus(const TorusPoint& h) {
    QuatMatrix out(h.size(), h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
        const Rat quarter = Rat(4) * h[j].frac();
        if (!quarter.is_integer())
            throw std::domain_error("sp_exp_torus: coordinate " + h[j].str() + " is not a multiple of 1/4");
        switch (quarter.to_long()) {
            case 0: out(j, j) = QuatRat(Rat(1)); break;
            case 1: out(j, j) = QuatRat::unit_i(); break;
            case 2: out(j, j) = QuatRat(Rat(-1)); break;
            default: out(j, j) = -QuatRat::unit_i(); break;
        }
    }
    return out;
}

QuatMatrix sp_exp_vertex(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("sp_exp_vertex: k must lie in 0..n");
    const FundamentalAlcove alcove(build(LieType::make(Family::C, n)));
    return sp_exp_torus(alcove.vertex(static_cast<std::size_t>(k)));
}

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

QuatRat random_unit_quaternion(std::mt19937_64& rng, long max_abs) {
    QuatRat p;
    while (p.is_zero())
        p = QuatRat(Rat(draw(rng, -max_abs, max_abs)), Rat(draw(rng, -max_abs, max_abs)),
                    Rat(draw(rng, -max_abs, max_abs)), Rat(draw(rng, -max_abs, max_abs)));
    const QuatRat sq = p * p;
    const Rat n = p.norm2();
    return {sq.a / n, sq.b / n, sq.c / n, sq.d / n};
}

std::pair<Rat, Rat> random_circle_point(std::mt19937_64& rng, long max_abs) {
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
        a = draw(rng, -max_abs, max_abs);
        b = draw(rng, -max_abs, max_abs);
    }
    const Rat n(a * a + b * b);
    return {Rat(a * a - b * b) / n, Rat(2 * a * b) / n};
}

QuatMatrix random_symplectic(std::size_t n, std::mt19937_64& rng, int factors) {
    QuatMatrix g = QuatMatrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        QuatMatrix step = QuatMatrix::identity(n);
        switch (draw(rng, 0, 2)) {
            case 0:
                for (std::size_t i = 0; i < n; ++i) step(i, i) = random_unit_quaternion(rng);
                break;
            case 1:
                if (n >= 2) {
                    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
                    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
                    if (j >= i) ++j;
                    const auto [c, s] = random_circle_point(rng);
                    step(i, i) = QuatRat(c);
                    step(j, j) = QuatRat(c);
                    step(i, j) = QuatRat(s);
                    step(j, i) = QuatRat(-s);
                }
                break;
            default:
                if (n >= 2) {
                    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
                    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
                    if (j >= i) ++j;
                    step(i, i) = QuatRat();
                    step(j, j) = QuatRat();
                    step(i, j) = QuatRat(Rat(1));
                    step(j, i) = QuatRat(Rat(1));
                }
                break;
        }
        g = g * step;
    }
    return g;
}

}  // namespace lscat
