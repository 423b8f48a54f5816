#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lscat/realizations/clifford.hpp"
#include "lscat/realizations/grassmannian.hpp"
#include "lscat/realizations/polar.hpp"
#include "lscat/realizations/symplectic.hpp"
#include "lscat/realizations/unitary.hpp"
#include "support/random.hpp"

using namespace lscat;

namespace {

QuatRat q(long a, long b = 0, long c = 0, long d = 0) { return {Rat(a), Rat(b), Rat(c), Rat(d)}; }

QuatMatrix block_diag(const QuatMatrix& a, const QuatMatrix& b) {
    QuatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

QuatMatrix vertex_diag(std::size_t n, std::size_t minus) {
    QuatMatrix d = QuatMatrix::identity(n);
    for (std::size_t i = 0; i < minus; ++i) d(i, i) = q(-1);
    return d;
}

QMat so_diag(std::size_t m, std::size_t minus) {
    QMat d = QMat::identity(m);
    for (std::size_t i = 0; i < minus; ++i) d(i, i) = Rat(-1);
    return d;
}

// Sp(n-1) embedded so that it fixes e_j (1-based).
QuatMatrix embed_fixing(const QuatMatrix& h, std::size_t j) {
    const std::size_t n = h.rows() + 1;
    QuatMatrix out(n, n);
    out(j - 1, j - 1) = q(1);
    for (std::size_t a = 0, ha = 0; a < n; ++a) {
        if (a == j - 1) continue;
        for (std::size_t b = 0, hb = 0; b < n; ++b) {
            if (b == j - 1) continue;
            out(a, b) = h(ha, hb++);
        }
        ++ha;
    }
    return out;
}

// Oracle for the Clifford sign rule: concatenate index words, bubble sort
// counting transpositions, then cancel equal neighbours with e_i^2 = -1.
std::pair<int, std::vector<int>> word_product(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    int sign = 1;
    for (std::size_t pass = 0; pass < a.size(); ++pass)
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                sign = -sign;
            }
    std::vector<int> out;
    for (int x : a) {
        if (!out.empty() && out.back() == x) {
            out.pop_back();
            sign = -sign;
        } else {
            out.push_back(x);
        }
    }
    return {sign, out};
}

CliffordElement::Blade mask_of(const std::vector<int>& word) {
    CliffordElement::Blade b = 0;
    for (int i : word) b |= CliffordElement::Blade{1} << (i - 1);
    return b;
}

std::vector<int> word_of(CliffordElement::Blade b) {
    std::vector<int> w;
    for (int i = 0; i < 32; ++i)
        if ((b >> i) & 1U) w.push_back(i + 1);
    return w;
}

CliffordElement monomial(std::size_t m, const std::vector<int>& word) {
    CliffordElement g = CliffordElement::scalar(m, Rat(1));
    for (int i : word) g = g * CliffordElement::basis(m, static_cast<std::size_t>(i));
    return g;
}

CliffordElement random_even(testing::Gen& gen, std::size_t m, int terms) {
    CliffordElement g(m);
    for (int t = 0; t < terms; ++t) {
        CliffordElement::Blade b = 0;
        while (std::popcount(b) % 2 != 0 || b == 0) b = static_cast<CliffordElement::Blade>(gen.integer(0, (1L << m) - 1));
        g.add(b, gen.rational(5, 4));
    }
    return g;
}

// Spin element built as a product of exact rotors in random coordinate planes.
CliffordElement random_spin(testing::Gen& gen, std::size_t m, int factors) {
    CliffordElement g = CliffordElement::scalar(m, Rat(1));
    for (int f = 0; f < factors; ++f) {
        const auto i = static_cast<std::size_t>(gen.integer(1, static_cast<long>(m)));
        auto j = static_cast<std::size_t>(gen.integer(1, static_cast<long>(m) - 1));
        if (j >= i) ++j;
        const auto [c, s] = random_circle_point(gen.engine());
        g = g * CliffordElement::rotor(m, i, j, c, s);
    }
    return g;
}

// Floating-point x -> g x g*, read off column by column.
std::vector<std::vector<double>> vector_action_float(const CliffordD& g) {
    const std::size_t m = g.dim();
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    const CliffordD gs = g.conj();
    for (std::size_t i = 1; i <= m; ++i) {
        const CliffordD img = g * CliffordD::basis(m, i) * gs;
        for (std::size_t r = 1; r <= m; ++r) a[r - 1][i - 1] = img.coeff(CliffordD::Blade{1} << (r - 1));
    }
    return a;
}

}  // namespace

TEST_CASE("phi embedding examples") {
    CHECK(phi_embed(QuatMatrix::identity(3)).is_identity());
    const CMat pj = phi_embed(QuatMatrix{{QuatRat::unit_j()}});
    CHECK(pj == CMat{{CRat(0), CRat(1)}, {CRat(-1), CRat(0)}});
    const CMat pi = phi_embed(QuatMatrix{{QuatRat::unit_i()}});
    CHECK(pi == CMat{{CRat::i(), CRat(0)}, {CRat(0), -CRat::i()}});
}

TEST_CASE("phi is an injective homomorphism") {
    testing::Gen gen(11);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            const QuatMatrix a = gen.quat_matrix(n, n), b = gen.quat_matrix(n, n);
            CHECK(phi_embed(a * b) == phi_embed(a) * phi_embed(b));
            CHECK(phi_embed(a + b) == phi_embed(a) + phi_embed(b));
            CHECK(phi_embed(a.star()) == phi_embed(a).star());
            CHECK(phi_unembed(phi_embed(a)) == a);
        }
    CHECK_THROWS_AS(phi_unembed(CMat{{CRat(1), CRat(0)}, {CRat(0), CRat(2)}}), std::invalid_argument);
}

TEST_CASE("reduced norm") {
    CHECK(reduced_norm(QuatMatrix::identity(3)) == CRat(1));
    CHECK(reduced_norm(QuatMatrix{{QuatRat::unit_j()}}) == CRat(1));
    testing::Gen gen(12);
    for (int trial = 0; trial < 20; ++trial) {
        const QuatRat x = gen.quat();
        QuatMatrix d = QuatMatrix::identity(3);
        d(0, 0) = x;
        // Direct 2 x 2 determinant of (A B; -conj B conj A).
        const CRat a(x.a, x.b), b(x.c, x.d);
        const CRat oracle = a * a.conj() - b * (-b.conj());
        CHECK(reduced_norm(d) == oracle);
        CHECK(reduced_norm(d) == CRat(x.norm2()));
    }
    for (std::size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            const QuatMatrix a = gen.quat_matrix(n, n), b = gen.quat_matrix(n, n);
            const CRat na = reduced_norm(a);
            CHECK(reduced_norm(a * b) == na * reduced_norm(b));
            CHECK(na.is_real());
            CHECK(na.re >= Rat(0));
        }
}

TEST_CASE("symplectic membership") {
    CHECK(is_symplectic(QuatMatrix::identity(4)));
    CHECK(is_symplectic(vertex_diag(4, 1)));
    QuatMatrix d = QuatMatrix::identity(3);
    d(0, 0) = q(2);
    CHECK_FALSE(is_symplectic(d));
    CHECK_FALSE(is_symplectic(QuatMatrix(2, 3)));
    testing::Gen gen(13);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const QuatMatrix g = random_symplectic(n, gen.engine());
            CHECK(is_symplectic(g));
            CHECK(reduced_norm(g) == CRat(1));
        }
}

TEST_CASE("Sp vertex exponentials") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const QuatMatrix e = sp_exp_vertex(n, k);
            CHECK(e == vertex_diag(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
            CHECK(is_symplectic(e));
        }
    CHECK(sp_exp_vertex(3, 0).is_identity());
    CHECK(sp_exp_vertex(3, 3) == -QuatMatrix::identity(3));
    CHECK(sp_exp_vertex(2, 1) == QuatMatrix{{q(-1), q(0)}, {q(0), q(1)}});
    CHECK(sp_exp_torus({Rat(1, 4), Rat(-1, 4)}) == QuatMatrix{{q(0, 1), q(0)}, {q(0), q(0, -1)}});
    CHECK_THROWS_AS(sp_exp_torus({Rat(1, 3)}), std::domain_error);
    CHECK_THROWS_AS(sp_exp_vertex(2, 3), std::out_of_range);
}

TEST_CASE("SU central vertex elements") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const UnitaryDiagonal d = su_exp_vertex(n, static_cast<std::size_t>(k));
            REQUIRE(d.turns.size() == static_cast<std::size_t>(n + 1));
            // exp v_k = exp(-2 pi i k / (n+1)) Id.
            REQUIRE(d.scalar_turn().has_value());
            CHECK(*d.scalar_turn() == Rat(-k, n + 1).frac());
            CHECK(d.determinant_turn().is_zero());
            const auto z = d.to_complex();
            const double angle = -2.0 * std::numbers::pi * k / (n + 1);
            CHECK(std::abs(z[0] - std::polar(1.0, angle)) < 1e-12);
        }
    CHECK_THROWS_AS(su_exp_torus({Rat(1), Rat(0)}), std::invalid_argument);
}

TEST_CASE("Clifford product examples") {
    const std::size_t m = 4;
    const auto e1 = CliffordElement::basis(m, 1), e2 = CliffordElement::basis(m, 2);
    CHECK((e1 * e1).is_scalar(Rat(-1)));
    CHECK(e1 * e2 == monomial(m, {1, 2}));
    CHECK(e2 * e1 == -monomial(m, {1, 2}));
    CHECK((e1 * e2 * e1 * e2).is_scalar(Rat(-1)));
    CHECK(to_string(e2 * e1) == "-e1e2");
    CHECK_THROWS_AS(e1 * CliffordElement::basis(3, 1), std::invalid_argument);
}

TEST_CASE("Clifford sign rule matches word expansion") {
    testing::Gen gen(21);
    const std::size_t m = 6;
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = static_cast<CliffordElement::Blade>(gen.integer(0, 63));
        const auto b = static_cast<CliffordElement::Blade>(gen.integer(0, 63));
        const auto [sign, word] = word_product(word_of(a), word_of(b));
        CHECK(CliffordElement::blade_sign(a, b) == sign);
        CHECK(mask_of(word) == (a ^ b));
        CHECK(monomial(m, word_of(a)) * monomial(m, word_of(b)) ==
              CliffordElement::scalar(m, Rat(sign)) * monomial(m, word));
    }
}

TEST_CASE("Clifford conjugation") {
    const std::size_t m = 4;
    CHECK(CliffordElement::basis(m, 1).conj() == -CliffordElement::basis(m, 1));
    CHECK(monomial(m, {1, 2}).conj() == -monomial(m, {1, 2}));
    CHECK(CliffordElement::scalar(m, Rat(1)).conj().is_scalar(Rat(1)));
    testing::Gen gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_even(gen, 5, 4), b = random_even(gen, 5, 4);
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK(a.conj().conj() == a);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = static_cast<CliffordElement::Blade>(gen.integer(0, 31));
        // (x_1 ... x_r)* = (-1)^r x_r ... x_1, expanded directly.
        auto w = word_of(a);
        std::reverse(w.begin(), w.end());
        const Rat sign = (word_of(a).size() % 2 == 0) ? Rat(1) : Rat(-1);
        CHECK(monomial(5, word_of(a)).conj() == CliffordElement::scalar(5, sign) * monomial(5, w));
    }
}

TEST_CASE("Spin membership and vector action") {
    const std::size_t m = 3;
    CHECK(is_spin(CliffordElement::scalar(m, Rat(1))));
    CHECK(is_spin(CliffordElement::rotor(m, 1, 2, Rat(3, 5), Rat(4, 5))));
    CHECK_FALSE(is_spin(CliffordElement::basis(m, 1)));
    CHECK_FALSE(is_spin(CliffordElement::scalar(m, Rat(2))));
    CHECK(vector_action(CliffordElement::scalar(m, Rat(1))).is_identity());
    CHECK(vector_action(CliffordElement::scalar(m, Rat(-1))).is_identity());
    CHECK(vector_action(monomial(m, {1, 2})) == so_diag(m, 2));
    CHECK_THROWS_AS(vector_action(CliffordElement::basis(m, 1)), std::invalid_argument);
    // A(3/5 - 4/5 e1e2) rotates the (e1, e2)-plane by the doubled angle.
    const QMat r = vector_action(CliffordElement::rotor(m, 1, 2, Rat(3, 5), Rat(4, 5)));
    CHECK(r == so_block_rotation(m, 1, Rat(-7, 25), Rat(24, 25)));
}

TEST_CASE("vector action is a homomorphism onto SO(m)") {
    testing::Gen gen(23);
    for (std::size_t m = 2; m <= 7; ++m)
        for (int trial = 0; trial < 6; ++trial) {
            const auto g1 = random_spin(gen, m, 3), g2 = random_spin(gen, m, 3);
            REQUIRE(is_spin(g1));
            REQUIRE(is_spin(g2));
            const QMat a1 = vector_action(g1);
            CHECK((a1 * a1.transpose()).is_identity());
            CHECK(determinant(a1) == Rat(1));
            CHECK(vector_action(g1 * g2) == a1 * vector_action(g2));
            CHECK(vector_action(-g1) == a1);
        }
}

TEST_CASE("exp of the torus generators") {
    const std::size_t m = 5;
    CHECK(spin_exp_E(Rat(0), 1, m).is_scalar(Rat(1)));
    CHECK(spin_exp_E(Rat(1), 1, m).is_scalar(Rat(-1)));
    CHECK(spin_exp_E(Rat(1, 2), 2, m) == -monomial(m, {3, 4}));
    CHECK_THROWS_AS(spin_exp_E(Rat(1, 4), 1, m), std::domain_error);
    CHECK_THROWS_AS(spin_exp_E(Rat(1), 3, m), std::out_of_range);
    const auto f = spin_exp_E_float(0.25, 1, m);
    CHECK(std::abs(f.coeff(0) - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(f.coeff(3) + std::sqrt(0.5)) < 1e-15);
    CHECK(is_spin(f));
}

TEST_CASE("exp_SO equals A composed with exp") {
    // Exact on the grid where the half-angle is a quarter turn.
    for (std::size_t m = 2; m <= 9; ++m)
        for (std::size_t k = 1; 2 * k <= m; ++k)
            for (long halves = -4; halves <= 4; ++halves) {
                const Rat t(halves, 2);
                TorusPoint h(k, Rat(0));
                h[k - 1] = t;
                CHECK(vector_action(spin_exp_E(t, k, m)) == so_exp_torus(h, m));
            }
    // Exact at rational points of the circle.
    testing::Gen gen(24);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [c, s] = random_circle_point(gen.engine());
        const std::size_t m = static_cast<std::size_t>(gen.integer(2, 9));
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(m / 2)));
        CHECK(vector_action(spin_rotor(c, s, k, m)) == so_block_rotation(m, k, c * c - s * s, Rat(2) * c * s));
    }
    // Float mode on the full quarter-turn grid.
    for (std::size_t m = 2; m <= 9; ++m)
        for (std::size_t k = 1; 2 * k <= m; ++k)
            for (long quarters = -8; quarters <= 8; ++quarters) {
                const double t = static_cast<double>(quarters) / 4.0;
                const auto a = vector_action_float(spin_exp_E_float(t, k, m));
                const double theta = 2.0 * std::numbers::pi * t;
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c) {
                        double expect = r == c ? 1.0 : 0.0;
                        const std::size_t a0 = 2 * k - 2, b0 = 2 * k - 1;
                        if (r == a0 && c == a0) expect = std::cos(theta);
                        if (r == b0 && c == b0) expect = std::cos(theta);
                        if (r == a0 && c == b0) expect = std::sin(theta);
                        if (r == b0 && c == a0) expect = -std::sin(theta);
                        CHECK(std::abs(a[r][c] - expect) < 1e-12);
                    }
            }
}

TEST_CASE("Spin vertex elements") {
    CHECK(spin_vertex_element(Family::B, 3, 0).is_scalar(Rat(1)));
    CHECK(spin_vertex_element(Family::B, 3, 1).is_scalar(Rat(-1)));
    CHECK(to_string(spin_vertex_element(Family::B, 3, 2)) == "e1e2e3e4");
    CHECK(to_string(spin_vertex_element(Family::B, 3, 3)) == "-e1e2e3e4e5e6");
    for (int n = 2; n <= 4; ++n)
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
            const auto g = spin_vertex_element(Family::B, n, k);
            const std::size_t m = static_cast<std::size_t>(2 * n + 1);
            CHECK(vector_action(g) == so_diag(m, k == 1 ? 0 : 2 * k));
            if (k >= 2) {
                // (-1)^k prod_{j <= k} e_{2j-1} e_{2j}.
                std::vector<int> word;
                for (int j = 1; j <= static_cast<int>(k); ++j) {
                    word.push_back(2 * j - 1);
                    word.push_back(2 * j);
                }
                CHECK(g == CliffordElement::scalar(m, Rat(k % 2 == 0 ? 1 : -1)) * monomial(m, word));
            }
        }
    for (int n = 3; n <= 4; ++n) {
        const std::size_t m = static_cast<std::size_t>(2 * n);
        const auto un = static_cast<std::size_t>(n);
        for (std::size_t k = 0; k + 2 <= un; ++k)
            CHECK(vector_action(spin_vertex_element(Family::D, n, k)) == so_diag(m, k == 1 ? 0 : 2 * k));
        CHECK(vector_action(spin_vertex_element(Family::D, n, un - 1)) == -QMat::identity(m));
        CHECK(vector_action(spin_vertex_element(Family::D, n, un)) == -QMat::identity(m));
        // exp v_{n-1} = (-1)^{n-1} prod_{j <= n} e_{2j-1} e_{2j}.
        std::vector<int> word;
        for (int j = 1; j <= 2 * n; ++j) word.push_back(j);
        CHECK(spin_vertex_element(Family::D, n, un - 1) ==
              CliffordElement::scalar(m, Rat(n % 2 == 0 ? -1 : 1)) * monomial(m, word));
    }
    CHECK_THROWS_AS(spin_vertex_element(Family::C, 3, 1), std::invalid_argument);
}

TEST_CASE("two-point fibre of the double cover") {
    for (int n = 2; n <= 4; ++n)
        for (std::size_t k = 2; k <= static_cast<std::size_t>(n); ++k) {
            const auto fib = double_point_fiber(Family::B, n, k);
            CHECK(fib.moved_element == -fib.element);
            CHECK(fib.element != -fib.element);
            CHECK(vector_action(fib.element) == vector_action(fib.moved_element));
            CHECK(fib.moved_vertex[0] == Rat(-1, 2));
        }
    for (int n = 4; n <= 4; ++n)
        for (std::size_t k = 2; k + 2 <= static_cast<std::size_t>(n); ++k) {
            const auto fib = double_point_fiber(Family::D, n, k);
            CHECK(fib.moved_element == -fib.element);
            CHECK(vector_action(fib.element) == vector_action(fib.moved_element));
        }
    CHECK_THROWS_AS(double_point_fiber(Family::B, 3, 1), std::out_of_range);
}

TEST_CASE("Grassmannian canonical form") {
    const GrassPoint e(QuatMatrix{{q(1)}, {q(0)}});
    CHECK(grass_canonical(e) == e.rep());
    // (j; k) h with h = j^{-1}: k j^{-1} = -k j = i.
    const GrassPoint x(QuatMatrix{{QuatRat::unit_j()}, {QuatRat::unit_k()}});
    CHECK(grass_canonical(x) == QuatMatrix{{q(1)}, {QuatRat::unit_i()}});
    CHECK(QuatRat::unit_k() * QuatRat::unit_j().inverse() == QuatRat::unit_i());
    CHECK_THROWS_AS(GrassPoint(QuatMatrix{{q(1), q(2)}, {q(1), q(2)}}), std::invalid_argument);
    testing::Gen gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(n)));
        const QuatMatrix rep = random_full_rank(n, k, gen.engine());
        const QuatMatrix h = random_invertible(k, gen.engine());
        CHECK(GrassPoint(rep) == GrassPoint(rep * h));
        CHECK(grass_canonical(GrassPoint(grass_canonical(GrassPoint(rep)))) == grass_canonical(GrassPoint(rep)));
    }
}

TEST_CASE("X and Y subsets") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            const GrassPoint coord(QuatMatrix::identity(n).block(0, 0, n, k));
            CHECK(in_X(1, k, coord));
            CHECK(in_Y(n, k, coord));
            CHECK_FALSE(in_Y(1, k, coord));
            CHECK_THROWS_AS(in_X(k + 2, k, coord), std::out_of_range);
            CHECK_THROWS_AS(in_Y(n + 1, k, coord), std::out_of_range);
        }
    testing::Gen gen(32);
    // No line of H^2 contains both e_1 and e_2.
    for (int trial = 0; trial < 200; ++trial) {
        const GrassPoint x(random_full_rank(2, 1, gen.engine(), 1));
        CHECK_FALSE((in_X(1, 1, x) && in_X(2, 1, x)));
    }
    CHECK(in_X(1, 1, GrassPoint(QuatMatrix{{q(3, 1)}, {q(0)}})));
    CHECK_FALSE(in_X(2, 1, GrassPoint(QuatMatrix{{q(3, 1)}, {q(0)}})));
}

TEST_CASE("the complements of X cover the Grassmannian") {
    testing::Gen gen(33);
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k <= std::min<std::size_t>(2, n - 1); ++k)
            for (int trial = 0; trial < 500; ++trial) {
                // Small entries make coordinate-aligned planes common.
                const GrassPoint x(random_full_rank(n, k, gen.engine(), trial % 2 == 0 ? 1 : 3));
                bool covered = false;
                for (std::size_t j = 1; j <= k + 1; ++j) covered = covered || !in_X(j, k, x);
                CHECK(covered);
            }
}

TEST_CASE("retraction onto Y") {
    testing::Gen gen(34);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 30; ++trial) {
                const GrassPoint x(random_full_rank(n, k, gen.engine(), 2));
                for (std::size_t j = 1; j <= k + 1; ++j) {
                    if (in_X(j, k, x)) {
                        CHECK_THROWS_AS(grass_retract(j, k, x, Rat(1, 2)), std::invalid_argument);
                        continue;
                    }
                    CHECK(grass_retract(j, k, x, Rat(0)) == x);
                    for (const Rat s : {Rat(1, 4), Rat(1, 2), Rat(3, 4)})
                        CHECK(quat_rank(grass_retract(j, k, x, s).rep()) == k);
                    const GrassPoint end = grass_retract(j, k, x, Rat(1));
                    CHECK(in_Y(j, k, end));
                }
            }
    const GrassPoint x(QuatMatrix{{q(1)}, {q(1)}});
    CHECK_THROWS_AS(grass_retract(1, 1, x, Rat(2)), std::invalid_argument);
}

TEST_CASE("tau_k on the orbit") {
    testing::Gen gen(35);
    CHECK(tau_k(QuatMatrix::identity(3), 1) == GrassPoint(QuatMatrix::identity(3).block(0, 0, 3, 1)));
    CHECK(tau_k(QuatMatrix::identity(3), 2) == GrassPoint(QuatMatrix::identity(3).block(0, 2, 3, 1)));
    QuatMatrix bad = QuatMatrix::identity(2);
    bad(0, 0) = q(2);
    CHECK_THROWS_AS(tau_k(bad, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau_k(QuatMatrix::identity(2), 2), std::invalid_argument);
    for (int trial = 0; trial < 20; ++trial) {
        const QuatMatrix g = random_symplectic(2, gen.engine());
        CHECK(quat_rank(tau_k(g, 1).rep()) == 1);
    }
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 10; ++trial) {
                const QuatMatrix g = random_symplectic(n, gen.engine());
                const QuatMatrix h = block_diag(random_symplectic(k, gen.engine()),
                                                random_symplectic(n - k, gen.engine()));
                // The block subgroup stabilises exp v_k and tau_k is constant on it.
                CHECK(orbit_element(h, k) == vertex_diag(n, k));
                CHECK(tau_k(g * h, k) == tau_k(g, k));
                CHECK(orbit_tau(orbit_element(g, k), k) == tau_k(g, k));
                CHECK(is_symplectic(orbit_element(g, k)));
            }
}

TEST_CASE("tau_k separates conjugates") {
    testing::Gen gen(36);
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (int trial = 0; trial < 15; ++trial) {
                const QuatMatrix g1 = random_symplectic(n, gen.engine());
                QuatMatrix g2 = random_symplectic(n, gen.engine(), 2);
                if (trial % 2 == 0)
                    g2 = g1 * block_diag(random_symplectic(k, gen.engine()), random_symplectic(n - k, gen.engine()));
                const bool same_element = orbit_element(g1, k) == orbit_element(g2, k);
                const bool same_plane = tau_k(g1, k) == tau_k(g2, k);
                CHECK(same_element == same_plane);
                if (trial % 2 == 0) CHECK(same_element);
            }
}

TEST_CASE("block structure of the preimage of Y") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) CHECK(block_structure_check(vertex_diag(n, k), n, k));

    QuatMatrix off = vertex_diag(3, 1);
    off(2, 0) = q(1);
    CHECK_THROWS_AS(block_structure_check(off, 3, 1), std::invalid_argument);
    CHECK_FALSE(block_structure_check(vertex_diag(3, 1), 1, 1));
    QuatMatrix givens = QuatMatrix::identity(3);
    givens(0, 0) = givens(2, 2) = QuatRat(Rat(3, 5));
    givens(0, 2) = QuatRat(Rat(4, 5));
    givens(2, 0) = QuatRat(Rat(-4, 5));
    const QuatMatrix mixed = orbit_element(givens, 1);
    REQUIRE_FALSE(mixed(2, 0).is_zero());
    CHECK_FALSE(block_structure_check(mixed, 3, 1));
    CHECK_THROWS_AS(block_structure_check(vertex_diag(3, 1), 4, 1), std::invalid_argument);

    testing::Gen gen(37);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t j = 1; j <= n; ++j)
                for (int trial = 0; trial < 3; ++trial) {
                    // Conjugate exp v_k by an element fixing e_j. The resulting
                    // orbit element has tau_k in Y_{j,k} exactly when e_j lies in
                    // the eigenspace complementary to the plane.
                    const bool small = grass_dim(n, k) == k;
                    const bool witness = small ? j > k : j <= k;
                    const QuatMatrix h = embed_fixing(random_symplectic(n - 1, gen.engine()), j);
                    REQUIRE(is_symplectic(h));
                    const QuatMatrix x = orbit_element(h, k);
                    const GrassPoint plane = orbit_tau(x, k);
                    CHECK(in_Y(j, plane.k(), plane) == witness);
                    CHECK(block_structure_check(x, j, k) == witness);
                    if (witness && small) {
                        // The centre is +1 here, so the complement carries all k
                        // of the -1 eigenvalues, not k - 1.
                        QuatMatrix c(n - 1, n - 1);
                        for (std::size_t a = 0, ca = 0; a < n; ++a) {
                            if (a == j - 1) continue;
                            for (std::size_t b = 0, cb = 0; b < n; ++b)
                                if (b != j - 1) c(ca, cb++) = x(a, b);
                            ++ca;
                        }
                        CHECK(is_conjugate_to_vertex(c, k));
                        CHECK_FALSE(is_conjugate_to_vertex(c, k - 1));
                    }
                }
    // Any orbit element whose plane lies in Y_{j,k} has the block form.
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3, k = static_cast<std::size_t>(gen.integer(1, 2));
        const QuatMatrix x = orbit_element(random_symplectic(n, gen.engine(), 3), k);
        const GrassPoint plane = orbit_tau(x, k);
        for (std::size_t j = 1; j <= n; ++j)
            if (in_Y(j, plane.k(), plane)) CHECK(block_structure_check(x, j, k));
    }
}

TEST_CASE("polar decomposition recovers the compact factor") {
    testing::Gen gen(41);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const QuatMatrixD g = to_double(random_symplectic(n, gen.engine()));
            const QuatMatrixD kappa = polar_sp_part(g);
            CHECK(max_abs_diff(kappa, g) < 1e-10);
            CHECK(unitarity_defect(kappa) <= 1e-10);
        }
    QuatMatrix d(2, 2);
    d(0, 0) = q(2);
    d(1, 1) = QuatRat(Rat(1, 2));
    CHECK(max_abs_diff(polar_sp_part(to_double(d)), QuatMatrixD::identity(2)) < 1e-10);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const QuatMatrix u = random_symplectic(n, gen.engine());
            const QuatMatrix a = gen.quat_matrix(n, n);
            const QuatMatrix p = a * a.star() + QuatMatrix::identity(n);
            const QuatMatrixD kappa = polar_sp_part(to_double(u * p));
            CHECK(max_abs_diff(kappa, to_double(u)) < 1e-8);
        }
    CHECK_THROWS_AS(polar_sp_part(QuatMatrixD(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(polar_sp_part(QuatMatrixD(2, 2)), std::invalid_argument);
}
