#include "lscat/realizations/grassmannian.hpp"

#include <stdexcept>

namespace lscat {

GrassPoint::GrassPoint(QuatMatrix rep) : rep_(std::move(rep)) {
    ColumnEchelon e = column_echelon(rep_);
    if (e.pivot_rows.size() != rep_.cols() || rep_.cols() == 0)
        throw std::invalid_argument("GrassPoint: representative must have full column rank");
    canonical_ = std::move(e.form);
}

GrassPoint GrassPoint::span_of(const QuatMatrix& m) {
    const ColumnEchelon e = column_echelon(m);
    if (e.pivot_rows.empty()) throw std::invalid_argument("GrassPoint::span_of: zero column space");
    return GrassPoint(e.form.block(0, 0, m.rows(), e.pivot_rows.size()));
}

QuatMatrix grass_canonical(const GrassPoint& x) { return x.canonical(); }

namespace {

void check_k(std::size_t k, const GrassPoint& x) {
    if (k != x.k()) throw std::out_of_range("Grassmannian: k does not match the point");
}

QuatMatrix delete_row(const QuatMatrix& m, std::size_t row) {
    QuatMatrix out(m.rows() - 1, m.cols());
    for (std::size_t i = 0, r = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(i, j);
        ++r;
    }
    return out;
}

}  // namespace

bool in_X(std::size_t j, std::size_t k, const GrassPoint& x) {
    check_k(k, x);
    if (j < 1 || j > k + 1 || j > x.n()) throw std::out_of_range("in_X: j must lie in 1..k+1");
    return quat_rank(delete_row(x.rep(), j - 1)) < k;
}

bool in_Y(std::size_t j, std::size_t k, const GrassPoint& x) {
    check_k(k, x);
    if (j < 1 || j > x.n()) throw std::out_of_range("in_Y: j must lie in 1..n");
    for (std::size_t c = 0; c < k; ++c)
        if (!x.canonical()(j - 1, c).is_zero()) return false;
    return true;
}

GrassPoint grass_retract(std::size_t j, std::size_t k, const GrassPoint& x, const Rat& s) {
    if (s < Rat(0) || s > Rat(1)) throw std::invalid_argument("grass_retract: s must lie in [0, 1]");
    if (in_X(j, k, x)) throw std::invalid_argument("grass_retract: point lies in X_{j,k}");
    QuatMatrix rep = x.rep();
    const QuatRat scale(Rat(1) - s);
    for (std::size_t c = 0; c < k; ++c) rep(j - 1, c) = rep(j - 1, c) * scale;
    return GrassPoint(std::move(rep));
}

std::size_t grass_dim(std::size_t n, std::size_t k) { return std::min(k, n - k); }

namespace {

void check_orbit_index(std::size_t n, std::size_t k) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("tau_k: k must lie in 1..n-1");
}

QuatMatrix vertex_element(std::size_t n, std::size_t k) {
    QuatMatrix d = QuatMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) d(i, i) = QuatRat(Rat(-1));
    return d;
}

}  // namespace

GrassPoint tau_k(const QuatMatrix& g, std::size_t k) {
    if (!is_symplectic(g)) throw std::invalid_argument("tau_k: g is not symplectic");
    const std::size_t n = g.rows();
    check_orbit_index(n, k);
    if (grass_dim(n, k) == k) return GrassPoint(g.block(0, 0, n, k));
    return GrassPoint(g.block(0, k, n, n - k));
}

QuatMatrix orbit_element(const QuatMatrix& g, std::size_t k) {
    if (!g.is_square() || k > g.rows()) throw std::invalid_argument("orbit_element: bad dimensions");
    return g * vertex_element(g.rows(), k) * g.star();
}

GrassPoint orbit_tau(const QuatMatrix& x, std::size_t k) {
    const std::size_t n = x.rows();
    check_orbit_index(n, k);
    const QuatMatrix id = QuatMatrix::identity(n);
    return GrassPoint::span_of(grass_dim(n, k) == k ? id - x : id + x);
}

bool is_conjugate_to_vertex(const QuatMatrix& x, std::size_t minus_count) {
    const std::size_t n = x.rows();
    if (!is_symplectic(x) || minus_count > n) return false;
    if (!(x * x).is_identity()) return false;
    // trace(phi(x)) = 2 * sum of the real parts of the diagonal.
    Rat re_trace;
    for (std::size_t i = 0; i < n; ++i) re_trace += x(i, i).a;
    return Rat(2) * re_trace == Rat(2 * (static_cast<long>(n) - 2 * static_cast<long>(minus_count)));
}

bool block_structure_check(const QuatMatrix& x, std::size_t j, std::size_t k) {
    if (!is_symplectic(x)) throw std::invalid_argument("block_structure_check: x is not symplectic");
    const std::size_t n = x.rows();
    check_orbit_index(n, k);
    if (j < 1 || j > n) throw std::invalid_argument("block_structure_check: j must lie in 1..n");
    const std::size_t r = j - 1;
    const bool small = grass_dim(n, k) == k;
    const QuatRat centre(Rat(small ? 1 : -1));
    if (x(r, r) != centre) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (i != r && (!x(r, i).is_zero() || !x(i, r).is_zero())) return false;
    const QuatMatrix complement = [&] {
        QuatMatrix c(n - 1, n - 1);
        for (std::size_t a = 0, ca = 0; a < n; ++a) {
            if (a == r) continue;
            for (std::size_t b = 0, cb = 0; b < n; ++b) {
                if (b == r) continue;
                c(ca, cb++) = x(a, b);
            }
            ++ca;
        }
        return c;
    }();
    return is_conjugate_to_vertex(complement, small ? k : k - 1);
}

namespace {

QuatRat random_quat(std::mt19937_64& rng, long max_abs) {
    auto draw = [&] {
        return Rat(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_abs + 1)) - max_abs);
    };
    Rat a = draw(), b = draw(), c = draw(), d = draw();
    return {a, b, c, d};
}

QuatMatrix random_matrix(std::size_t n, std::size_t k, std::mt19937_64& rng, long max_abs) {
    QuatMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = random_quat(rng, max_abs);
    return m;
}

}  // namespace

QuatMatrix random_full_rank(std::size_t n, std::size_t k, std::mt19937_64& rng, long max_abs) {
    if (k == 0 || k > n) throw std::invalid_argument("random_full_rank: need 1 <= k <= n");
    for (;;) {
        QuatMatrix m = random_matrix(n, k, rng, max_abs);
        if (quat_rank(m) == k) return m;
    }
}

QuatMatrix random_invertible(std::size_t k, std::mt19937_64& rng, long max_abs) {
    return random_full_rank(k, k, rng, max_abs);
}

}  // namespace lscat
