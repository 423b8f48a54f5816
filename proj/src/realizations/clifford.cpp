#include "lscat/realizations/clifford.hpp"

#include <numbers>
#include <sstream>

namespace lscat {

namespace {

template <class T>
bool close_to(const T& a, const T& b, double tol) {
    if constexpr (std::is_floating_point_v<T>) return std::abs(a - b) <= tol;
    else return a == b;
}

template <class T>
bool spin_check(const Clifford<T>& g, double tol) {
    if (!g.is_even()) return false;
    const std::size_t m = g.dim();
    const Clifford<T> gs = g.conj();
    const Clifford<T> norm = g * gs;
    for (const auto& [b, v] : norm.terms())
        if (!close_to(v, b == 0 ? T(1) : T(0), tol)) return false;
    if (norm.terms().empty()) return false;
    for (std::size_t i = 1; i <= m; ++i) {
        const Clifford<T> img = g * Clifford<T>::basis(m, i) * gs;
        for (const auto& [b, v] : img.terms())
            if (std::popcount(b) != 1 && !close_to(v, T(0), tol)) return false;
    }
    return true;
}

}  // namespace

bool is_spin(const CliffordElement& g) { return spin_check(g, 0.0); }
bool is_spin(const CliffordD& g, double tol) { return spin_check(g, tol); }

QMat vector_action(const CliffordElement& g) {
    if (!is_spin(g)) throw std::invalid_argument("vector_action: element is not in Spin(m)");
    const std::size_t m = g.dim();
    const CliffordElement gs = g.conj();
    QMat a(m, m);
    for (std::size_t i = 1; i <= m; ++i) {
        const CliffordElement img = g * CliffordElement::basis(m, i) * gs;
        for (std::size_t r = 1; r <= m; ++r) a(r - 1, i - 1) = img.coeff(CliffordElement::Blade{1} << (r - 1));
    }
    return a;
}

namespace {

void check_block(std::size_t k, std::size_t m) {
    if (k < 1 || 2 * k > m) throw std::out_of_range("Spin: block index k must satisfy 1 <= 2k <= m");
}

}  // namespace

CliffordElement spin_exp_E(const Rat& turns, std::size_t k, std::size_t m) {
    check_block(k, m);
    const Rat halves = Rat(2) * turns;
    if (!halves.is_integer())
        throw std::domain_error("spin_exp_E: " + turns.str() + " turns is not a multiple of 1/2");
    // cos(pi t), sin(pi t) for t = halves / 2.
    static constexpr int kCos[4] = {1, 0, -1, 0};
    static constexpr int kSin[4] = {0, 1, 0, -1};
    const long q = ((halves.to_long() % 4) + 4) % 4;
    return CliffordElement::rotor(m, 2 * k - 1, 2 * k, Rat(kCos[q]), Rat(kSin[q]));
}

CliffordD spin_exp_E_float(double turns, std::size_t k, std::size_t m) {
    check_block(k, m);
    const double half = std::numbers::pi * turns;
    return CliffordD::rotor(m, 2 * k - 1, 2 * k, std::cos(half), std::sin(half));
}

CliffordElement spin_rotor(const Rat& c, const Rat& s, std::size_t k, std::size_t m) {
    check_block(k, m);
    if (c * c + s * s != Rat(1)) throw std::invalid_argument("spin_rotor: (c, s) is not on the unit circle");
    return CliffordElement::rotor(m, 2 * k - 1, 2 * k, c, s);
}

CliffordElement spin_exp_torus(const TorusPoint& h, std::size_t m) {
    if (2 * h.size() > m) throw std::invalid_argument("spin_exp_torus: too many torus coordinates for m");
    CliffordElement g = CliffordElement::scalar(m, Rat(1));
    for (std::size_t j = 0; j < h.size(); ++j)
        if (!h[j].is_zero()) g = g * spin_exp_E(h[j], j + 1, m);
    return g;
}

QMat so_block_rotation(std::size_t m, std::size_t k, const Rat& cos, const Rat& sin) {
    check_block(k, m);
    QMat r = QMat::identity(m);
    const std::size_t a = 2 * k - 2, b = 2 * k - 1;
    r(a, a) = cos;
    r(a, b) = sin;
    r(b, a) = -sin;
    r(b, b) = cos;
    return r;
}

QMat so_exp_torus(const TorusPoint& h, std::size_t m) {
    if (2 * h.size() > m) throw std::invalid_argument("so_exp_torus: too many torus coordinates for m");
    static constexpr int kCos[4] = {1, 0, -1, 0};
    static constexpr int kSin[4] = {0, 1, 0, -1};
    QMat out = QMat::identity(m);
    for (std::size_t j = 0; j < h.size(); ++j) {
        const Rat quarters = Rat(4) * h[j];
        if (!quarters.is_integer())
            throw std::domain_error("so_exp_torus: " + h[j].str() + " is not a multiple of 1/4");
        const long q = ((quarters.to_long() % 4) + 4) % 4;
        out = out * so_block_rotation(m, j + 1, Rat(kCos[q]), Rat(kSin[q]));
    }
    return out;
}

std::size_t spin_ambient_dim(Family family, int n) {
    if (family == Family::B) return static_cast<std::size_t>(2 * n + 1);
    if (family == Family::D) return static_cast<std::size_t>(2 * n);
    throw std::invalid_argument("Spin models exist for families B and D only");
}

CliffordElement spin_vertex_element(Family family, int n, std::size_t k) {
    const std::size_t m = spin_ambient_dim(family, n);
    const FundamentalAlcove alcove(build(LieType::make(family, n)));
    return spin_exp_torus(alcove.vertex(k), m);
}

DoublePointFiber double_point_fiber(Family family, int n, std::size_t k) {
    const std::size_t m = spin_ambient_dim(family, n);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t top = family == Family::B ? un : un - 2;
    if (k < 2 || k > top) throw std::out_of_range("double_point_fiber: k outside the generic vertex range");
    const RootSystem rs = build(LieType::make(family, n));
    const FundamentalAlcove alcove(rs);
    QMat w;
    if (family == Family::B) {
        w = weyl_reflection(rs, unit_vector(un, 0));
    } else {
        const QVec e1 = unit_vector(un, 0), en = unit_vector(un, un - 1);
        w = weyl_reflection(rs, e1 - en) * weyl_reflection(rs, e1 + en);
    }
    DoublePointFiber out{w, w * alcove.vertex(k), spin_exp_torus(alcove.vertex(k), m), CliffordElement(m)};
    out.moved_element = spin_exp_torus(out.moved_vertex, m);
    return out;
}

std::string to_string(const CliffordElement& g) {
    if (g.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : g.terms()) {
        const bool neg = v.sign() < 0;
        const Rat mag = v.abs();
        if (neg) os << '-';
        else if (!first) os << '+';
        if (b == 0 || mag != Rat(1)) os << mag;
        for (std::size_t i = 0; i < CliffordElement::kMaxDim; ++i)
            if ((b >> i) & 1U) os << 'e' << (i + 1);
        first = false;
    }
    return os.str();
}

}  // namespace lscat
