#include <sstream>

#include "lscat/exact/matrix.hpp"

namespace lscat {

QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: dimension mismatch");
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: dimension mismatch");
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

QVec operator-(const QVec& a) {
    QVec r(a);
    for (auto& x : r) x = -x;
    return r;
}

QVec operator*(const Rat& s, const QVec& v) {
    QVec r(v);
    for (auto& x : r) x *= s;
    return r;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

QVec unit_vector(std::size_t dim, std::size_t i) {
    QVec v(dim, Rat(0));
    v.at(i) = Rat(1);
    return v;
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A has " + std::to_string(a.rows()) +
                                                          " rows but b has " + std::to_string(b.size()) + " entries");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    QMat aug(m, n + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < m; ++i) aug(i, n) = b[i];

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug(p, c).is_zero()) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(r, j));
        const Rat inv = aug(r, c).inverse();
        for (std::size_t j = c; j <= n; ++j) aug(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug(i, c).is_zero()) continue;
            const Rat f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!aug(i, n).is_zero()) return std::nullopt;

    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug(i, n);
    return x;
}

namespace {

// Forward elimination returning (rank, determinant sign-and-product).
template <class T>
std::pair<std::size_t, T> eliminate(Matrix<T>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    T det(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) {
            det = T(0);
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
            det = -det;
        }
        det *= m(r, c);
        const T inv = inverse(m(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m(i, c))) continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (r < rows) det = T(0);
    return {r, det};
}

}  // namespace

template <class T>
std::size_t rank(Matrix<T> m) {
    return eliminate(m).first;
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    return eliminate(m).second;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const T s = inverse(a(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = s * a(c, j);
            inv(c, j) = s * inv(c, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            const T f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

template std::size_t rank<Rat>(Matrix<Rat>);
template std::size_t rank<CRat>(Matrix<CRat>);
template Rat determinant<Rat>(Matrix<Rat>);
template CRat determinant<CRat>(Matrix<CRat>);
template std::optional<Matrix<Rat>> inverse<Rat>(const Matrix<Rat>&);
template std::optional<Matrix<CRat>> inverse<CRat>(const Matrix<CRat>&);

ColumnEchelon column_echelon(QuatMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    ColumnEchelon out;
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        std::size_t p = c;
        while (p < cols && m(r, p).is_zero()) ++p;
        if (p == cols) continue;
        if (p != c)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, p), m(i, c));
        // Right-multiply column c by the inverse of its pivot.
        const QuatRat inv = m(r, c).inverse();
        for (std::size_t i = 0; i < rows; ++i) m(i, c) = m(i, c) * inv;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == c || m(r, j).is_zero()) continue;
            const QuatRat f = m(r, j);
            for (std::size_t i = 0; i < rows; ++i) m(i, j) -= m(i, c) * f;
        }
        out.pivot_rows.push_back(r);
        ++c;
    }
    out.form = std::move(m);
    return out;
}

std::size_t quat_rank(const QuatMatrix& m) { return column_echelon(m).pivot_rows.size(); }

std::string to_string(const QuatRat& q) {
    std::ostringstream os;
    bool any = false;
    auto term = [&](const Rat& x, const char* unit) {
        if (x.is_zero()) return;
        const bool neg = x.sign() < 0;
        const Rat mag = x.abs();
        if (any) os << (neg ? "-" : "+");
        else if (neg) os << '-';
        if (*unit == '\0' || mag != Rat(1)) os << mag;
        os << unit;
        any = true;
    };
    term(q.a, "");
    term(q.b, "i");
    term(q.c, "j");
    term(q.d, "k");
    if (!any) os << '0';
    return os.str();
}

}  // namespace lscat
