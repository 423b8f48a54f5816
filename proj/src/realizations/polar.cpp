#include "lscat/realizations/polar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace lscat {

namespace {

using CMatD = Eigen::MatrixXcd;

constexpr int kMaxIterations = 100;
constexpr double kTolerance = 1e-10;

CMatD embed(const QuatMatrixD& m) {
    const auto r = static_cast<Eigen::Index>(m.rows()), c = static_cast<Eigen::Index>(m.cols());
    CMatD out(2 * r, 2 * c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) {
            const QuatD& q = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const std::complex<double> a(q.a, q.b), b(q.c, q.d);
            out(i, j) = a;
            out(i, c + j) = b;
            out(r + i, j) = -std::conj(b);
            out(r + i, c + j) = std::conj(a);
        }
    return out;
}

// Reads the quaternion matrix back from the top half; the Newton iterates
// stay in the image of phi because phi is a *-homomorphism.
QuatMatrixD unembed(const CMatD& cm) {
    const std::size_t r = static_cast<std::size_t>(cm.rows()) / 2, c = static_cast<std::size_t>(cm.cols()) / 2;
    QuatMatrixD out(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const auto a = cm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            const auto b = cm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c + j));
            out(i, j) = QuatD(a.real(), a.imag(), b.real(), b.imag());
        }
    return out;
}

}  // namespace

QuatMatrixD to_double(const QuatMatrix& m) {
    QuatMatrixD out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QuatRat& q = m(i, j);
            out(i, j) = QuatD(q.a.to_double(), q.b.to_double(), q.c.to_double(), q.d.to_double());
        }
    return out;
}

double max_abs_diff(const QuatMatrixD& a, const QuatMatrixD& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::sqrt((a(i, j) - b(i, j)).norm2()));
    return worst;
}

double unitarity_defect(const QuatMatrixD& g) {
    return max_abs_diff(g * g.star(), QuatMatrixD::identity(g.rows()));
}

QuatMatrixD polar_sp_part(const QuatMatrixD& g) {
    if (!g.is_square() || g.rows() == 0) throw std::invalid_argument("polar_sp_part: square matrix required");
    CMatD u = embed(g);
    const auto id = CMatD::Identity(u.rows(), u.cols());
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::PartialPivLU<CMatD> lu(u.adjoint());
        if (std::abs(lu.determinant()) == 0.0) throw std::invalid_argument("polar_sp_part: singular matrix");
        const CMatD next = 0.5 * (u + lu.inverse());
        const double step = (next - u).cwiseAbs().maxCoeff();
        u = next;
        if (step < 1e-14 * std::max(1.0, u.cwiseAbs().maxCoeff()) &&
            (u * u.adjoint() - id).cwiseAbs().maxCoeff() <= kTolerance)
            return unembed(u);
    }
    if ((u * u.adjoint() - id).cwiseAbs().maxCoeff() <= kTolerance) return unembed(u);
    throw std::runtime_error("polar_sp_part: Newton iteration did not converge in 100 steps");
}

}  // namespace lscat
