#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lscat/exact/complex.hpp"
#include "lscat/exact/quaternion.hpp"
#include "lscat/exact/rational.hpp"

namespace lscat {

/// Dense row-major matrix over a (possibly noncommutative) ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    [[nodiscard]] std::vector<T> col(std::size_t j) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    /// Conjugate transpose (entrywise conj, which is the identity for Rat).
    [[nodiscard]] Matrix star() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = lscat::conj((*this)(i, j));
        return t;
    }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("Matrix::set_block");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (!lscat::is_zero(x)) return false;
        return true;
    }
    [[nodiscard]] bool is_identity() const { return is_square() && *this == identity(rows_); }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (lscat::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    /// Left scalar multiple s*M.
    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.data_) x = s * x;
        return m;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: matrix-vector dimension mismatch");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!lscat::is_zero(v[j]) && !lscat::is_zero(a(i, j))) r[i] += a(i, j) * v[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    [[nodiscard]] const std::vector<T>& data() const { return data_; }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
        }
        return os << ']';
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QVec = std::vector<Rat>;
using QMat = Matrix<Rat>;
using CMat = Matrix<CRat>;
using QuatMatrix = Matrix<QuatRat>;
using QuatMatrixD = Matrix<QuatD>;

// Vector helpers over Rat.
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rat& s, const QVec& v);
Rat dot(const QVec& a, const QVec& b);
bool is_zero_vec(const QVec& v);
QVec unit_vector(std::size_t dim, std::size_t i);
std::string to_string(const QVec& v);

struct QVecHash {
    std::size_t operator()(const QVec& v) const noexcept {
        std::size_t seed = v.size();
        for (const auto& x : v) hash_combine(seed, x.hash());
        return seed;
    }
};

struct QMatHash {
    std::size_t operator()(const QMat& m) const noexcept {
        std::size_t seed = m.rows() * 31 + m.cols();
        for (const auto& x : m.data()) hash_combine(seed, x.hash());
        return seed;
    }
};

/// Exact solution of A x = b. Free variables are set to zero; std::nullopt when
/// the system is inconsistent. Throws std::invalid_argument on dimension mismatch.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Commutative-field elimination, instantiated for Rat and CRat.
template <class T>
std::size_t rank(Matrix<T> m);
template <class T>
T determinant(Matrix<T> m);
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m);

/// Reduced column-echelon form over the quaternions, obtained by column
/// operations (right multiplication by invertible matrices). Pivot entries are
/// 1, every other entry in a pivot row is 0, and zero columns are moved last.
struct ColumnEchelon {
    QuatMatrix form;
    std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(QuatMatrix m);

/// Rank of M over H, with H^n viewed as a right vector space.
std::size_t quat_rank(const QuatMatrix& m);

}  // namespace lscat
