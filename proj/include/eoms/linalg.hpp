#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eoms::linalg {

/// Dense real matrix, row-major. Sized for the small fixed problems of this
/// library (n <= 36); there are no blocked or sparse paths.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> entries);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }
    [[nodiscard]] std::span<double> data() noexcept { return data_; }

    [[nodiscard]] Matrix transposed() const;
    [[nodiscard]] double trace() const;
    [[nodiscard]] double frobenius_norm() const;
    /// Maximum absolute row sum.
    [[nodiscard]] double inf_norm() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool all_finite() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend std::vector<double> operator*(const Matrix& a, std::span<const double> x);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Eigenvalues of a real matrix, with multiplicity. Complex pairs are stored
/// adjacently, positive imaginary part first.
struct ComplexSpectrum {
    std::vector<std::complex<double>> values;

    [[nodiscard]] double spectral_abscissa() const;
    [[nodiscard]] double min_modulus() const;
    [[nodiscard]] std::complex<double> sum() const;
    [[nodiscard]] std::complex<double> product() const;
};

/// Eigenvalues by balancing, Householder reduction to upper Hessenberg form
/// and Francis double-shift QR. Throws EigenFailure when the iteration budget
/// of 30 sweeps per eigenvalue is exhausted.
[[nodiscard]] ComplexSpectrum eig_general(const Matrix& m);

/// LU factorization with partial pivoting, P*A = L*U packed in one matrix.
class LuDecomposition {
public:
    /// Throws SingularSystem when a pivot falls below 1e-14 * ||m||_inf.
    explicit LuDecomposition(const Matrix& m);

    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;
    [[nodiscard]] double determinant() const;

    [[nodiscard]] Matrix lower() const;
    [[nodiscard]] Matrix upper() const;
    /// Row permutation: row i of P*A is row perm()[i] of A.
    [[nodiscard]] std::span<const std::size_t> perm() const noexcept { return perm_; }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
};

[[nodiscard]] std::vector<double> lu_solve(const Matrix& m, std::span<const double> rhs);

[[nodiscard]] double determinant(const Matrix& m);

[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b);

/// exp(m * t) by scaling and squaring around a diagonal Pade(6,6) approximant.
[[nodiscard]] Matrix matrix_exponential(const Matrix& m, double t);

}  // namespace eoms::linalg
