#include "eoms/linalg.hpp"

#include "eoms/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace eoms::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer list");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double Matrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        s += (*this)(i, i);
    }
    return s;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double Matrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            s += std::abs((*this)(r, c));
        }
        best = std::max(best, s);
    }
    return best;
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) {
        v *= s;
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix product: inner dimensions differ");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols_ != x.size()) {
        throw std::invalid_argument("Matrix-vector product: dimension mismatch");
    }
    std::vector<double> y(a.rows_, 0.0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols_; ++j) {
            s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

// ---------------------------------------------------------------------------
// Spectrum

double ComplexSpectrum::spectral_abscissa() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& z : values) {
        best = std::max(best, z.real());
    }
    return best;
}

double ComplexSpectrum::min_modulus() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : values) {
        best = std::min(best, std::abs(z));
    }
    return best;
}

std::complex<double> ComplexSpectrum::sum() const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& z : values) {
        s += z;
    }
    return s;
}

std::complex<double> ComplexSpectrum::product() const {
    std::complex<double> p{1.0, 0.0};
    for (const auto& z : values) {
        p *= z;
    }
    return p;
}

namespace {

// Parlett-Reinsch balancing by powers of the floating-point radix; a
// similarity transform, so eigenvalues are unchanged.
void balance(Matrix& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const std::size_t n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0;
            double c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            }
            if (c == 0.0 || r == 0.0) {
                continue;
            }
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) *= g;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    a(j, i) *= f;
                }
            }
        }
    }
}

// Householder similarity reduction to upper Hessenberg form.
void reduce_to_hessenberg(Matrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) {
        return;
    }
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double alpha = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            alpha += a(i, k) * a(i, k);
        }
        alpha = std::sqrt(alpha);
        if (alpha == 0.0) {
            continue;
        }
        if (a(k + 1, k) > 0.0) {
            alpha = -alpha;
        }
        std::fill(v.begin(), v.end(), 0.0);
        v[k + 1] = a(k + 1, k) - alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            v[i] = a(i, k);
        }
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        const double beta = 2.0 / vnorm2;
        // A <- H A
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) {
                s += v[i] * a(i, j);
            }
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) {
                a(i, j) -= s * v[i];
            }
        }
        // A <- A H
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) {
                s += a(i, j) * v[j];
            }
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= s * v[j];
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
        }
    }
}

double copy_sign(double magnitude, double sign_of) {
    return sign_of >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Francis double-shift QR on an upper Hessenberg matrix (eigenvalues only).
// Indices are signed because the deflation scan walks down to -1.
ComplexSpectrum hessenberg_qr(Matrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<double> wr(n, 0.0);
    std::vector<double> wi(n, 0.0);
    auto at = [&a](int r, int c) -> double& {
        return a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    };

    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(i - 1, 0); j < n; ++j) {
            anorm += std::abs(at(i, j));
        }
    }

    const int budget = 30 * n;
    int total_its = 0;
    int nn = n - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l >= 1; --l) {
                s = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
                if (s == 0.0) {
                    s = anorm;
                }
                if (std::abs(at(l, l - 1)) + s == s) {
                    at(l, l - 1) = 0.0;
                    break;
                }
            }
            x = at(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                --nn;
            } else {
                y = at(nn - 1, nn - 1);
                w = at(nn, nn - 1) * at(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + copy_sign(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) {
                            wr[nn] = x - w / z;
                        }
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = z;
                        wi[nn] = -z;
                    }
                    nn -= 2;
                } else {
                    if (its == 30 || total_its >= budget) {
                        throw EigenFailure("eig_general: QR iteration did not converge after " +
                                           std::to_string(total_its) + " sweeps");
                    }
                    if (its == 10 || its == 20) {
                        // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) {
                            at(i, i) -= x;
                        }
                        s = std::abs(at(nn, nn - 1)) + std::abs(at(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    ++total_its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = at(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / at(m + 1, m) + at(m, m + 1);
                        q = at(m + 1, m + 1) - z - r - s;
                        r = at(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) {
                            break;
                        }
                        const double u = std::abs(at(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(at(m - 1, m - 1)) + std::abs(z) +
                                           std::abs(at(m + 1, m + 1)));
                        if (u + v == v) {
                            break;
                        }
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        at(i, i - 2) = 0.0;
                        if (i != m + 2) {
                            at(i, i - 3) = 0.0;
                        }
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = at(k, k - 1);
                            q = at(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) {
                                r = at(k + 2, k - 1);
                            }
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = copy_sign(std::sqrt(p * p + q * q + r * r), p);
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m) {
                                    at(k, k - 1) = -at(k, k - 1);
                                }
                            } else {
                                at(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = at(k, j) + q * at(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * at(k + 2, j);
                                    at(k + 2, j) -= p * z;
                                }
                                at(k + 1, j) -= p * y;
                                at(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * at(i, k) + y * at(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * at(i, k + 2);
                                    at(i, k + 2) -= p * r;
                                }
                                at(i, k + 1) -= p * q;
                                at(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }

    ComplexSpectrum out;
    out.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.values.emplace_back(wr[i], wi[i]);
    }
    return out;
}

}  // namespace

ComplexSpectrum eig_general(const Matrix& m) {
    if (!m.square()) {
        throw std::invalid_argument("eig_general: matrix is not square");
    }
    if (!m.all_finite()) {
        throw std::invalid_argument("eig_general: non-finite entry");
    }
    if (m.rows() == 0) {
        return {};
    }
    Matrix work = m;
    balance(work);
    reduce_to_hessenberg(work);
    return hessenberg_qr(work);
}

// ---------------------------------------------------------------------------
// LU

LuDecomposition::LuDecomposition(const Matrix& m) : lu_(m), perm_(m.rows()) {
    if (!m.square()) {
        throw std::invalid_argument("LuDecomposition: matrix is not square");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        perm_[i] = i;
    }
    const double threshold = 1e-14 * m.inf_norm();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                piv = i;
            }
        }
        if (best <= threshold || best == 0.0) {
            throw SingularSystem("LU: pivot " + std::to_string(best) + " in column " +
                                 std::to_string(k) + " below rank threshold");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu_(k, j), lu_(piv, j));
            }
            std::swap(perm_[k], perm_[piv]);
            sign_ = -sign_;
        }
        const double inv = 1.0 / lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu_(i, k) * inv;
            lu_(i, k) = f;
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                lu_(i, j) -= f * lu_(k, j);
            }
        }
    }
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) {
        throw std::invalid_argument("lu_solve: right-hand side length mismatch");
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[perm_[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) {
            s -= lu_(i, j) * x[j];
        }
        x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) {
            s -= lu_(ii, j) * x[j];
        }
        x[ii] = s / lu_(ii, ii);
    }
    return x;
}

double LuDecomposition::determinant() const {
    double d = sign_;
    for (std::size_t i = 0; i < lu_.rows(); ++i) {
        d *= lu_(i, i);
    }
    return d;
}

Matrix LuDecomposition::lower() const {
    const std::size_t n = lu_.rows();
    Matrix l = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = lu_(i, j);
        }
    }
    return l;
}

Matrix LuDecomposition::upper() const {
    const std::size_t n = lu_.rows();
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            u(i, j) = lu_(i, j);
        }
    }
    return u;
}

std::vector<double> lu_solve(const Matrix& m, std::span<const double> rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("lu_solve: right-hand side length mismatch");
    }
    return LuDecomposition(m).solve(rhs);
}

double determinant(const Matrix& m) {
    try {
        return LuDecomposition(m).determinant();
    } catch (const SingularSystem&) {
        return 0.0;
    }
}

// ---------------------------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix matrix_exponential(const Matrix& m, double t) {
    if (!m.square()) {
        throw std::invalid_argument("matrix_exponential: matrix is not square");
    }
    const std::size_t n = m.rows();
    Matrix x = m * t;
    if (!x.all_finite()) {
        throw std::invalid_argument("matrix_exponential: non-finite entry");
    }
    const double norm = x.inf_norm();
    if (norm == 0.0) {
        return Matrix::identity(n);
    }

    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        x *= std::ldexp(1.0, -squarings);
    }

    // Pade(6,6): c_k = (2q-k)! q! / ((2q)! k! (q-k)!)
    constexpr int q = 6;
    Matrix num = Matrix::identity(n);
    Matrix den = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    double c = 1.0;
    for (int k = 1; k <= q; ++k) {
        c *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
        power = power * x;
        num += power * c;
        den += power * ((k % 2 == 0) ? c : -c);
    }

    const LuDecomposition lu(den);
    Matrix result(n, n);
    std::vector<double> column(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = num(i, j);
        }
        const auto solved = lu.solve(column);
        for (std::size_t i = 0; i < n; ++i) {
            result(i, j) = solved[i];
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

}  // namespace eoms::linalg
