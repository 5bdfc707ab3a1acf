#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace quatopuc {

using Complex = std::complex<double>;
using ComplexMat2 = Eigen::Matrix2cd;
using CMatrix = Eigen::MatrixXcd;

// Hamilton quaternion w + x i + y j + z k in the standard basis.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }
    Quaternion& operator*=(const Quaternion& o);

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }
constexpr Quaternion conj(const Quaternion& p) { return {p.w, -p.x, -p.y, -p.z}; }
constexpr double norm2(const Quaternion& p) { return p.w * p.w + p.x * p.x + p.y * p.y + p.z * p.z; }
inline double abs(const Quaternion& p) { return std::hypot(std::hypot(p.w, p.x), std::hypot(p.y, p.z)); }
constexpr double real_part(const Quaternion& p) { return p.w; }
constexpr Quaternion imag_part(const Quaternion& p) { return {0.0, p.x, p.y, p.z}; }
// Euclidean inner product of the coordinate vectors in R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Quaternion inverse(const Quaternion& p) { return conj(p) / norm2(p); }

namespace units {
inline constexpr Quaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion k{0.0, 0.0, 0.0, 1.0};
} // namespace units

// An orthonormal pair of imaginary units (i, j) with k = i j. The pair fixes the
// slice C_i and with it the complex coordinates used by every matrix routine.
class SliceFrame {
public:
    static constexpr double kTolerance = 1e-12;

    SliceFrame(); // standard frame
    SliceFrame(const Quaternion& i, const Quaternion& j); // throws InvalidInput

    static SliceFrame standard() { return {}; }

    const Quaternion& i() const noexcept { return i_; }
    const Quaternion& j() const noexcept { return j_; }
    const Quaternion& k() const noexcept { return k_; }

    // The image of a + b*imag in C_i.
    Quaternion embed(Complex z) const { return Quaternion(z.real()) + i_ * z.imag(); }

    bool operator==(const SliceFrame&) const = default;

private:
    Quaternion i_, j_, k_;
};

struct SplitPair {
    Complex z1, z2;
};

// p = z1 + z2 j with z1, z2 in C_i.
SplitPair split(const Quaternion& p, const SliceFrame& fr);
Quaternion join(Complex z1, Complex z2, const SliceFrame& fr);

ComplexMat2 chi(const Quaternion& p, const SliceFrame& fr);

inline constexpr double kImageTolerance = 1e-10;

// Structural distance of M from the image of chi.
double chi_image_residual(const ComplexMat2& m);
Quaternion chi_inv(const ComplexMat2& m, const SliceFrame& fr, double tol = kImageTolerance);

// Dense row-major quaternionic matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix adjoint() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Quaternion> data_;
};

// [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j.
CMatrix chi_mat(const QMatrix& a, const SliceFrame& fr);

// The n x n array of 2 x 2 blocks chi(a_kl), assembled as a 2n x 2n matrix.
CMatrix chi_blocks(const QMatrix& a, const SliceFrame& fr);

// Permutation U_n with chi_mat(A) = U_n chi_blocks(A) U_n^*.
Eigen::MatrixXd block_permutation(int n);

// Spectrum of chi_mat(A): the C_i-slice of the right spectrum of A.
std::vector<Complex> right_eigen_slice(const QMatrix& a, const SliceFrame& fr);

// Spectrum of a complex matrix; throws NoConvergence when the QR iteration fails.
std::vector<Complex> complex_eigenvalues(const CMatrix& m);

} // namespace quatopuc
