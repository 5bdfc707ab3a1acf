#include "quatopuc/quat.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>

namespace quatopuc {

SliceFrame::SliceFrame() : i_(units::i), j_(units::j), k_(units::k) {}

// i * j has a real part of rounding size; dropping it keeps split exact on the real axis.
SliceFrame::SliceFrame(const Quaternion& i, const Quaternion& j)
    : i_(imag_part(i)), j_(imag_part(j)), k_(imag_part(i * j)) {
    auto bad = [](double v) { return !(std::abs(v) <= kTolerance); };
    if (bad(i.w) || bad(j.w) || bad(norm2(i) - 1.0) || bad(norm2(j) - 1.0) || bad(dot(i, j)))
        throw Error(Errc::InvalidInput, "slice frame units must be orthonormal imaginary quaternions");
}

SplitPair split(const Quaternion& p, const SliceFrame& fr) {
    return {Complex(p.w, dot(p, fr.i())), Complex(dot(p, fr.j()), dot(p, fr.k()))};
}

Quaternion join(Complex z1, Complex z2, const SliceFrame& fr) {
    const Quaternion& i = fr.i();
    const Quaternion& j = fr.j();
    const Quaternion& k = fr.k();
    const double b = z1.imag(), c = z2.real(), d = z2.imag();
    return {z1.real(),
            b * i.x + c * j.x + d * k.x,
            b * i.y + c * j.y + d * k.y,
            b * i.z + c * j.z + d * k.z};
}

ComplexMat2 chi(const Quaternion& p, const SliceFrame& fr) {
    const auto [z1, z2] = split(p, fr);
    ComplexMat2 m;
    m << z1, z2, -std::conj(z2), std::conj(z1);
    return m;
}

double chi_image_residual(const ComplexMat2& m) {
    return std::max(std::abs(m(1, 1) - std::conj(m(0, 0))), std::abs(m(1, 0) + std::conj(m(0, 1))));
}

Quaternion chi_inv(const ComplexMat2& m, const SliceFrame& fr, double tol) {
    const double res = chi_image_residual(m);
    if (!(res <= tol))
        throw Error(Errc::NotInImage, "matrix is not a chi-image (structural residual " + std::to_string(res) + ")");
    const Complex z1 = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
    const Complex z2 = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
    return join(z1, z2, fr);
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) m(r, r) = units::one;
    return m;
}

QMatrix QMatrix::adjoint() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj((*this)(r, c));
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::InvalidInput, "quaternionic matrix shape mismatch");
    QMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion& ark = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

CMatrix chi_mat(const QMatrix& a, const SliceFrame& fr) {
    if (a.rows() != a.cols()) throw Error(Errc::InvalidInput, "chi_mat needs a square matrix");
    const auto n = static_cast<Eigen::Index>(a.rows());
    CMatrix out(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto [z1, z2] = split(a(r, c), fr);
            out(r, c) = z1;
            out(r, n + c) = z2;
            out(n + r, c) = -std::conj(z2);
            out(n + r, n + c) = std::conj(z1);
        }
    return out;
}

CMatrix chi_blocks(const QMatrix& a, const SliceFrame& fr) {
    const auto n = static_cast<Eigen::Index>(a.rows());
    CMatrix out(2 * n, 2 * static_cast<Eigen::Index>(a.cols()));
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(a.cols()); ++c)
            out.block<2, 2>(2 * r, 2 * c) = chi(a(r, c), fr);
    return out;
}

Eigen::MatrixXd block_permutation(int n) {
    if (n < 1) throw Error(Errc::InvalidInput, "block_permutation needs n >= 1");
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int m = 1; m <= n; ++m) {
        u(m - 1, 2 * m - 2) = 1.0;
        u(n + m - 1, 2 * m - 1) = 1.0;
    }
    return u;
}

std::vector<Complex> complex_eigenvalues(const CMatrix& m) {
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw Error(Errc::NoConvergence, "eigenvalue iteration failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> right_eigen_slice(const QMatrix& a, const SliceFrame& fr) {
    return complex_eigenvalues(chi_mat(a, fr));
}

} // namespace quatopuc
