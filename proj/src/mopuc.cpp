#include "quatopuc/mopuc.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quatopuc {

double operator_norm(const ComplexMat2& m) {
    Eigen::JacobiSVD<ComplexMat2> svd(m);
    return svd.singularValues()(0);
}

ComplexMat2 hermitian_sqrt(const ComplexMat2& a) {
    // For a 2x2 PSD matrix with det d and trace t: sqrt(A) = (A + sqrt(d) I) / sqrt(t + 2 sqrt(d)).
    const ComplexMat2 h = 0.5 * (a + a.adjoint());
    const double det = std::max(0.0, (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real());
    const double s = std::sqrt(det);
    const double t = std::sqrt(std::max(0.0, h.trace().real() + 2.0 * s));
    if (t == 0.0) return ComplexMat2::Zero();
    return (h + s * ComplexMat2::Identity()) / t;
}

DefectPair defects(const ComplexMat2& alpha) {
    const double nrm = operator_norm(alpha);
    if (!(nrm < 1.0 - kContractionMargin))
        throw Error(Errc::NotContraction, "operator norm " + std::to_string(nrm) + " is not below 1");
    const ComplexMat2 I = ComplexMat2::Identity();
    return {hermitian_sqrt(I - alpha.adjoint() * alpha), hermitian_sqrt(I - alpha * alpha.adjoint())};
}

TruncSeries schur_step(const TruncSeries& f, const ComplexMat2& alpha) {
    const double mismatch = (f[0] - alpha).cwiseAbs().maxCoeff();
    if (!(mismatch <= kConstantTolerance))
        throw Error(Errc::ConstantMismatch, "f(0) differs from alpha by " + std::to_string(mismatch));
    const DefectPair d = defects(alpha);
    if (f.order() == 0) return TruncSeries(0);
    TruncSeries num = f - TruncSeries::constant(alpha, f.order());
    num[0].setZero();
    const TruncSeries den = TruncSeries::identity(f.order()) - alpha.adjoint() * f;
    const TruncSeries shifted = (num * series_inv(den)).div_z(0.0);
    return d.rhoR.inverse() * shifted * d.rhoL;
}

TruncSeries schur_step_inverse(const TruncSeries& next, const ComplexMat2& alpha) {
    const DefectPair d = defects(alpha);
    const int order = next.order() + 1;
    // g = z rhoR f_{n+1} rhoL^{-1}; then f_n = (I + g a^*)^{-1} (g + a).
    TruncSeries g(order);
    const TruncSeries inner = d.rhoR * next * d.rhoL.inverse();
    for (int n = 0; n <= next.order(); ++n) g[n + 1] = inner[n];
    const TruncSeries lhs = TruncSeries::identity(order) + g * alpha.adjoint();
    return series_inv(lhs) * (g + TruncSeries::constant(alpha, order));
}

MatVerblunskySeq schur_algorithm(const TruncSeries& f, int count) {
    if (count < 0 || count > f.order() + 1)
        throw Error(Errc::HorizonExceeded, "Schur series too short for the requested number of parameters");
    MatVerblunskySeq alphas;
    alphas.reserve(static_cast<std::size_t>(count));
    TruncSeries cur = f;
    for (int n = 0; n < count; ++n) {
        const ComplexMat2 a = cur[0];
        try {
            defects(a);
        } catch (const Error& e) {
            throw Error(e.code(), "Schur parameter " + std::to_string(n) + " is not a strict contraction", n);
        }
        alphas.push_back(a);
        if (n + 1 < count) cur = schur_step(cur, a);
    }
    return alphas;
}

TruncSeries schur_from_alphas(std::span<const ComplexMat2> alphas, int order) {
    if (order < 0 || static_cast<int>(alphas.size()) < order + 1)
        throw Error(Errc::HorizonExceeded, "not enough Schur parameters for the requested order");
    defects(alphas[static_cast<std::size_t>(order)]);
    TruncSeries f = TruncSeries::constant(alphas[static_cast<std::size_t>(order)], 0);
    for (int n = order - 1; n >= 0; --n) f = schur_step_inverse(f, alphas[static_cast<std::size_t>(n)]);
    return f;
}

std::vector<ComplexMat2> schur_coeffs_forward(std::span<const ComplexMat2> alphas, int K) {
    if (K < 0 || static_cast<int>(alphas.size()) < K + 1)
        throw Error(Errc::HorizonExceeded, "schur_coeffs_forward needs K + 1 parameters");
    // s[n][k] = s_k(f_n) for n + k <= K, filled from the deepest iterate upwards.
    std::vector<std::vector<ComplexMat2>> s(static_cast<std::size_t>(K) + 1);
    for (int n = K; n >= 0; --n) {
        const ComplexMat2& a = alphas[static_cast<std::size_t>(n)];
        const DefectPair d = defects(a);
        const ComplexMat2 tail = d.rhoL.inverse() * a.adjoint();
        auto& row = s[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(K - n) + 1, ComplexMat2::Zero());
        row[0] = a;
        for (int k = 1; k <= K - n; ++k) {
            const auto& next = s[static_cast<std::size_t>(n) + 1];
            ComplexMat2 acc = d.rhoR * next[static_cast<std::size_t>(k - 1)] * d.rhoL;
            for (int l = 1; l <= k - 1; ++l)
                acc -= d.rhoR * next[static_cast<std::size_t>(k - l - 1)] * tail * row[static_cast<std::size_t>(l)];
            row[static_cast<std::size_t>(k)] = acc;
        }
    }
    return s.front();
}

std::vector<ComplexMat2> moments_from_alphas(std::span<const ComplexMat2> alphas, int N) {
    if (N < 0 || static_cast<int>(alphas.size()) < N)
        throw Error(Errc::HorizonExceeded, "moments_from_alphas needs N parameters");
    if (N == 0) return {};
    const TruncSeries f(schur_coeffs_forward(alphas, N - 1));
    const TruncSeries F = herglotz_from_schur_powers(f);
    std::vector<ComplexMat2> C(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) C[static_cast<std::size_t>(n - 1)] = 0.5 * F[n];
    return C;
}

MatVerblunskySeq alphas_from_moments(std::span<const ComplexMat2> moments, int N) {
    if (N < 0 || static_cast<int>(moments.size()) < N)
        throw Error(Errc::HorizonExceeded, "alphas_from_moments needs C_1..C_N");
    if (N == 0) return {};
    const TruncSeries F = herglotz_from_moments(moments.first(static_cast<std::size_t>(N)));
    return schur_algorithm(schur_from_herglotz(F), N);
}

namespace {

MatrixPoly shift_up(const MatrixPoly& p) {
    MatrixPoly out(p.size() + 1, ComplexMat2::Zero());
    for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k];
    return out;
}

MatrixPoly padded(MatrixPoly p, std::size_t size) {
    p.resize(size, ComplexMat2::Zero());
    return p;
}

} // namespace

MatrixSzegoPolys matrix_szego_polys(std::span<const ComplexMat2> alphas, int N) {
    if (N < 0 || static_cast<int>(alphas.size()) < N)
        throw Error(Errc::HorizonExceeded, "matrix_szego_polys needs N parameters");
    for (int n = 0; n < N; ++n)
        if (!(chi_image_residual(alphas[static_cast<std::size_t>(n)]) <= kImageTolerance))
            throw Error(Errc::NotChiImage, "Verblunsky coefficient " + std::to_string(n) + " is not a chi-image", n);

    MatrixSzegoPolys out;
    const MatrixPoly one{ComplexMat2::Identity()};
    out.left.push_back(one);
    out.right.push_back(one);
    out.left_rev.push_back(one);
    out.right_rev.push_back(one);
    for (int n = 0; n < N; ++n) {
        const ComplexMat2& a = alphas[static_cast<std::size_t>(n)];
        const ComplexMat2 rho_inv = defects(a).rhoL.inverse();
        const std::size_t size = static_cast<std::size_t>(n) + 2;
        const MatrixPoly zl = shift_up(out.left.back());
        const MatrixPoly zr = shift_up(out.right.back());
        const MatrixPoly lrev = padded(out.left_rev.back(), size);
        const MatrixPoly rrev = padded(out.right_rev.back(), size);
        MatrixPoly l(size), r(size), lr(size), rr(size);
        for (std::size_t k = 0; k < size; ++k) {
            l[k] = rho_inv * (zl[k] - a.adjoint() * rrev[k]);
            r[k] = (zr[k] - lrev[k] * a.adjoint()) * rho_inv;
            lr[k] = (lrev[k] - zr[k] * a) * rho_inv;
            rr[k] = rho_inv * (rrev[k] - a * zl[k]);
        }
        out.left.push_back(std::move(l));
        out.right.push_back(std::move(r));
        out.left_rev.push_back(std::move(lr));
        out.right_rev.push_back(std::move(rr));
    }
    return out;
}

namespace {

ComplexMat2 moment_at(std::span<const ComplexMat2> moments, long m) {
    if (m == 0) return ComplexMat2::Identity();
    const auto idx = static_cast<std::size_t>(std::labs(m) - 1);
    if (idx >= moments.size()) throw Error(Errc::HorizonExceeded, "matrix moment horizon exceeded");
    return m > 0 ? moments[idx] : ComplexMat2(moments[idx].adjoint());
}

} // namespace

ComplexMat2 matrix_inner_right(const MatrixPoly& f, const MatrixPoly& g, std::span<const ComplexMat2> moments) {
    ComplexMat2 acc = ComplexMat2::Zero();
    for (std::size_t l = 0; l < g.size(); ++l)
        for (std::size_t k = 0; k < f.size(); ++k)
            acc += g[l].adjoint() * moment_at(moments, static_cast<long>(l) - static_cast<long>(k)) * f[k];
    return acc;
}

ComplexMat2 matrix_inner_left(const MatrixPoly& f, const MatrixPoly& g, std::span<const ComplexMat2> moments) {
    ComplexMat2 acc = ComplexMat2::Zero();
    for (std::size_t k = 0; k < f.size(); ++k)
        for (std::size_t l = 0; l < g.size(); ++l)
            acc += f[k] * moment_at(moments, static_cast<long>(l) - static_cast<long>(k)) * g[l].adjoint();
    return acc;
}

MatrixPoly matrix_poly_reverse(const MatrixPoly& p, int degree) {
    if (static_cast<int>(p.size()) > degree + 1) {
        for (std::size_t k = static_cast<std::size_t>(degree) + 1; k < p.size(); ++k)
            if (p[k].cwiseAbs().maxCoeff() != 0.0)
                throw Error(Errc::DegreeTooSmall, "reversal degree below polynomial degree");
    }
    MatrixPoly out(static_cast<std::size_t>(degree) + 1, ComplexMat2::Zero());
    for (int k = 0; k <= degree; ++k) {
        const auto src = static_cast<std::size_t>(degree - k);
        if (src < p.size()) out[static_cast<std::size_t>(k)] = p[src].adjoint();
    }
    return out;
}

} // namespace quatopuc
