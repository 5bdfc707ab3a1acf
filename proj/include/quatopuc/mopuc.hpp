#pragma once

#include "quatopuc/series.hpp"

#include <span>
#include <vector>

namespace quatopuc {

using MatVerblunskySeq = std::vector<ComplexMat2>;
// Coefficient of z^k at index k.
using MatrixPoly = std::vector<ComplexMat2>;

struct DefectPair {
    ComplexMat2 rhoL; // (I - a^* a)^{1/2}
    ComplexMat2 rhoR; // (I - a a^*)^{1/2}
};

inline constexpr double kContractionMargin = 1e-12;

double operator_norm(const ComplexMat2& m);
// Principal square root of a Hermitian positive semidefinite 2x2 matrix.
ComplexMat2 hermitian_sqrt(const ComplexMat2& a);
DefectPair defects(const ComplexMat2& alpha);

inline constexpr double kConstantTolerance = 1e-10;

// One step of coefficient stripping:
//   f_{n+1} = z^{-1} (rhoR)^{-1} (f_n - a)(I - a^* f_n)^{-1} rhoL.
TruncSeries schur_step(const TruncSeries& f, const ComplexMat2& alpha);
// Inverse of schur_step: rebuilds f_n from a and f_{n+1}. The order grows by one.
TruncSeries schur_step_inverse(const TruncSeries& next, const ComplexMat2& alpha);

// a_n = f_n(0) for n < count.
MatVerblunskySeq schur_algorithm(const TruncSeries& f, int count);

// Schur series with parameters alphas[0..order], built by inverted stripping.
TruncSeries schur_from_alphas(std::span<const ComplexMat2> alphas, int order);

// s_0(f)..s_K(f) through the triangular coefficient recursion.
std::vector<ComplexMat2> schur_coeffs_forward(std::span<const ComplexMat2> alphas, int K);

// C_1..C_N, the Herglotz coefficients of F = I + 2 sum C_n z^n.
std::vector<ComplexMat2> moments_from_alphas(std::span<const ComplexMat2> alphas, int N);
// a_0..a_{N-1} from C_1..C_N.
MatVerblunskySeq alphas_from_moments(std::span<const ComplexMat2> moments, int N);

struct MatrixSzegoPolys {
    std::vector<MatrixPoly> left, right, left_rev, right_rev; // degrees 0..N
};

// Orthonormal matrix polynomials from chi-image Verblunsky coefficients,
// where rhoL = rhoR.
MatrixSzegoPolys matrix_szego_polys(std::span<const ComplexMat2> alphas, int N);

// Matrix Gram forms of the measure whose Herglotz coefficients are
// moments[n-1] = C_n:
//   <f, g>_R = sum_{l,k} g_l^* C_{l-k} f_k,   <f, g>_L = sum_{k,l} f_k C_{l-k} g_l^*,
// with C_0 = I and C_{-n} = C_n^*.
ComplexMat2 matrix_inner_right(const MatrixPoly& f, const MatrixPoly& g, std::span<const ComplexMat2> moments);
ComplexMat2 matrix_inner_left(const MatrixPoly& f, const MatrixPoly& g, std::span<const ComplexMat2> moments);

MatrixPoly matrix_poly_reverse(const MatrixPoly& p, int degree);

} // namespace quatopuc
