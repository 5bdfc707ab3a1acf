#pragma once

#include "quatopuc/quat.hpp"

#include <map>
#include <span>
#include <vector>

namespace quatopuc {

// c_n = integral of e^{i n theta} against a q-positive measure, for |n| <= horizon.
// Only n >= 0 is stored; c_{-n} = conj(c_n).
class MomentSequence {
public:
    static constexpr double kNormalizationTolerance = 1e-12;

    // nonnegative[n] = c_n; requires c_0 = 1.
    explicit MomentSequence(std::vector<Quaternion> nonnegative);

    static MomentSequence lebesgue(int horizon);

    int horizon() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Quaternion operator()(int n) const; // throws HorizonExceeded
    const std::vector<Quaternion>& nonnegative() const noexcept { return c_; }
    MomentSequence truncated(int horizon) const;

private:
    std::vector<Quaternion> c_;
};

// Entry (k, j) is c_{j-k}.
QMatrix toeplitz(const MomentSequence& c, int n);

struct NontrivialReport {
    bool nontrivial = false;
    double min_pivot = 0.0;      // smallest Cholesky pivot of chi_mat(T_n)
    double min_eigenvalue = 0.0; // smallest eigenvalue of chi_mat(T_n)
    int failing_order = -1;      // first order m with T_m not positive definite
};

inline constexpr double kPivotTolerance = 1e-12;

NontrivialReport is_nontrivial(const MomentSequence& c, int n, const SliceFrame& fr = {});

// Cholesky pivots (squared diagonal of the factor) of a Hermitian matrix;
// stops after the first pivot not above `tol`, which is included.
std::vector<double> cholesky_pivots(const CMatrix& h, double tol = kPivotTolerance);

// Finitely supported Fourier data of a q-positive density in a given frame:
// w(theta) = w1(theta) + w2(theta) j with w_m(theta) = sum_n coeff_n e^{i n theta}.
class QPositiveDensity {
public:
    using Coeffs = std::map<int, Complex>;
    static constexpr double kSymmetryTolerance = 1e-12;

    // Missing negative-index coefficients are completed by symmetry:
    // w1_{-n} = conj(w1_n) and w2_{-n} = -w2_n. Given pairs are checked.
    QPositiveDensity(SliceFrame frame, Coeffs w1, Coeffs w2);

    const SliceFrame& frame() const noexcept { return frame_; }
    const Coeffs& w1() const noexcept { return w1_; }
    const Coeffs& w2() const noexcept { return w2_; }
    int degree() const noexcept;

    Complex w1_at(double theta) const;
    Complex w2_at(double theta) const;
    // [[w1(t), w2(t)], [conj w2(t), w1(-t)]]
    ComplexMat2 matrix_at(double theta) const;

private:
    SliceFrame frame_;
    Coeffs w1_, w2_;
};

inline constexpr int kPsdGridPoints = 2048;
inline constexpr int kQuadraturePoints = 4096;
inline constexpr double kPsdTolerance = 1e-10;

// Minimum over an equispaced grid of the smallest eigenvalue of W(theta).
double density_min_eigenvalue(const QPositiveDensity& d, int points = kPsdGridPoints);
inline bool is_q_positive(const QPositiveDensity& d) { return density_min_eigenvalue(d) >= -kPsdTolerance; }

// Exact read-off c_n = w1_{-n} + w2_{-n} j.
MomentSequence moments_from_density(const QPositiveDensity& d, int N);

struct QuadratureMoments {
    MomentSequence moments;
    double error_estimate; // max difference against the half-resolution rule
};
QuadratureMoments moments_from_density_quadrature(const QPositiveDensity& d, int N, int points = kQuadraturePoints);

// The same measure described in another frame.
QPositiveDensity density_in_frame(const QPositiveDensity& d, const SliceFrame& target);

struct Atom {
    double angle;
    Quaternion weight;
};
using AtomicQMeasure = std::vector<Atom>;

// c_n = sum_m e^{i n theta_m} weight_m, where e^{i n theta} lies in the frame's slice.
MomentSequence moments_from_atoms(const AtomicQMeasure& atoms, int N, const SliceFrame& fr = {});

// C_n = chi(c_n) for n = 0..horizon.
std::vector<ComplexMat2> matrix_moments(const MomentSequence& c, const SliceFrame& fr = {});

// Coefficients C_1..C_N of the Herglotz series F(z) = sum over the matrix measure of
// (e^{it} + z)/(e^{it} - z). Since the kernel expands in e^{-int}, these are chi(c_n)^*.
std::vector<ComplexMat2> herglotz_coefficients(const MomentSequence& c, int N, const SliceFrame& fr = {});

double wiener_coefficient_norm(const QPositiveDensity& d);

// Deterministic pairwise summation.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

} // namespace quatopuc
