#pragma once

#include "quatopuc/qopuc.hpp"

#include <vector>

namespace quatopuc {

// Coefficient of z^k at index k.
using ComplexPoly = std::vector<Complex>;

QMatrix companion_left(const QPolyL& monic);  // subdiagonal ones, last column -Psi_k
QMatrix companion_right(const QPolyR& monic); // superdiagonal ones, bottom row -Psi_k

// Scale so the leading coefficient is 1, multiplying on the side opposite the powers.
QPolyL monic(const QPolyL& f);
QPolyR monic(const QPolyR& f);

ComplexPoly det_poly(const MatrixPoly& p);
Complex eval(const ComplexPoly& q, Complex z);

inline constexpr int kMaxRootIterations = 500;
inline constexpr double kRootResidualTolerance = 1e-10;

// Aberth-Ehrlich simultaneous iteration.
std::vector<Complex> roots(const ComplexPoly& q);

// Distance between root multisets. Matched roots are compared directly; when
// that fails, clusters of nearby roots are compared by count and centroid,
// which stays well conditioned for multiple roots.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

struct ZeroReport {
    std::vector<Complex> slice_roots; // one representative (Im >= 0) per conjugate pair
    std::vector<double> moduli;
    std::vector<Complex> all_roots;   // full conjugation-symmetric multiset
    bool all_inside_ball = true;
    bool all_outside_closed_ball = true;
    double route_distance = 0.0;      // determinant roots vs. companion spectrum
};

// Relative size below which extreme coefficients are treated as zero.
inline constexpr double kNegligibleCoefficient = 1e-13;

ZeroReport zero_slice(const QPolyL& f, const SliceFrame& fr = {}, double tol = kRouteTolerance);
ZeroReport zero_slice(const QPolyR& f, const SliceFrame& fr = {}, double tol = kRouteTolerance);

struct DegreeZeroCheck {
    int degree = 0;
    ZeroReport left, right, left_rev, right_rev;
    double left_right_distance = 0.0;
    bool inside = true;   // every root of psi_n^L and psi_n^R has modulus < 1
    bool outside = true;  // every root of the reverses has modulus > 1
    bool sets_equal = true;
};

std::vector<DegreeZeroCheck> zeros_theorem_check(const MomentSequence& c, int N, const SliceFrame& fr = {},
                                                 double tol = kRouteTolerance);

} // namespace quatopuc
