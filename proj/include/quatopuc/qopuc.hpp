#pragma once

#include "quatopuc/measures.hpp"
#include "quatopuc/mopuc.hpp"

#include <vector>

namespace quatopuc {

// Which side of the powers of p the coefficients sit on.
//   CoeffSide::Right: sum p^k a_k, the space H[p]^L
//   CoeffSide::Left:  sum a_k p^k, the space H[p]^R
enum class CoeffSide { Right, Left };

template <CoeffSide S>
struct QPoly {
    std::vector<Quaternion> coeffs;

    QPoly() = default;
    explicit QPoly(std::vector<Quaternion> c) : coeffs(std::move(c)) {}

    static constexpr CoeffSide side = S;

    std::size_t size() const noexcept { return coeffs.size(); }
    // Index of the last nonzero coefficient; -1 for the zero polynomial.
    int degree() const noexcept {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (coeffs[static_cast<std::size_t>(k)] != Quaternion{}) return k;
        return -1;
    }
    Quaternion coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Quaternion{}; }
    bool operator==(const QPoly&) const = default;
};

using QPolyL = QPoly<CoeffSide::Right>; // H[p]^L
using QPolyR = QPoly<CoeffSide::Left>;  // H[p]^R

Quaternion eval(const QPolyL& f, const Quaternion& p);
Quaternion eval(const QPolyR& f, const Quaternion& p);
inline Quaternion eval_L(const QPolyL& f, const Quaternion& p) { return eval(f, p); }
inline Quaternion eval_R(const QPolyR& f, const Quaternion& p) { return eval(f, p); }

// c_l = sum_{a+b=l} f_a g_b
QPolyL star_mul(const QPolyL& f, const QPolyL& g);
QPolyR star_mul(const QPolyR& f, const QPolyR& g);

// k-th coefficient of the result is conj(f_{n-k}); the space switches.
QPolyR reverse(const QPolyL& f, int n);
QPolyL reverse(const QPolyR& f, int n);

// Coefficientwise chi, and its checked inverse.
MatrixPoly phi_L(const QPolyL& f, const SliceFrame& fr);
MatrixPoly phi_R(const QPolyR& f, const SliceFrame& fr);
QPolyL phi_L_inv(const MatrixPoly& m, const SliceFrame& fr);
QPolyR phi_R_inv(const MatrixPoly& m, const SliceFrame& fr);

// <f, g>_R = sum_{l,k} conj(g_l) c_{k-l} f_k, right-linear in f.
Quaternion inner_R(const QPolyL& f, const QPolyL& g, const MomentSequence& c);
// <f, g>_L = sum_{k,l} f_k c_{k-l} conj(g_l), left-linear in f.
Quaternion inner_L(const QPolyR& f, const QPolyR& g, const MomentSequence& c);

struct OrthonormalFamilies {
    std::vector<QPolyL> right; // right-orthonormal, in H[p]^L
    std::vector<QPolyR> left;  // left-orthonormal, in H[p]^R
};

// Modified Gram-Schmidt with one reorthogonalization pass; degrees 0..N,
// leading coefficients real and positive.
OrthonormalFamilies orthonormal_polys(const MomentSequence& c, int N);

using VerblunskySeq = std::vector<Quaternion>;

inline double defect_r(const Quaternion& gamma) { return std::sqrt(1.0 - norm2(gamma)); }

// Moments whose Verblunsky coefficients are gammas[0..N-1].
MomentSequence moments_from_verblunsky(const VerblunskySeq& gammas, int N, const SliceFrame& fr = {});

inline constexpr double kRouteTolerance = 1e-8;

struct VerblunskyRoutes {
    VerblunskySeq series_route;       // matrix Schur algorithm on the Herglotz series
    VerblunskySeq gram_schmidt_route; // read off consecutive orthonormal polynomials
    double residual;                  // max discrepancy, including left/right consistency
};

VerblunskyRoutes verblunsky_routes(const MomentSequence& c, int N, const SliceFrame& fr = {});
// gamma_0..gamma_{N-1}; throws RouteMismatch if the routes disagree beyond tol.
VerblunskySeq verblunsky_from_moments_q(const MomentSequence& c, int N, const SliceFrame& fr = {},
                                        double tol = kRouteTolerance);

struct SzegoState {
    QPolyR left;      // psi_n^L
    QPolyL right;     // psi_n^R
    QPolyL left_rev;  // psi_n^{L,#}
    QPolyR right_rev; // psi_n^{R,#}
    int degree = 0;

    static SzegoState initial();
};

SzegoState szego_advance(const SzegoState& s, const Quaternion& gamma);
std::vector<SzegoState> szego_states(const VerblunskySeq& gammas, int N);

// Largest coefficient residual of the four paired recurrences over n < N.
double szego_recurrence_residual(const OrthonormalFamilies& fam, const VerblunskySeq& gammas, int N);

} // namespace quatopuc
