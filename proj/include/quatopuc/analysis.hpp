#pragma once

#include "quatopuc/qopuc.hpp"

#include <cstdint>
#include <vector>

namespace quatopuc {

inline constexpr double kBoundaryTolerance = 1e-10;

// K_N(p) = sum_{l <= N} |psi_l^L(p)|^2 + |psi_l^R(p)|^2; throws OnBoundary for |p| near 1.
double cd_kernel_diag(const MomentSequence& c, int N, const Quaternion& p);

struct CDForms {
    double kernel;     // K_N(p)
    double next_form;  // built from degree N+1 polynomials and their reverses
    double same_form;  // built from degree N polynomials and their reverses
};

// `fam` must hold degrees 0..N+1.
CDForms cd_forms(const OrthonormalFamilies& fam, int N, const Quaternion& p);

// max |K - RHS| / (1 + |K|) over both closed forms, at `samples` seeded points
// split between 0.05 < |p| < 0.95 and 1.05 < |p| < 2.
double cd_identity_check(const MomentSequence& c, int N, int samples, std::uint64_t seed);

enum class EntropyGrid { Nodes, Midpoints };

struct EntropyEstimate {
    double value = 0.0;          // -inf when diverging
    double error_estimate = 0.0; // |full - half resolution|
    bool diverging = false;
    double grid_min_eigenvalue = 0.0;
};

inline constexpr double kEntropyFloor = 1e-12;

// (1/2pi) * integral of log det W by the trapezoid rule. A grid minimum
// eigenvalue at or below the floor throws NotPositiveOnGrid unless
// allow_divergent is set, in which case the estimate is flagged diverging.
EntropyEstimate szego_entropy(const QPositiveDensity& d, bool allow_divergent = false,
                              EntropyGrid grid = EntropyGrid::Nodes, int points = kQuadraturePoints);

struct SVReport {
    VerblunskySeq gammas;
    double route_residual = 0.0;
    std::vector<double> partial_products; // prod_{n <= m} (1 - |gamma_n|^2)^2, m = 0..N-1
    EntropyEstimate entropy;
    double exp_entropy = 0.0;
    std::vector<double> gap_history;      // |partial_products[m] - exp_entropy|
};

SVReport sv_check(const QPositiveDensity& d, int N, bool allow_divergent = false);

// Partial sums with a finite-horizon growth test: the sum is flagged as
// diverging over the horizon when the increment over the last half of the
// terms is at least kDivergenceRatio times the increment over the quarter
// before it, and is not at rounding level.
struct SeriesSum {
    double value = 0.0;
    bool diverging = false;
    std::vector<double> partial_sums;
};

inline constexpr double kDivergenceRatio = 0.8;

SeriesSum growth_report(std::vector<double> terms);
SeriesSum square_summability_report(const VerblunskySeq& gammas);
SeriesSum l1_report(const VerblunskySeq& gammas);

enum class BaxterVerdict { ConsistentSummable, ConsistentNonsummable, Inconsistent };
const char* verdict_name(BaxterVerdict v) noexcept;

struct BaxterReport {
    VerblunskySeq gammas;
    SeriesSum gamma_l1;
    double wiener_norm = 0.0;
    bool wiener_finite = true;
    double density_min = 0.0;
    BaxterVerdict verdict = BaxterVerdict::Inconsistent;
};

// Summable gammas must come with a finite Wiener norm and a density bounded
// away from zero, and non-summable ones with the failure of either.
BaxterVerdict baxter_verdict(const SeriesSum& gamma_l1, bool wiener_finite, double density_min);
BaxterReport baxter_check(const QPositiveDensity& d, int N);

} // namespace quatopuc
