#include "quatopuc/analysis.hpp"

#include "quatopuc/errors.hpp"
#include "quatopuc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace quatopuc {

namespace {

void require_off_boundary(const Quaternion& p) {
    if (std::abs(abs(p) - 1.0) < kBoundaryTolerance)
        throw Error(Errc::OnBoundary, "evaluation point lies on the unit sphere");
}

} // namespace

CDForms cd_forms(const OrthonormalFamilies& fam, int N, const Quaternion& p) {
    require_off_boundary(p);
    const auto n = static_cast<std::size_t>(N);
    if (fam.left.size() < n + 2 || fam.right.size() < n + 2)
        throw Error(Errc::InvalidInput, "closed forms need orthonormal polynomials up to degree N+1");
    auto pair_norm = [&](std::size_t l) { return norm2(eval(fam.left[l], p)) + norm2(eval(fam.right[l], p)); };
    auto rev_norm = [&](std::size_t l) {
        const int d = static_cast<int>(l);
        return norm2(eval(reverse(fam.left[l], d), p)) + norm2(eval(reverse(fam.right[l], d), p));
    };
    const double r2 = norm2(p);
    CDForms out{};
    out.kernel = 0.0;
    for (std::size_t l = 0; l <= n; ++l) out.kernel += pair_norm(l);
    out.next_form = (rev_norm(n + 1) - pair_norm(n + 1)) / (1.0 - r2);
    out.same_form = (rev_norm(n) - r2 * pair_norm(n)) / (1.0 - r2);
    return out;
}

double cd_kernel_diag(const MomentSequence& c, int N, const Quaternion& p) {
    require_off_boundary(p);
    const OrthonormalFamilies fam = orthonormal_polys(c, N);
    double k = 0.0;
    for (int l = 0; l <= N; ++l) {
        const auto ul = static_cast<std::size_t>(l);
        k += norm2(eval(fam.left[ul], p)) + norm2(eval(fam.right[ul], p));
    }
    return k;
}

double cd_identity_check(const MomentSequence& c, int N, int samples, std::uint64_t seed) {
    const OrthonormalFamilies fam = orthonormal_polys(c, N + 1);
    Sampler rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Quaternion p = s % 2 == 0 ? rng.in_shell(0.05, 0.95) : rng.in_shell(1.05, 2.0);
        const CDForms f = cd_forms(fam, N, p);
        const double scale = 1.0 + std::abs(f.kernel);
        worst = std::max({worst, std::abs(f.kernel - f.next_form) / scale, std::abs(f.kernel - f.same_form) / scale});
    }
    return worst;
}

namespace {

struct LogDetSamples {
    std::vector<double> values;
    double min_eigenvalue = std::numeric_limits<double>::infinity();
};

LogDetSamples log_det_samples(const QPositiveDensity& d, int points, double offset) {
    LogDetSamples out;
    out.values.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double theta = 2.0 * std::numbers::pi * (k + offset) / points;
        const ComplexMat2 w = d.matrix_at(theta);
        const double a = w(0, 0).real(), b = w(1, 1).real();
        out.min_eigenvalue = std::min(out.min_eigenvalue, 0.5 * (a + b) - std::hypot(0.5 * (a - b), std::abs(w(0, 1))));
        out.values.push_back(std::log(a * b - std::norm(w(0, 1))));
    }
    return out;
}

} // namespace

EntropyEstimate szego_entropy(const QPositiveDensity& d, bool allow_divergent, EntropyGrid grid, int points) {
    if (points < 2 || points % 2 != 0) throw Error(Errc::InvalidInput, "entropy quadrature needs an even number of points");
    const double offset = grid == EntropyGrid::Midpoints ? 0.5 : 0.0;
    const LogDetSamples fine = log_det_samples(d, points, offset);
    EntropyEstimate est;
    est.grid_min_eigenvalue = fine.min_eigenvalue;
    if (!(fine.min_eigenvalue > kEntropyFloor)) {
        if (!allow_divergent)
            throw Error(Errc::NotPositiveOnGrid, "matrix density is not positive definite on the quadrature grid");
        est.value = -std::numeric_limits<double>::infinity();
        est.error_estimate = std::numeric_limits<double>::infinity();
        est.diverging = true;
        return est;
    }
    const LogDetSamples coarse = log_det_samples(d, points / 2, offset);
    est.value = pairwise_sum(fine.values) / points;
    est.error_estimate = std::abs(est.value - pairwise_sum(coarse.values) / (points / 2));
    return est;
}

SVReport sv_check(const QPositiveDensity& d, int N, bool allow_divergent) {
    SVReport rep;
    const MomentSequence c = moments_from_density(d, N);
    const VerblunskyRoutes routes = verblunsky_routes(c, N, d.frame());
    if (!(routes.residual <= kRouteTolerance))
        throw Error(Errc::RouteMismatch, "Verblunsky routes disagree");
    rep.gammas = routes.series_route;
    rep.route_residual = routes.residual;
    rep.entropy = szego_entropy(d, allow_divergent);
    rep.exp_entropy = std::exp(rep.entropy.value);
    double prod = 1.0;
    for (const Quaternion& g : rep.gammas) {
        const double f = 1.0 - norm2(g);
        prod *= f * f;
        rep.partial_products.push_back(prod);
        rep.gap_history.push_back(std::abs(prod - rep.exp_entropy));
    }
    return rep;
}

SeriesSum growth_report(std::vector<double> terms) {
    SeriesSum out;
    out.partial_sums.reserve(terms.size());
    double acc = 0.0;
    for (double t : terms) out.partial_sums.push_back(acc += t);
    out.value = terms.empty() ? 0.0 : pairwise_sum(terms);
    const std::size_t n = terms.size();
    if (n >= 8) {
        auto upto = [&](std::size_t k) { return out.partial_sums[k - 1]; };
        const double recent = upto(n) - upto(n / 2);
        const double earlier = upto(n / 2) - upto(n / 4);
        const double flat = 10.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, out.value);
        out.diverging = recent > flat && recent >= kDivergenceRatio * earlier;
    }
    return out;
}

SeriesSum square_summability_report(const VerblunskySeq& gammas) {
    std::vector<double> t;
    for (const Quaternion& g : gammas) t.push_back(norm2(g));
    return growth_report(std::move(t));
}

SeriesSum l1_report(const VerblunskySeq& gammas) {
    std::vector<double> t;
    for (const Quaternion& g : gammas) t.push_back(abs(g));
    return growth_report(std::move(t));
}

const char* verdict_name(BaxterVerdict v) noexcept {
    switch (v) {
    case BaxterVerdict::ConsistentSummable: return "consistent-summable";
    case BaxterVerdict::ConsistentNonsummable: return "consistent-nonsummable";
    case BaxterVerdict::Inconsistent: return "inconsistent";
    }
    return "inconsistent";
}

BaxterVerdict baxter_verdict(const SeriesSum& gamma_l1, bool wiener_finite, double density_min) {
    const bool positive = density_min > kPsdTolerance;
    if (!gamma_l1.diverging && wiener_finite && positive) return BaxterVerdict::ConsistentSummable;
    if (gamma_l1.diverging && (!wiener_finite || !positive)) return BaxterVerdict::ConsistentNonsummable;
    return BaxterVerdict::Inconsistent;
}

BaxterReport baxter_check(const QPositiveDensity& d, int N) {
    BaxterReport rep;
    const MomentSequence c = moments_from_density(d, N);
    rep.gammas = verblunsky_from_moments_q(c, N, d.frame());
    rep.gamma_l1 = l1_report(rep.gammas);
    rep.wiener_norm = wiener_coefficient_norm(d);
    rep.wiener_finite = std::isfinite(rep.wiener_norm);
    rep.density_min = density_min_eigenvalue(d);
    rep.verdict = baxter_verdict(rep.gamma_l1, rep.wiener_finite, rep.density_min);
    return rep;
}

} // namespace quatopuc
