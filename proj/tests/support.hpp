#pragma once

#include "quatopuc/analysis.hpp"
#include "quatopuc/errors.hpp"
#include "quatopuc/sampling.hpp"
#include "quatopuc/zeros.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace quatopuc::test {

inline double dist(const Quaternion& a, const Quaternion& b) { return abs(a - b); }

inline double dist(const ComplexMat2& a, const ComplexMat2& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double dist(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
        d = std::max(d, abs((k < a.size() ? a[k] : Quaternion{}) - (k < b.size() ? b[k] : Quaternion{})));
    return d;
}

template <CoeffSide S>
double dist(const QPoly<S>& a, const QPoly<S>& b) {
    return dist(a.coeffs, b.coeffs);
}

inline double dist(const std::vector<ComplexMat2>& a, const std::vector<ComplexMat2>& b) {
    double d = 0.0;
    const ComplexMat2 zero = ComplexMat2::Zero();
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
        d = std::max(d, dist(k < a.size() ? a[k] : zero, k < b.size() ? b[k] : zero));
    return d;
}

inline double dist(const TruncSeries& a, const TruncSeries& b) { return dist(a.coeffs(), b.coeffs()); }

// 2x2 complex matrix with entries uniform in the unit square.
inline ComplexMat2 random_matrix(Sampler& s, double scale = 1.0) {
    ComplexMat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = Complex(s.uniform(-1, 1), s.uniform(-1, 1)) * scale;
    return m;
}

// Strict contraction with operator norm `norm`.
inline ComplexMat2 random_contraction(Sampler& s, double norm) {
    const ComplexMat2 m = random_matrix(s);
    return m * (norm / operator_norm(m));
}

inline TruncSeries random_series(Sampler& s, int order, double scale) {
    std::vector<ComplexMat2> c;
    for (int k = 0; k <= order; ++k) c.push_back(random_matrix(s, scale / (k + 1)));
    return TruncSeries(std::move(c));
}

inline QMatrix random_qmatrix(Sampler& s, std::size_t rows, std::size_t cols) {
    QMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = s.in_ball(1.0);
    return a;
}

template <class Poly>
Poly random_poly(Sampler& s, int degree) {
    Poly p;
    for (int k = 0; k <= degree; ++k) p.coeffs.push_back(s.in_ball(1.0));
    return p;
}

// Density with w1 = x^{|n|} for |n| <= cutoff: a truncated Bernstein-Szego weight
// whose moments are c_n = x^n up to x^{cutoff + 1}.
inline QPositiveDensity bernstein_szego(double x, int cutoff = 64, const SliceFrame& fr = {}) {
    QPositiveDensity::Coeffs w1;
    for (int n = -cutoff; n <= cutoff; ++n) w1[n] = std::pow(x, std::abs(n));
    return {fr, w1, {}};
}

inline QPositiveDensity flat_density(const SliceFrame& fr = {}) { return {fr, {{0, 1.0}}, {}}; }

// 1 + cos(theta), zero at theta = pi.
inline QPositiveDensity vanishing_density() { return {SliceFrame{}, {{0, 1.0}, {1, 0.5}, {-1, 0.5}}, {}}; }

inline MomentSequence random_gamma_moments(Sampler& s, int N, double max_modulus, const SliceFrame& fr = {}) {
    return moments_from_verblunsky(s.gammas(N, max_modulus), N, fr);
}

// True iff the multiset `got` covers `want` root by root within tol.
inline bool same_roots(const std::vector<Complex>& got, const std::vector<Complex>& want, double tol) {
    return got.size() == want.size() && multiset_distance(got, want) < tol;
}

} // namespace quatopuc::test
