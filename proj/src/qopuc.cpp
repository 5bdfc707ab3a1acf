#include "quatopuc/qopuc.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>
#include <string>

namespace quatopuc {

Quaternion eval(const QPolyL& f, const Quaternion& p) {
    // Horner form p(...(p a_n + a_{n-1})...) + a_0 keeps the coefficients on the right.
    Quaternion acc;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = p * acc + *it;
    return acc;
}

Quaternion eval(const QPolyR& f, const Quaternion& p) {
    Quaternion acc;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * p + *it;
    return acc;
}

namespace {

template <CoeffSide S>
QPoly<S> convolve(const QPoly<S>& f, const QPoly<S>& g) {
    if (f.coeffs.empty() || g.coeffs.empty()) return {};
    std::vector<Quaternion> c(f.size() + g.size() - 1);
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) c[a + b] += f.coeffs[a] * g.coeffs[b];
    return QPoly<S>(std::move(c));
}

template <CoeffSide Out, CoeffSide In>
QPoly<Out> reversed(const QPoly<In>& f, int n) {
    if (n < 0 || f.degree() > n) throw Error(Errc::DegreeTooSmall, "reversal degree below polynomial degree");
    std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = conj(f.coeff(static_cast<std::size_t>(n - k)));
    return QPoly<Out>(std::move(c));
}

template <CoeffSide S>
MatrixPoly to_matrix(const QPoly<S>& f, const SliceFrame& fr) {
    MatrixPoly m;
    m.reserve(f.size());
    for (const Quaternion& q : f.coeffs) m.push_back(chi(q, fr));
    return m;
}

template <CoeffSide S>
QPoly<S> from_matrix(const MatrixPoly& m, const SliceFrame& fr) {
    std::vector<Quaternion> c;
    c.reserve(m.size());
    for (const ComplexMat2& a : m) c.push_back(chi_inv(a, fr));
    return QPoly<S>(std::move(c));
}

} // namespace

QPolyL star_mul(const QPolyL& f, const QPolyL& g) { return convolve(f, g); }
QPolyR star_mul(const QPolyR& f, const QPolyR& g) { return convolve(f, g); }

QPolyR reverse(const QPolyL& f, int n) { return reversed<CoeffSide::Left>(f, n); }
QPolyL reverse(const QPolyR& f, int n) { return reversed<CoeffSide::Right>(f, n); }

MatrixPoly phi_L(const QPolyL& f, const SliceFrame& fr) { return to_matrix(f, fr); }
MatrixPoly phi_R(const QPolyR& f, const SliceFrame& fr) { return to_matrix(f, fr); }
QPolyL phi_L_inv(const MatrixPoly& m, const SliceFrame& fr) { return from_matrix<CoeffSide::Right>(m, fr); }
QPolyR phi_R_inv(const MatrixPoly& m, const SliceFrame& fr) { return from_matrix<CoeffSide::Left>(m, fr); }

Quaternion inner_R(const QPolyL& f, const QPolyL& g, const MomentSequence& c) {
    Quaternion acc;
    for (std::size_t l = 0; l < g.size(); ++l) {
        const Quaternion gl = conj(g.coeffs[l]);
        for (std::size_t k = 0; k < f.size(); ++k)
            acc += gl * c(static_cast<int>(k) - static_cast<int>(l)) * f.coeffs[k];
    }
    return acc;
}

Quaternion inner_L(const QPolyR& f, const QPolyR& g, const MomentSequence& c) {
    Quaternion acc;
    for (std::size_t k = 0; k < f.size(); ++k)
        for (std::size_t l = 0; l < g.size(); ++l)
            acc += f.coeffs[k] * c(static_cast<int>(k) - static_cast<int>(l)) * conj(g.coeffs[l]);
    return acc;
}

namespace {

using Coeffs = std::vector<Quaternion>;

// Gram-Schmidt on 1, p, p^2, ... for one side. For the right family the
// products are g^* (T f) with right scalars; the left family mirrors this.
template <CoeffSide S>
std::vector<QPoly<S>> gram_schmidt(const MomentSequence& c, int N) {
    const auto size = static_cast<std::size_t>(N) + 1;
    constexpr bool right_linear = S == CoeffSide::Right;

    // image(f)_l = sum_k c_{k-l} f_k (right family) or sum_k f_k c_{k-l} (left family).
    auto image = [&](const Coeffs& f) {
        Coeffs out(size);
        for (std::size_t l = 0; l < size; ++l)
            for (std::size_t k = 0; k < size; ++k) {
                if (f[k] == Quaternion{}) continue;
                const Quaternion m = c(static_cast<int>(k) - static_cast<int>(l));
                out[l] += right_linear ? m * f[k] : f[k] * m;
            }
        return out;
    };
    // <f, g> given image(f).
    auto pair = [&](const Coeffs& image_f, const Coeffs& g) {
        Quaternion acc;
        for (std::size_t l = 0; l < size; ++l)
            acc += right_linear ? conj(g[l]) * image_f[l] : image_f[l] * conj(g[l]);
        return acc;
    };

    std::vector<Coeffs> basis, images;
    basis.reserve(size);
    images.reserve(size);
    for (std::size_t n = 0; n < size; ++n) {
        Coeffs v(size);
        v[n] = units::one;
        Coeffs tv = image(v);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t m = 0; m < n; ++m) {
                const Quaternion x = pair(tv, basis[m]);
                for (std::size_t l = 0; l <= m; ++l) v[l] -= right_linear ? basis[m][l] * x : x * basis[m][l];
                for (std::size_t l = 0; l < size; ++l) tv[l] -= right_linear ? images[m][l] * x : x * images[m][l];
            }
        }
        const double nrm2 = pair(tv, v).w;
        if (!(nrm2 > kPivotTolerance))
            throw Error(Errc::NotPositiveDefinite, "Gram-Schmidt breakdown at degree " + std::to_string(n), static_cast<int>(n));
        const double inv = 1.0 / std::sqrt(nrm2);
        for (auto& q : v) q *= inv;
        for (auto& q : tv) q *= inv;
        basis.push_back(std::move(v));
        images.push_back(std::move(tv));
    }

    std::vector<QPoly<S>> out;
    out.reserve(size);
    for (std::size_t n = 0; n < size; ++n) out.emplace_back(Coeffs(basis[n].begin(), basis[n].begin() + static_cast<long>(n) + 1));
    return out;
}

} // namespace

OrthonormalFamilies orthonormal_polys(const MomentSequence& c, int N) {
    if (N > c.horizon()) throw Error(Errc::HorizonExceeded, "orthonormal_polys needs moments up to N");
    const NontrivialReport rep = is_nontrivial(c, N);
    if (!rep.nontrivial)
        throw Error(Errc::NotPositiveDefinite, "Toeplitz matrix not positive definite at order " + std::to_string(rep.failing_order),
                    rep.failing_order);
    return {gram_schmidt<CoeffSide::Right>(c, N), gram_schmidt<CoeffSide::Left>(c, N)};
}

MomentSequence moments_from_verblunsky(const VerblunskySeq& gammas, int N, const SliceFrame& fr) {
    if (static_cast<int>(gammas.size()) < N) throw Error(Errc::HorizonExceeded, "need N Verblunsky coefficients");
    MatVerblunskySeq alphas;
    alphas.reserve(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) alphas.push_back(chi(gammas[static_cast<std::size_t>(n)], fr));
    const std::vector<ComplexMat2> F = moments_from_alphas(alphas, N);
    // The Herglotz coefficients are chi(c_{-n}), hence the conjugation.
    std::vector<Quaternion> c(static_cast<std::size_t>(N) + 1);
    c[0] = units::one;
    for (int n = 1; n <= N; ++n) c[static_cast<std::size_t>(n)] = conj(chi_inv(F[static_cast<std::size_t>(n - 1)], fr));
    return MomentSequence(std::move(c));
}

VerblunskyRoutes verblunsky_routes(const MomentSequence& c, int N, const SliceFrame& fr) {
    if (N > c.horizon()) throw Error(Errc::HorizonExceeded, "verblunsky_from_moments_q needs moments up to N");
    VerblunskyRoutes out;
    out.residual = 0.0;
    if (N == 0) return out;

    const OrthonormalFamilies fam = orthonormal_polys(c, N);

    const MatVerblunskySeq alphas = alphas_from_moments(herglotz_coefficients(c, N, fr), N);
    for (const ComplexMat2& a : alphas) out.series_route.push_back(chi_inv(a, fr));

    for (int n = 0; n < N; ++n) {
        // gamma_n = -conj(Psi_{n+1}(0)) for the monic normalization of either family.
        const auto& l = fam.left[static_cast<std::size_t>(n) + 1].coeffs;
        const auto& r = fam.right[static_cast<std::size_t>(n) + 1].coeffs;
        const Quaternion from_left = -conj(l.front()) / l.back().w;
        const Quaternion from_right = -conj(r.front()) / r.back().w;
        out.gram_schmidt_route.push_back(from_left);
        out.residual = std::max({out.residual, abs(from_left - from_right),
                                 abs(from_left - out.series_route[static_cast<std::size_t>(n)])});
    }
    return out;
}

VerblunskySeq verblunsky_from_moments_q(const MomentSequence& c, int N, const SliceFrame& fr, double tol) {
    VerblunskyRoutes routes = verblunsky_routes(c, N, fr);
    if (!(routes.residual <= tol))
        throw Error(Errc::RouteMismatch, "Verblunsky routes disagree by " + std::to_string(routes.residual));
    return std::move(routes.series_route);
}

SzegoState SzegoState::initial() {
    return {QPolyR({units::one}), QPolyL({units::one}), QPolyL({units::one}), QPolyR({units::one}), 0};
}

SzegoState szego_advance(const SzegoState& s, const Quaternion& gamma) {
    if (!(norm2(gamma) < 1.0)) throw Error(Errc::NotContraction, "Verblunsky coefficient outside the open unit ball");
    const double rinv = 1.0 / defect_r(gamma);
    const Quaternion gbar = conj(gamma);
    const int n = s.degree;
    const auto size = static_cast<std::size_t>(n) + 2;
    SzegoState out;
    out.degree = n + 1;
    out.left.coeffs.resize(size);
    out.right.coeffs.resize(size);
    out.left_rev.coeffs.resize(size);
    out.right_rev.coeffs.resize(size);
    for (std::size_t k = 0; k < size; ++k) {
        // shifted = coefficients of (psi times p), the degree rises by one.
        const Quaternion left_shift = k > 0 ? s.left.coeff(k - 1) : Quaternion{};
        const Quaternion right_shift = k > 0 ? s.right.coeff(k - 1) : Quaternion{};
        out.left.coeffs[k] = (left_shift - gbar * s.right_rev.coeff(k)) * rinv;
        out.right.coeffs[k] = (right_shift - s.left_rev.coeff(k) * gbar) * rinv;
        out.left_rev.coeffs[k] = (s.left_rev.coeff(k) - right_shift * gamma) * rinv;
        out.right_rev.coeffs[k] = (s.right_rev.coeff(k) - gamma * left_shift) * rinv;
    }
    return out;
}

std::vector<SzegoState> szego_states(const VerblunskySeq& gammas, int N) {
    if (static_cast<int>(gammas.size()) < N) throw Error(Errc::HorizonExceeded, "need N Verblunsky coefficients");
    std::vector<SzegoState> out{SzegoState::initial()};
    for (int n = 0; n < N; ++n) out.push_back(szego_advance(out.back(), gammas[static_cast<std::size_t>(n)]));
    return out;
}

double szego_recurrence_residual(const OrthonormalFamilies& fam, const VerblunskySeq& gammas, int N) {
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const Quaternion& g = gammas[un];
        const Quaternion gbar = conj(g);
        const double r = defect_r(g);
        const QPolyR& L = fam.left[un];
        const QPolyL& R = fam.right[un];
        const QPolyL Lrev = reverse(L, n);
        const QPolyR Rrev = reverse(R, n);
        const QPolyR& L1 = fam.left[un + 1];
        const QPolyL& R1 = fam.right[un + 1];
        const QPolyL L1rev = reverse(L1, n + 1);
        const QPolyR R1rev = reverse(R1, n + 1);
        for (std::size_t k = 0; k <= un + 1; ++k) {
            const Quaternion Lp = k > 0 ? L.coeff(k - 1) : Quaternion{};
            const Quaternion pR = k > 0 ? R.coeff(k - 1) : Quaternion{};
            worst = std::max(worst, abs(Lp - r * L1.coeff(k) - gbar * Rrev.coeff(k)));
            worst = std::max(worst, abs(pR - R1.coeff(k) * r - Lrev.coeff(k) * gbar));
            worst = std::max(worst, abs(Lrev.coeff(k) - r * L1rev.coeff(k) - pR * g));
            worst = std::max(worst, abs(Rrev.coeff(k) - r * R1rev.coeff(k) - g * Lp));
        }
    }
    return worst;
}

} // namespace quatopuc
