#include "quatopuc/zeros.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace quatopuc {

namespace {

template <CoeffSide S>
void require_monic(const QPoly<S>& f) {
    if (f.degree() < 1 || f.coeffs[static_cast<std::size_t>(f.degree())] != units::one)
        throw Error(Errc::NotMonic, "companion matrix needs a monic polynomial of degree >= 1");
}

} // namespace

QMatrix companion_left(const QPolyL& f) {
    require_monic(f);
    const auto n = static_cast<std::size_t>(f.degree());
    QMatrix c(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) c(k + 1, k) = units::one;
    for (std::size_t k = 0; k < n; ++k) c(k, n - 1) = -f.coeffs[k];
    return c;
}

QMatrix companion_right(const QPolyR& f) {
    require_monic(f);
    const auto n = static_cast<std::size_t>(f.degree());
    QMatrix c(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) c(k, k + 1) = units::one;
    for (std::size_t k = 0; k < n; ++k) c(n - 1, k) = -f.coeffs[k];
    return c;
}

QPolyL monic(const QPolyL& f) {
    const int d = f.degree();
    if (d < 0) throw Error(Errc::InvalidInput, "zero polynomial has no monic normalization");
    const Quaternion inv = inverse(f.coeffs[static_cast<std::size_t>(d)]);
    QPolyL out(std::vector<Quaternion>(f.coeffs.begin(), f.coeffs.begin() + d + 1));
    for (auto& q : out.coeffs) q = q * inv;
    out.coeffs.back() = units::one;
    return out;
}

QPolyR monic(const QPolyR& f) {
    const int d = f.degree();
    if (d < 0) throw Error(Errc::InvalidInput, "zero polynomial has no monic normalization");
    const Quaternion inv = inverse(f.coeffs[static_cast<std::size_t>(d)]);
    QPolyR out(std::vector<Quaternion>(f.coeffs.begin(), f.coeffs.begin() + d + 1));
    for (auto& q : out.coeffs) q = inv * q;
    out.coeffs.back() = units::one;
    return out;
}

namespace {

ComplexPoly poly_mul(const ComplexPoly& a, const ComplexPoly& b) {
    ComplexPoly out(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

ComplexPoly det_poly(const MatrixPoly& p) {
    if (p.empty()) return {Complex(0.0)};
    ComplexPoly a, b, c, d;
    for (const ComplexMat2& m : p) {
        a.push_back(m(0, 0));
        b.push_back(m(0, 1));
        c.push_back(m(1, 0));
        d.push_back(m(1, 1));
    }
    ComplexPoly ad = poly_mul(a, d);
    const ComplexPoly bc = poly_mul(b, c);
    for (std::size_t k = 0; k < ad.size(); ++k) ad[k] -= bc[k];
    return ad;
}

Complex eval(const ComplexPoly& q, Complex z) {
    Complex acc = 0.0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

// |q(z)| relative to the derivative of the absolute-value polynomial at |z|.
double root_residual(const ComplexPoly& q, Complex z) {
    const double r = std::abs(z);
    double scale = 0.0, rk = 1.0;
    for (std::size_t k = 1; k < q.size(); ++k) {
        scale += static_cast<double>(k) * std::abs(q[k]) * rk;
        rk *= r;
    }
    return std::abs(eval(q, z)) / std::max(scale, std::numeric_limits<double>::min());
}


// Iterates converge only to about eps^(1/m) near a root of multiplicity m.
// Such a root is a simple root of the (m-1)-th derivative, so each cluster is
// replaced by m copies of its Newton-polished centroid when that lowers the residual.
void polish_clusters(const ComplexPoly& q, std::vector<Complex>& z) {
    constexpr double link = 1e-6;
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= link * std::max(1.0, std::abs(z[i]))) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(i);
    for (const auto& members : clusters) {
        const std::size_t m = members.size();
        if (m < 2) continue;
        ComplexPoly d = q;
        for (std::size_t order = 1; order < m; ++order) {
            ComplexPoly next(d.size() - 1);
            for (std::size_t k = 1; k < d.size(); ++k) next[k - 1] = static_cast<double>(k) * d[k];
            d = std::move(next);
        }
        ComplexPoly dd(d.size() > 1 ? d.size() - 1 : 1, Complex(0.0));
        for (std::size_t k = 1; k < d.size(); ++k) dd[k - 1] = static_cast<double>(k) * d[k];
        Complex c = 0.0;
        for (std::size_t i : members) c += z[i];
        c /= static_cast<double>(m);
        for (int it = 0; it < 8; ++it) {
            const Complex slope = eval(dd, c);
            if (slope == Complex(0.0)) break;
            const Complex step = eval(d, c) / slope;
            c -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(c))) break;
        }
        double before = 0.0;
        for (std::size_t i : members) before = std::max(before, std::abs(z[i] - c));
        if (before <= link * std::max(1.0, std::abs(c)) && root_residual(q, c) < kRootResidualTolerance)
            for (std::size_t i : members) z[i] = c;
    }
}

} // namespace

std::vector<Complex> roots(const ComplexPoly& q_in) {
    ComplexPoly q = q_in;
    while (!q.empty() && q.back() == Complex(0.0)) q.pop_back();
    if (q.size() < 2) throw Error(Errc::InvalidInput, "roots needs degree >= 1 with nonzero leading coefficient");

    std::vector<Complex> out;
    std::size_t lead_zeros = 0;
    while (q[lead_zeros] == Complex(0.0)) ++lead_zeros;
    out.assign(lead_zeros, Complex(0.0));
    q.erase(q.begin(), q.begin() + static_cast<long>(lead_zeros));
    const std::size_t n = q.size() - 1;
    if (n == 0) return out;
    if (n == 1) {
        out.push_back(-q[0] / q[1]);
        return out;
    }

    ComplexPoly dq(n);
    for (std::size_t k = 1; k <= n; ++k) dq[k - 1] = static_cast<double>(k) * q[k];

    const double radius = std::pow(std::abs(q[0] / q[n]), 1.0 / static_cast<double>(n));
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4);

    std::vector<bool> done(n, false);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < kMaxRootIterations; ++it) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const Complex pz = eval(q, z[k]);
            const Complex dpz = eval(dq, z[k]);
            if (pz == Complex(0.0)) {
                done[k] = true;
                continue;
            }
            const Complex ratio = pz / dpz;
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const Complex w = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                z[k] += Complex(eps, eps) * (1.0 + std::abs(z[k]));
                all_done = false;
                continue;
            }
            z[k] -= w;
            if (std::abs(w) <= 4.0 * eps * std::abs(z[k])) done[k] = true;
            else all_done = false;
        }
        if (all_done) break;
    }
    polish_clusters(q, z);
    for (const Complex& r : z)
        if (!(root_residual(q, r) < kRootResidualTolerance))
            throw Error(Errc::NoConvergence, "Aberth iteration did not converge");
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

namespace {

double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    // Greedy matching over globally sorted pair distances.
    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    pairs.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) pairs.push_back({std::abs(a[i] - b[j]), i, j});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        return x.d != y.d ? x.d < y.d : (x.i != y.i ? x.i < y.i : x.j < y.j);
    });
    std::vector<bool> ua(a.size(), false), ub(b.size(), false);
    double worst = 0.0;
    std::size_t matched = 0;
    for (const Pair& p : pairs) {
        if (ua[p.i] || ub[p.j]) continue;
        ua[p.i] = ub[p.j] = true;
        worst = std::max(worst, p.d);
        if (++matched == a.size()) break;
    }
    return worst;
}

double cluster_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    constexpr double link = 1e-4;
    std::vector<Complex> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (std::abs(all[i] - all[j]) <= link * std::max(1.0, std::abs(all[i]))) parent[find(i)] = find(j);
    struct Acc {
        Complex sa = 0.0, sb = 0.0;
        std::size_t na = 0, nb = 0;
    };
    std::vector<Acc> acc(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        Acc& c = acc[find(i)];
        if (i < a.size()) { c.sa += all[i]; ++c.na; }
        else { c.sb += all[i]; ++c.nb; }
    }
    double worst = 0.0;
    for (const Acc& c : acc) {
        if (c.na + c.nb == 0) continue;
        if (c.na != c.nb) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, std::abs(c.sa - c.sb) / static_cast<double>(c.na));
    }
    return worst;
}

} // namespace

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    return std::min(matched_distance(a, b), cluster_distance(a, b));
}

namespace {

struct Trimmed {
    std::vector<Quaternion> coeffs; // coefficients from the lowest to the highest kept index
    std::size_t zero_roots = 0;     // number of quaternionic roots at the origin
};

Trimmed trim(const std::vector<Quaternion>& c) {
    double scale = 0.0;
    for (const Quaternion& q : c) scale = std::max(scale, abs(q));
    if (scale == 0.0) throw Error(Errc::InvalidInput, "zero polynomial has no zero set");
    const double thr = kNegligibleCoefficient * scale;
    std::size_t lo = 0, hi = c.size() - 1;
    while (abs(c[hi]) <= thr) --hi;
    while (abs(c[lo]) <= thr) ++lo;
    return {std::vector<Quaternion>(c.begin() + static_cast<long>(lo), c.begin() + static_cast<long>(hi) + 1), lo};
}

std::vector<Complex> representatives(const std::vector<Complex>& all) {
    std::vector<Complex> sorted = all;
    std::sort(sorted.begin(), sorted.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    std::vector<bool> used(sorted.size(), false);
    std::vector<Complex> reps;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t best = sorted.size();
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(sorted[j] - std::conj(sorted[i]));
            if (d < bd) { bd = d; best = j; }
        }
        if (best < sorted.size()) used[best] = true;
        const Complex z = sorted[i];
        reps.emplace_back(z.real(), std::abs(z.imag()));
    }
    std::sort(reps.begin(), reps.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return reps;
}

template <CoeffSide S>
ZeroReport zero_slice_impl(const QPoly<S>& f, const SliceFrame& fr, double tol) {
    const Trimmed t = trim(f.coeffs);
    ZeroReport rep;
    rep.all_roots.assign(2 * t.zero_roots, Complex(0.0));
    if (t.coeffs.size() > 1) {
        const QPoly<S> g = monic(QPoly<S>(t.coeffs));
        std::vector<Complex> det_roots;
        QMatrix comp;
        if constexpr (S == CoeffSide::Right) {
            det_roots = roots(det_poly(phi_L(g, fr)));
            comp = companion_left(g);
        } else {
            det_roots = roots(det_poly(phi_R(g, fr)));
            comp = companion_right(g);
        }
        const std::vector<Complex> eig = right_eigen_slice(comp, fr);
        rep.route_distance = multiset_distance(det_roots, eig);
        if (!(rep.route_distance <= tol))
            throw Error(Errc::RouteMismatch, "determinant roots and companion spectrum differ by " + std::to_string(rep.route_distance));
        rep.all_roots.insert(rep.all_roots.end(), det_roots.begin(), det_roots.end());
    }
    rep.slice_roots = representatives(rep.all_roots);
    for (const Complex& z : rep.slice_roots) {
        const double m = std::abs(z);
        rep.moduli.push_back(m);
        rep.all_inside_ball = rep.all_inside_ball && m < 1.0;
        rep.all_outside_closed_ball = rep.all_outside_closed_ball && m > 1.0;
    }
    return rep;
}

} // namespace

ZeroReport zero_slice(const QPolyL& f, const SliceFrame& fr, double tol) { return zero_slice_impl(f, fr, tol); }
ZeroReport zero_slice(const QPolyR& f, const SliceFrame& fr, double tol) { return zero_slice_impl(f, fr, tol); }

std::vector<DegreeZeroCheck> zeros_theorem_check(const MomentSequence& c, int N, const SliceFrame& fr, double tol) {
    const OrthonormalFamilies fam = orthonormal_polys(c, N);
    std::vector<DegreeZeroCheck> out;
    for (int n = 1; n <= N; ++n) {
        const auto un = static_cast<std::size_t>(n);
        DegreeZeroCheck chk;
        chk.degree = n;
        chk.left = zero_slice(fam.left[un], fr, tol);
        chk.right = zero_slice(fam.right[un], fr, tol);
        chk.left_rev = zero_slice(reverse(fam.left[un], n), fr, tol);
        chk.right_rev = zero_slice(reverse(fam.right[un], n), fr, tol);
        chk.inside = chk.left.all_inside_ball && chk.right.all_inside_ball;
        chk.outside = chk.left_rev.all_outside_closed_ball && chk.right_rev.all_outside_closed_ball;
        chk.left_right_distance = multiset_distance(chk.left.all_roots, chk.right.all_roots);
        chk.sets_equal = chk.left_right_distance <= tol;
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace quatopuc
