#include "support.hpp"

using namespace quatopuc;
using namespace quatopuc::test;

namespace {

// Intersection of the zero sphere of a with the slice: Re a +- |Im a| i.
std::vector<Complex> sphere_slice(const Quaternion& a) {
    const double im = abs(imag_part(a));
    return {Complex(a.w, im), Complex(a.w, -im)};
}

// (p - a_1) * ... * (p - a_m), with coefficients on the right.
QPolyL planted(const std::vector<Quaternion>& zs) {
    QPolyL f({units::one});
    for (const Quaternion& a : zs) f = star_mul(f, QPolyL({-a, units::one}));
    return f;
}

QPolyR planted_right(const std::vector<Quaternion>& zs) {
    QPolyR f({units::one});
    for (const Quaternion& a : zs) f = star_mul(f, QPolyR({-a, units::one}));
    return f;
}

std::vector<Complex> planted_slice(const std::vector<Quaternion>& zs) {
    std::vector<Complex> out;
    for (const Quaternion& a : zs)
        for (Complex z : sphere_slice(a)) out.push_back(z);
    return out;
}

ComplexPoly from_roots(const std::vector<Complex>& rs) {
    ComplexPoly q{Complex(1.0)};
    for (Complex r : rs) {
        ComplexPoly next(q.size() + 1, Complex(0.0));
        for (std::size_t k = 0; k < q.size(); ++k) {
            next[k + 1] += q[k];
            next[k] -= r * q[k];
        }
        q = next;
    }
    return q;
}

} // namespace

TEST_SUITE("zeros") {

TEST_CASE("companion matrices") {
    const Quaternion a(0.3, 0.1, -0.2, 0.4);
    const QMatrix c1 = companion_left(QPolyL({-a, units::one}));
    REQUIRE(c1.rows() == 1);
    CHECK(c1(0, 0) == a);
    const QMatrix c2 = companion_left(QPolyL({{}, {}, units::one}));
    CHECK(c2(0, 0) == Quaternion{});
    CHECK(c2(0, 1) == Quaternion{});
    CHECK(c2(1, 0) == units::one);
    CHECK(c2(1, 1) == Quaternion{});
    CHECK(companion_right(QPolyR({-a, units::one}))(0, 0) == a);
    try {
        companion_left(QPolyL({units::one, Quaternion(2.0)}));
        FAIL("expected NotMonic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotMonic);
    }
}

TEST_CASE("monic normalization") {
    Sampler rng(71);
    const QPolyL f = random_poly<QPolyL>(rng, 4);
    const QPolyL m = monic(f);
    CHECK(m.coeffs.back() == units::one);
    // Right scaling keeps the zero set.
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(dist(m.coeffs[k] * f.coeffs.back(), f.coeffs[k]) < 1e-14);
    const QPolyR g = random_poly<QPolyR>(rng, 4);
    const QPolyR mg = monic(g);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(dist(g.coeffs.back() * mg.coeffs[k], g.coeffs[k]) < 1e-14);
}

TEST_CASE("planted roots through the companion spectrum") {
    Sampler rng(72);
    for (int t = 0; t < 20; ++t) {
        const SliceFrame fr = rng.frame();
        std::vector<Quaternion> zs;
        for (int m = 0; m < 5; ++m) zs.push_back(rng.in_ball(1.5));
        const std::vector<Complex> want = planted_slice(zs);
        CHECK(same_roots(right_eigen_slice(companion_left(planted(zs)), fr), want, 1e-8));
        CHECK(same_roots(right_eigen_slice(companion_right(planted_right(zs)), fr), want, 1e-8));
    }
}

TEST_CASE("determinant polynomials") {
    const ComplexPoly z2 = det_poly(MatrixPoly{ComplexMat2::Zero(), ComplexMat2::Identity()});
    REQUIRE(z2.size() == 3);
    CHECK(z2[0] == Complex(0.0));
    CHECK(z2[1] == Complex(0.0));
    CHECK(z2[2] == Complex(1.0));

    Sampler rng(73);
    const SliceFrame fr = rng.frame();
    const Quaternion g = rng.in_ball(1.0);
    const ComplexPoly lin = det_poly(phi_L(QPolyL({-g, units::one}), fr));
    CHECK(std::abs(lin[0] - norm2(g)) < 1e-15);
    CHECK(std::abs(lin[1] + 2 * g.w) < 1e-15);
    CHECK(std::abs(lin[2] - 1.0) < 1e-15);

    MatrixPoly p;
    for (int k = 0; k < 5; ++k) p.push_back(random_matrix(rng));
    const ComplexPoly q = det_poly(p);
    for (int t = 0; t < 10; ++t) {
        const Complex z(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
        ComplexMat2 at = ComplexMat2::Zero();
        Complex zk = 1.0;
        for (const ComplexMat2& m : p) {
            at += zk * m;
            zk *= z;
        }
        CHECK(std::abs(eval(q, z) - at.determinant()) < 1e-12 * (1.0 + std::abs(at.determinant())));
    }
}

TEST_CASE("scalar root finder") {
    CHECK(same_roots(roots({1.0, 0.0, 1.0}), {Complex(0, 1), Complex(0, -1)}, 1e-14));

    const std::vector<Complex> lin{Complex(0.5), Complex(-0.25, 0.5), Complex(-0.25, -0.5), Complex(1.5, 0.1), Complex(-1.0)};
    CHECK(same_roots(roots(from_roots(lin)), lin, 1e-10));

    std::vector<Complex> circle;
    for (int m = 0; m < 12; ++m) circle.push_back(std::polar(0.9, 2 * std::numbers::pi * (m + 0.3) / 12));
    const std::vector<Complex> found = roots(from_roots(circle));
    CHECK(same_roots(found, circle, 1e-8));
    for (Complex z : found) CHECK(std::abs(std::abs(z) - 0.9) < 1e-8);

    // Double roots, as from real-coefficient quaternionic polynomials.
    const std::vector<Complex> doubled{Complex(0.3, 0.4), Complex(0.3, 0.4), Complex(0.3, -0.4), Complex(0.3, -0.4)};
    CHECK(same_roots(roots(from_roots(doubled)), doubled, 1e-8));
}

TEST_CASE("multiset distance") {
    CHECK(multiset_distance({1.0, 2.0}, {2.0, 1.0}) == 0.0);
    CHECK(std::abs(multiset_distance({1.0, 2.0}, {1.0, 2.5}) - 0.5) < 1e-15);
    CHECK(multiset_distance({Complex(0.5, 1e-7), Complex(0.5, -1e-7)}, {0.5, 0.5}) < 1e-12);
}

TEST_CASE("zero slices of single polynomials") {
    const ZeroReport p = zero_slice(QPolyL({Quaternion{}, units::one}));
    REQUIRE(p.slice_roots.size() == 1);
    CHECK(p.slice_roots[0] == Complex(0.0));
    CHECK(p.all_inside_ball);

    const MomentSequence bs = moments_from_density(bernstein_szego(0.5), 3);
    const OrthonormalFamilies fam = orthonormal_polys(bs, 3);
    const ZeroReport r = zero_slice(fam.right[1]);
    REQUIRE(r.slice_roots.size() == 1);
    CHECK(std::abs(r.slice_roots[0] - 0.5) < 1e-12);
    CHECK(r.all_inside_ball);
    const ZeroReport rev = zero_slice(reverse(fam.right[1], 1));
    REQUIRE(rev.slice_roots.size() == 1);
    CHECK(std::abs(rev.slice_roots[0] - 2.0) < 1e-12);
    CHECK(rev.all_outside_closed_ball);

    Sampler rng(74);
    const SliceFrame fr = rng.frame();
    const Quaternion g = rng.in_ball(0.9);
    const ZeroReport lin = zero_slice(QPolyL({-g, Quaternion(2.0)}), fr);
    CHECK(same_roots(lin.all_roots, sphere_slice(g / 2.0), 1e-12));
    CHECK_THROWS_AS(zero_slice(QPolyL({Quaternion{}})), Error);
}

TEST_CASE("zeros theorem") {
    for (const DegreeZeroCheck& d : zeros_theorem_check(MomentSequence::lebesgue(5), 5)) {
        for (double m : d.left.moduli) CHECK(m == 0.0);
        for (double m : d.right.moduli) CHECK(m == 0.0);
        CHECK(d.left_rev.slice_roots.empty());
        CHECK(d.sets_equal);
    }

    Sampler rng(75);
    for (int t = 0; t < 5; ++t) {
        const SliceFrame fr = rng.frame();
        const MomentSequence c = random_gamma_moments(rng, 10, 0.9, fr);
        for (const DegreeZeroCheck& d : zeros_theorem_check(c, 10, fr)) {
            CHECK(d.inside);
            CHECK(d.outside);
            CHECK(d.sets_equal);
            CHECK(d.left.route_distance < 1e-8);
            CHECK(d.right_rev.route_distance < 1e-8);
            CHECK(d.left.all_roots.size() == static_cast<std::size_t>(2 * d.degree));
        }
    }

    try {
        zeros_theorem_check(moments_from_atoms({{0.0, units::one}}, 4), 4);
        FAIL("expected NotPositiveDefinite");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPositiveDefinite);
    }
}

TEST_CASE("root moduli do not depend on the frame") {
    Sampler rng(76);
    const MomentSequence c = random_gamma_moments(rng, 6, 0.8, rng.frame());
    const OrthonormalFamilies fam = orthonormal_polys(c, 6);
    const std::vector<double> base = zero_slice(fam.left[6]).moduli;
    for (int t = 0; t < 5; ++t) {
        const std::vector<double> m = zero_slice(fam.left[6], rng.frame()).moduli;
        REQUIRE(m.size() == base.size());
        std::vector<double> a = base, b = m;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-8);
    }
}

} // TEST_SUITE
