#include "support.hpp"

using namespace quatopuc;
using namespace quatopuc::test;

TEST_SUITE("measures") {

TEST_CASE("moment sequences") {
    const MomentSequence leb = MomentSequence::lebesgue(5);
    CHECK(leb.horizon() == 5);
    CHECK(leb(0) == units::one);
    CHECK(leb(3) == Quaternion{});
    CHECK_THROWS_AS(leb(6), Error);
    CHECK_THROWS_AS(MomentSequence({Quaternion(2.0)}), Error);
    CHECK_THROWS_AS(MomentSequence({}), Error);

    Sampler rng(41);
    const MomentSequence c = random_gamma_moments(rng, 8, 0.9, rng.frame());
    for (int n = 0; n <= 8; ++n) CHECK(c(-n) == conj(c(n)));
    CHECK(c.truncated(3).horizon() == 3);
    CHECK_THROWS_AS(c.truncated(9), Error);
}

TEST_CASE("toeplitz matrices") {
    const QMatrix t0 = toeplitz(MomentSequence::lebesgue(4), 0);
    REQUIRE(t0.rows() == 1);
    CHECK(t0(0, 0) == units::one);
    const QMatrix t4 = toeplitz(MomentSequence::lebesgue(4), 4);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) CHECK(t4(r, c) == (r == c ? units::one : Quaternion{}));

    Sampler rng(42);
    const SliceFrame fr = rng.frame();
    const Quaternion g0 = rng.in_ball(0.5);
    const MomentSequence c = moments_from_verblunsky({g0, Quaternion{}}, 2, fr);
    const QMatrix t = toeplitz(c, 2);
    // Entry (k, l) is c_{l-k}; the embedded moments come from the matrix engine.
    const std::vector<ComplexMat2> C = moments_from_alphas(MatVerblunskySeq{chi(g0, fr), ComplexMat2::Zero()}, 2);
    CHECK(dist(t(0, 1), conj(chi_inv(C[0], fr))) < 1e-15);
    CHECK(dist(t(0, 2), conj(chi_inv(C[1], fr))) < 1e-15);
    CHECK(dist(t(1, 0), chi_inv(C[0], fr)) < 1e-15);
    CHECK(dist(t(0, 1), conj(g0)) < 1e-15);
}

TEST_CASE("non-triviality") {
    CHECK(is_nontrivial(MomentSequence::lebesgue(10), 10).nontrivial);

    const MomentSequence atom = moments_from_atoms({{0.0, units::one}}, 4);
    for (int n = 0; n <= 4; ++n) CHECK(atom(n) == units::one);
    CHECK(is_nontrivial(atom, 0).nontrivial);
    for (int n = 1; n <= 4; ++n) {
        const NontrivialReport r = is_nontrivial(atom, n);
        CHECK_FALSE(r.nontrivial);
        CHECK(r.failing_order == 1);
    }

    Sampler rng(43);
    for (int t = 0; t < 20; ++t) {
        const SliceFrame fr = rng.frame();
        const MomentSequence c = random_gamma_moments(rng, 10, 0.9, fr);
        const NontrivialReport r = is_nontrivial(c, 10, fr);
        CHECK(r.nontrivial);
        CHECK(r.min_eigenvalue > 0.0);
    }
}

TEST_CASE("cholesky pivots") {
    CMatrix h(2, 2);
    h << 4.0, 2.0, 2.0, 5.0;
    const std::vector<double> p = cholesky_pivots(h);
    REQUIRE(p.size() == 2);
    CHECK(std::abs(p[0] - 4.0) < 1e-15);
    CHECK(std::abs(p[1] - 4.0) < 1e-15);
    h << 1.0, 1.0, 1.0, 1.0;
    const std::vector<double> singular = cholesky_pivots(h);
    REQUIRE(singular.size() == 2);
    CHECK(singular[1] == 0.0);
}

TEST_CASE("density symmetry") {
    const QPositiveDensity d(SliceFrame{}, {{0, 1.0}, {2, Complex(0.1, 0.2)}}, {{1, Complex(0.05, 0.0)}});
    CHECK(d.w1().at(-2) == Complex(0.1, -0.2));
    CHECK(d.w2().at(-1) == Complex(-0.05, 0.0));
    CHECK(d.degree() == 2);
    CHECK_THROWS_AS(QPositiveDensity(SliceFrame{}, {{0, 1.0}, {1, 0.2}, {-1, 0.3}}, {}), Error);
    CHECK_THROWS_AS(QPositiveDensity(SliceFrame{}, {{0, Complex(1.0, 0.5)}}, {}), Error);
}

TEST_CASE("moments by coefficient read-off") {
    const MomentSequence flat = moments_from_density(flat_density(), 6);
    CHECK(flat(0) == units::one);
    for (int n = 1; n <= 6; ++n) CHECK(flat(n) == Quaternion{});

    const Complex a(0.3, 0.4);
    const QPositiveDensity d(SliceFrame{}, {{0, 1.0}, {1, a / 2.0}, {-1, std::conj(a) / 2.0}}, {});
    const MomentSequence c = moments_from_density(d, 3);
    CHECK(c(1) == Quaternion(0.15, -0.2));
    CHECK(c(2) == Quaternion{});
}

TEST_CASE("Bernstein-Szego moments by quadrature") {
    // Closed form of the weight (1 - x^2)/|1 - x e^{it}|^2 is c_n = x^n.
    const double x = 0.5;
    const QPositiveDensity d = bernstein_szego(x);
    const QuadratureMoments q = moments_from_density_quadrature(d, 20);
    const MomentSequence exact = moments_from_density(d, 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(dist(q.moments(n), Quaternion(std::pow(x, n))) < 1e-12);
        CHECK(dist(exact(n), Quaternion(std::pow(x, n))) < 1e-15);
    }
    CHECK(q.error_estimate < 1e-12);
}

TEST_CASE("quadrature agrees with read-off for trigonometric densities") {
    Sampler rng(44);
    for (int degree : {1, 5, 16, 32}) {
        const SliceFrame fr = rng.frame();
        QPositiveDensity::Coeffs w1{{0, 1.0}}, w2;
        for (int n = 1; n <= degree; ++n) {
            w1[n] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * (0.2 / degree);
            w2[n] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * (0.2 / degree);
        }
        const QPositiveDensity d(fr, w1, w2);
        const MomentSequence exact = moments_from_density(d, degree + 2);
        const QuadratureMoments q = moments_from_density_quadrature(d, degree + 2);
        for (int n = 0; n <= degree + 2; ++n) CHECK(dist(exact(n), q.moments(n)) < 1e-12);
        CHECK(is_q_positive(d));
    }
}

TEST_CASE("density positivity") {
    CHECK(std::abs(density_min_eigenvalue(flat_density()) - 1.0) < 1e-15);
    CHECK(std::abs(density_min_eigenvalue(vanishing_density())) < 1e-15);
    CHECK(is_q_positive(vanishing_density()));
    const QPositiveDensity negative(SliceFrame{}, {{0, 1.0}, {1, 0.75}, {-1, 0.75}}, {});
    CHECK_FALSE(is_q_positive(negative));
}

TEST_CASE("densities in another frame describe the same moments") {
    Sampler rng(45);
    const QPositiveDensity d(SliceFrame{}, {{0, 1.0}, {1, Complex(0.2, 0.1)}, {2, 0.05}}, {{1, Complex(0.1, -0.1)}});
    for (int t = 0; t < 5; ++t) {
        const SliceFrame fr = rng.frame();
        const QPositiveDensity e = density_in_frame(d, fr);
        CHECK(e.frame() == fr);
        const MomentSequence a = moments_from_density(d, 4), b = moments_from_density(e, 4);
        for (int n = 0; n <= 4; ++n) CHECK(dist(a(n), b(n)) < 1e-15);
        CHECK(std::abs(density_min_eigenvalue(d) - density_min_eigenvalue(e)) < 1e-12);
    }
}

TEST_CASE("atomic measures") {
    const MomentSequence one = moments_from_atoms({{0.0, units::one}}, 5);
    for (int n = 0; n <= 5; ++n) CHECK(one(n) == units::one);

    // Atoms at 0 and pi split even from odd moments.
    const MomentSequence two = moments_from_atoms({{0.0, Quaternion(0.5)}, {std::numbers::pi, Quaternion(0.5)}}, 6);
    for (int n = 0; n <= 6; ++n) CHECK(dist(two(n), Quaternion(n % 2 == 0 ? 1.0 : 0.0)) < 1e-15);

    // +pi and -pi are one point of the circle.
    const double pi = std::numbers::pi;
    const MomentSequence same = moments_from_atoms({{pi, Quaternion(0.5)}, {-pi, Quaternion(0.5)}}, 6);
    for (int n = 0; n <= 6; ++n) CHECK(dist(same(n), Quaternion(n % 2 == 0 ? 1.0 : -1.0)) < 1e-15);

    // Hermitian symmetry with random positions and positive weights.
    Sampler rng(46);
    for (int t = 0; t < 10; ++t) {
        const SliceFrame fr = rng.frame();
        AtomicQMeasure atoms;
        double total = 0.0;
        for (int m = 0; m < 4; ++m) {
            const double w = rng.uniform(0.1, 1.0);
            atoms.push_back({rng.uniform(-pi, pi), Quaternion(w)});
            total += w;
        }
        for (Atom& a : atoms) a.weight = a.weight / total;
        const MomentSequence c = moments_from_atoms(atoms, 8, fr);
        for (int n = 0; n <= 8; ++n) CHECK(c(-n) == conj(c(n)));
        CHECK_FALSE(is_nontrivial(c, 8, fr).nontrivial);
    }
    CHECK_THROWS_AS(moments_from_atoms({{0.5, Quaternion(0.5, 0.0, 0.5)}, {1.0, Quaternion(0.5)}}, 3), Error);
}

TEST_CASE("matrix moments") {
    const std::vector<ComplexMat2> leb = matrix_moments(MomentSequence::lebesgue(3));
    CHECK(leb[0] == ComplexMat2::Identity());
    for (std::size_t n = 1; n < leb.size(); ++n) CHECK(leb[n] == ComplexMat2::Zero());

    Sampler rng(47);
    const SliceFrame fr = rng.frame();
    const MomentSequence real_c = moments_from_density(bernstein_szego(0.4, 64, fr), 6);
    for (const ComplexMat2& m : matrix_moments(real_c, fr)) {
        CHECK(m(0, 1) == Complex(0.0));
        CHECK(m(1, 0) == Complex(0.0));
    }

    // One nonzero Verblunsky coefficient: the Herglotz coefficients are
    // chi(gamma_0)^n and the moments their adjoints.
    const Quaternion g0 = rng.in_ball(0.7);
    const MomentSequence c = moments_from_verblunsky({g0, {}, {}, {}, {}, {}}, 6, fr);
    const std::vector<ComplexMat2> C = matrix_moments(c, fr);
    const std::vector<ComplexMat2> H = herglotz_coefficients(c, 6, fr);
    ComplexMat2 power = ComplexMat2::Identity();
    for (std::size_t n = 0; n < C.size(); ++n) {
        CHECK(dist(C[n], power.adjoint()) < 1e-14);
        if (n > 0) CHECK(dist(H[n - 1], power) < 1e-14);
        power = power * chi(g0, fr);
    }
}

TEST_CASE("wiener norm") {
    CHECK(wiener_coefficient_norm(flat_density()) == 1.0);
    CHECK(std::abs(wiener_coefficient_norm(vanishing_density()) - 2.0) < 1e-15);
    const double at64 = wiener_coefficient_norm(bernstein_szego(0.5, 64));
    const double at128 = wiener_coefficient_norm(bernstein_szego(0.5, 128));
    CHECK(std::abs(at64 - at128) < 1e-8);
    CHECK(std::abs(at128 - 3.0) < 1e-12);
}

TEST_CASE("pairwise summation") {
    std::vector<double> v(1000, 0.1);
    CHECK(std::abs(pairwise_sum(v) - 100.0) < 1e-12);
    std::vector<Complex> z{Complex(1, 2), Complex(3, -1)};
    CHECK(pairwise_sum(z) == Complex(4, 1));
}

} // TEST_SUITE
