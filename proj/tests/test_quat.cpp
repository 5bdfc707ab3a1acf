#include "support.hpp"

#include <Eigen/Cholesky>

#include <limits>

using namespace quatopuc;
using namespace quatopuc::test;
using quatopuc::units::i;
using quatopuc::units::j;
using quatopuc::units::k;

TEST_SUITE("quat") {

TEST_CASE("hamilton relations") {
    CHECK(qmul(i, j) == k);
    CHECK(qmul(j, k) == i);
    CHECK(qmul(k, i) == j);
    CHECK(qmul(i, i) == Quaternion(-1.0));
    CHECK(qmul(j, i) == -k);
    const Quaternion p(0.3, -1.2, 2.5, 0.7);
    CHECK(qmul(units::one, p) == p);
    CHECK(qmul(p, units::one) == p);
}

TEST_CASE("conjugate, norm and inverse") {
    const Quaternion p(1.0, 2.0, 3.0, 4.0);
    CHECK(conj(p) == Quaternion(1.0, -2.0, -3.0, -4.0));
    CHECK(norm2(p) == 30.0);
    CHECK(dist(p * inverse(p), units::one) < 1e-15);
    CHECK(dist(inverse(p) * p, units::one) < 1e-15);
}

TEST_CASE("frames reject non-orthonormal units") {
    CHECK_THROWS_AS(SliceFrame(i, i), Error);
    CHECK_THROWS_AS(SliceFrame(Quaternion(0.0, 2.0), j), Error);
    CHECK_THROWS_AS(SliceFrame(Quaternion(1.0), j), Error);
    const SliceFrame fr(j, k);
    CHECK(fr.k() == i);
}

TEST_CASE("split reads off coordinates") {
    const SplitPair s = split(Quaternion(1.0, 2.0, 3.0, 4.0), SliceFrame{});
    CHECK(s.z1 == Complex(1.0, 2.0));
    CHECK(s.z2 == Complex(3.0, 4.0));

    Sampler rng(11);
    for (int t = 0; t < 20; ++t) {
        const SplitPair r = split(Quaternion(5.0), rng.frame());
        CHECK(r.z1 == Complex(5.0, 0.0));
        CHECK(r.z2 == Complex(0.0, 0.0));
    }
}

TEST_CASE("split and join reassemble") {
    Sampler rng(12);
    for (int t = 0; t < 2000; ++t) {
        const Quaternion p = rng.in_ball(10.0);
        const SplitPair s = split(p, SliceFrame{});
        CHECK(join(s.z1, s.z2, SliceFrame{}) == p);
    }
    // In a generic frame the frame vectors are themselves rounded, which
    // costs a few ulp of the largest coordinate.
    double worst_ulps = 0.0;
    for (int t = 0; t < 20000; ++t) {
        const SliceFrame fr = rng.frame();
        const Quaternion p = rng.in_ball(10.0);
        const SplitPair s = split(p, fr);
        const Quaternion q = join(s.z1, s.z2, fr);
        CHECK(dist(p, s.z1.real() + fr.i() * s.z1.imag() + (s.z2.real() + fr.i() * s.z2.imag()) * fr.j()) < 1e-13);
        const double top = std::max({std::abs(p.w), std::abs(p.x), std::abs(p.y), std::abs(p.z)});
        const double ulp = std::nextafter(top, 2 * top) - top;
        const double err = std::max({std::abs(q.w - p.w), std::abs(q.x - p.x), std::abs(q.y - p.y), std::abs(q.z - p.z)});
        worst_ulps = std::max(worst_ulps, err / ulp);
    }
    CHECK(worst_ulps <= 8.0);
}

TEST_CASE("chi on units") {
    CHECK(chi(units::one, SliceFrame{}) == ComplexMat2::Identity());
    ComplexMat2 cj;
    cj << 0.0, 1.0, -1.0, 0.0;
    CHECK(chi(j, SliceFrame{}) == cj);
    ComplexMat2 ci;
    ci << Complex(0, 1), 0.0, 0.0, Complex(0, -1);
    CHECK(chi(i, SliceFrame{}) == ci);
}

TEST_CASE("chi is an isometric star homomorphism") {
    Sampler rng(13);
    for (int t = 0; t < 100; ++t) {
        const SliceFrame fr = rng.frame();
        const Quaternion p = rng.in_ball(3.0), q = rng.in_ball(3.0);
        const double scale = 1.0 + abs(p) * abs(q);
        CHECK(dist(chi(p * q, fr), chi(p, fr) * chi(q, fr)) < 1e-12 * scale);
        CHECK(dist(chi(p + q, fr), chi(p, fr) + chi(q, fr)) < 1e-12 * scale);
        CHECK(dist(chi(conj(p), fr), chi(p, fr).adjoint()) == 0.0);
        CHECK(std::abs(operator_norm(chi(p, fr)) - abs(p)) < 1e-12 * (1.0 + abs(p)));
    }
}

TEST_CASE("chi_inv") {
    CHECK(chi_inv(ComplexMat2::Identity(), SliceFrame{}) == units::one);
    Sampler rng(14);
    for (int t = 0; t < 100; ++t) {
        const SliceFrame fr = rng.frame();
        const Quaternion p = rng.in_ball(2.0);
        CHECK(dist(chi_inv(chi(p, fr), fr), p) < 1e-14);
    }
    ComplexMat2 bad;
    bad << 1.0, 0.0, 0.0, 2.0;
    try {
        chi_inv(bad, SliceFrame{});
        FAIL("expected NotInImage");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInImage);
    }
    CHECK(chi_image_residual(bad) > 0.5);
}

TEST_CASE("chi_mat of matrices") {
    QMatrix one(1, 1);
    one(0, 0) = units::one;
    CHECK(chi_mat(one, SliceFrame{}) == Eigen::Matrix2cd::Identity());

    Sampler rng(15);
    const SliceFrame fr = rng.frame();
    const QMatrix a = random_qmatrix(rng, 3, 3), b = random_qmatrix(rng, 3, 3);
    CHECK((chi_mat(a * b, fr) - chi_mat(a, fr) * chi_mat(b, fr)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((chi_mat(a.adjoint(), fr) - chi_mat(a, fr).adjoint()).cwiseAbs().maxCoeff() == 0.0);

    // A^* A + I is Hermitian positive definite; so must be its image.
    QMatrix h = a.adjoint() * a;
    for (std::size_t d = 0; d < 3; ++d) h(d, d) += units::one;
    const CMatrix ch = chi_mat(h, fr);
    CHECK((ch - ch.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(Eigen::LLT<CMatrix>(ch).info() == Eigen::Success);
}

TEST_CASE("printed block permutations") {
    CHECK(block_permutation(1) == Eigen::Matrix2d::Identity());
    Eigen::Matrix4d u2;
    u2 << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 1, 0, 0,
          0, 0, 0, 1;
    CHECK(block_permutation(2) == u2);
    Eigen::Matrix<double, 6, 6> u3;
    u3 << 1, 0, 0, 0, 0, 0,
          0, 0, 1, 0, 0, 0,
          0, 0, 0, 0, 1, 0,
          0, 1, 0, 0, 0, 0,
          0, 0, 0, 1, 0, 0,
          0, 0, 0, 0, 0, 1;
    CHECK(block_permutation(3) == u3);
    CHECK_THROWS_AS(block_permutation(0), Error);
}

TEST_CASE("block permutation conjugates blocks into the embedding exactly") {
    Sampler rng(16);
    for (int n = 1; n <= 6; ++n) {
        const SliceFrame fr = rng.frame();
        const QMatrix a = random_qmatrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        const CMatrix u = block_permutation(n).cast<Complex>();
        CHECK(chi_mat(a, fr) == u * chi_blocks(a, fr) * u.adjoint());
    }
}

TEST_CASE("right eigenvalue slices") {
    QMatrix r(1, 1);
    r(0, 0) = Quaternion(2.5);
    CHECK(same_roots(right_eigen_slice(r, SliceFrame{}), {2.5, 2.5}, 1e-14));
    QMatrix im(1, 1);
    im(0, 0) = i;
    CHECK(same_roots(right_eigen_slice(im, SliceFrame{}), {Complex(0, 1), Complex(0, -1)}, 1e-14));

    Sampler rng(17);
    for (int t = 0; t < 10; ++t) {
        const SliceFrame fr = rng.frame();
        const QMatrix a = random_qmatrix(rng, 3, 3);
        QMatrix h = a.adjoint() * a;
        const std::vector<Complex> ev = right_eigen_slice(h, fr);
        REQUIRE(ev.size() == 6);
        std::vector<double> re;
        for (Complex z : ev) {
            CHECK(std::abs(z.imag()) < 1e-12);
            re.push_back(z.real());
            // Characteristic-polynomial oracle: chi_mat(h) - z I is singular.
            const CMatrix shifted = chi_mat(h, fr) - z * CMatrix::Identity(6, 6);
            CHECK(std::abs(shifted.determinant()) < 1e-9 * std::pow(1.0 + std::abs(z), 6));
        }
        std::sort(re.begin(), re.end());
        for (std::size_t m = 0; m < 6; m += 2) CHECK(std::abs(re[m] - re[m + 1]) < 1e-9);

        const QMatrix g = random_qmatrix(rng, 4, 4);
        std::vector<Complex> spec = right_eigen_slice(g, fr), mirrored;
        for (Complex z : spec) mirrored.push_back(std::conj(z));
        CHECK(multiset_distance(spec, mirrored) < 1e-9);
    }
}

} // TEST_SUITE
