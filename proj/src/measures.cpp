#include "quatopuc/measures.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace quatopuc {

MomentSequence::MomentSequence(std::vector<Quaternion> nonnegative) : c_(std::move(nonnegative)) {
    if (c_.empty()) throw Error(Errc::InvalidInput, "moment sequence needs c_0");
    if (!(abs(c_[0] - units::one) <= kNormalizationTolerance))
        throw Error(Errc::InvalidInput, "moment sequence must satisfy c_0 = 1");
    c_[0] = units::one;
}

MomentSequence MomentSequence::lebesgue(int horizon) {
    std::vector<Quaternion> c(static_cast<std::size_t>(horizon) + 1);
    c[0] = units::one;
    return MomentSequence(std::move(c));
}

Quaternion MomentSequence::operator()(int n) const {
    const auto idx = static_cast<std::size_t>(std::abs(n));
    if (idx >= c_.size())
        throw Error(Errc::HorizonExceeded, "moment index " + std::to_string(n) + " beyond horizon " + std::to_string(horizon()));
    return n >= 0 ? c_[idx] : conj(c_[idx]);
}

MomentSequence MomentSequence::truncated(int horizon) const {
    if (horizon > this->horizon()) throw Error(Errc::HorizonExceeded, "cannot extend a moment sequence");
    return MomentSequence(std::vector<Quaternion>(c_.begin(), c_.begin() + horizon + 1));
}

QMatrix toeplitz(const MomentSequence& c, int n) {
    if (n > c.horizon()) throw Error(Errc::HorizonExceeded, "Toeplitz order beyond moment horizon");
    const auto size = static_cast<std::size_t>(n) + 1;
    QMatrix t(size, size);
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t j = 0; j < size; ++j) t(k, j) = c(static_cast<int>(j) - static_cast<int>(k));
    return t;
}

std::vector<double> cholesky_pivots(const CMatrix& h, double tol) {
    const Eigen::Index n = h.rows();
    CMatrix l = CMatrix::Zero(n, n);
    std::vector<double> pivots;
    pivots.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex d = h(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * std::conj(l(j, k));
        const double pivot = d.real();
        pivots.push_back(pivot);
        if (!(pivot > tol)) break;
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            Complex s = h(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return pivots;
}

NontrivialReport is_nontrivial(const MomentSequence& c, int n, const SliceFrame& fr) {
    // Permuting chi_mat into 2x2 blocks keeps leading blocks nested, so the
    // first failing pivot identifies the first degenerate Toeplitz order.
    const Eigen::MatrixXd u = block_permutation(n + 1);
    const CMatrix blocks = u.transpose() * chi_mat(toeplitz(c, n), fr) * u;
    const std::vector<double> pivots = cholesky_pivots(blocks);
    NontrivialReport rep;
    rep.min_pivot = *std::min_element(pivots.begin(), pivots.end());
    rep.nontrivial = static_cast<Eigen::Index>(pivots.size()) == blocks.rows() && rep.min_pivot > kPivotTolerance;
    if (!rep.nontrivial) rep.failing_order = static_cast<int>(pivots.size() - 1) / 2;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(blocks, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = eig.eigenvalues()(0);
    return rep;
}

QPositiveDensity::QPositiveDensity(SliceFrame frame, Coeffs w1, Coeffs w2) : frame_(frame) {
    auto complete = [](const Coeffs& in, auto mirror, const char* name) {
        Coeffs out = in;
        for (const auto& [n, v] : in) {
            const Complex want = mirror(v);
            auto it = out.find(-n);
            if (it == out.end()) {
                out.emplace(-n, want);
            } else if (!(std::abs(it->second - want) <= kSymmetryTolerance)) {
                throw Error(Errc::InvalidInput, std::string("density coefficients of ") + name + " violate the required symmetry");
            }
        }
        return out;
    };
    w1_ = complete(w1, [](Complex v) { return std::conj(v); }, "w1");
    w2_ = complete(w2, [](Complex v) { return -v; }, "w2");
    if (std::abs(w1_[0].imag()) > kSymmetryTolerance) throw Error(Errc::InvalidInput, "w1_0 must be real");
    w1_[0] = w1_[0].real();
    w2_.erase(0);
}

int QPositiveDensity::degree() const noexcept {
    int d = 0;
    for (const auto& [n, v] : w1_) if (v != Complex(0.0)) d = std::max(d, std::abs(n));
    for (const auto& [n, v] : w2_) if (v != Complex(0.0)) d = std::max(d, std::abs(n));
    return d;
}

namespace {

Complex fourier_eval(const QPositiveDensity::Coeffs& coeffs, double theta) {
    Complex acc = 0.0;
    for (const auto& [n, v] : coeffs) acc += v * std::polar(1.0, n * theta);
    return acc;
}

double hermitian2_min_eigenvalue(const ComplexMat2& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    return 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
}

Complex coeff_or_zero(const QPositiveDensity::Coeffs& c, int n) {
    auto it = c.find(n);
    return it == c.end() ? Complex(0.0) : it->second;
}

} // namespace

Complex QPositiveDensity::w1_at(double theta) const { return fourier_eval(w1_, theta); }
Complex QPositiveDensity::w2_at(double theta) const { return fourier_eval(w2_, theta); }

ComplexMat2 QPositiveDensity::matrix_at(double theta) const {
    const Complex a = w1_at(theta);
    const Complex b = w2_at(theta);
    ComplexMat2 m;
    m << Complex(a.real(), 0.0), b, std::conj(b), Complex(w1_at(-theta).real(), 0.0);
    return m;
}

double density_min_eigenvalue(const QPositiveDensity& d, int points) {
    double lo = std::numeric_limits<double>::infinity();
    for (int k = 0; k < points; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / points;
        lo = std::min(lo, hermitian2_min_eigenvalue(d.matrix_at(theta)));
    }
    return lo;
}

MomentSequence moments_from_density(const QPositiveDensity& d, int N) {
    std::vector<Quaternion> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) c[static_cast<std::size_t>(n)] = join(coeff_or_zero(d.w1(), -n), coeff_or_zero(d.w2(), -n), d.frame());
    return MomentSequence(std::move(c));
}

namespace {

std::vector<Quaternion> quadrature_moments(const QPositiveDensity& d, int N, int points) {
    std::vector<Complex> v1(static_cast<std::size_t>(points)), v2(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / points;
        v1[static_cast<std::size_t>(k)] = d.w1_at(theta);
        v2[static_cast<std::size_t>(k)] = d.w2_at(theta);
    }
    std::vector<Quaternion> c(static_cast<std::size_t>(N) + 1);
    std::vector<Complex> t1(v1.size()), t2(v2.size());
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k < points; ++k) {
            const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * ((static_cast<long>(n) * k) % points) / points);
            t1[static_cast<std::size_t>(k)] = e * v1[static_cast<std::size_t>(k)];
            t2[static_cast<std::size_t>(k)] = e * v2[static_cast<std::size_t>(k)];
        }
        c[static_cast<std::size_t>(n)] = join(pairwise_sum(t1) / double(points), pairwise_sum(t2) / double(points), d.frame());
    }
    return c;
}

} // namespace

QuadratureMoments moments_from_density_quadrature(const QPositiveDensity& d, int N, int points) {
    std::vector<Quaternion> fine = quadrature_moments(d, N, points);
    const std::vector<Quaternion> coarse = quadrature_moments(d, N, points / 2);
    double err = 0.0;
    for (std::size_t n = 0; n < fine.size(); ++n) err = std::max(err, abs(fine[n] - coarse[n]));
    return {MomentSequence(std::move(fine)), err};
}

QPositiveDensity density_in_frame(const QPositiveDensity& d, const SliceFrame& target) {
    const int deg = d.degree();
    const MomentSequence c = moments_from_density(d, deg);
    QPositiveDensity::Coeffs w1, w2;
    for (int n = 0; n <= deg; ++n) {
        const auto [z1, z2] = split(c(n), target);
        w1[-n] = z1;
        if (n > 0) w2[-n] = z2;
    }
    return {target, std::move(w1), std::move(w2)};
}

MomentSequence moments_from_atoms(const AtomicQMeasure& atoms, int N, const SliceFrame& fr) {
    auto moment = [&](int n) {
        Quaternion acc;
        for (const Atom& a : atoms) acc += fr.embed(std::polar(1.0, n * a.angle)) * a.weight;
        return acc;
    };
    std::vector<Quaternion> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = moment(n);
        if (!(abs(moment(-n) - conj(c[static_cast<std::size_t>(n)])) <= 1e-12))
            throw Error(Errc::InvalidInput, "atomic weights do not define a Hermitian moment sequence");
    }
    return MomentSequence(std::move(c));
}

std::vector<ComplexMat2> matrix_moments(const MomentSequence& c, const SliceFrame& fr) {
    std::vector<ComplexMat2> out;
    out.reserve(c.nonnegative().size());
    for (const Quaternion& q : c.nonnegative()) out.push_back(chi(q, fr));
    return out;
}

std::vector<ComplexMat2> herglotz_coefficients(const MomentSequence& c, int N, const SliceFrame& fr) {
    std::vector<ComplexMat2> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) out.push_back(chi(c(-n), fr));
    return out;
}

double wiener_coefficient_norm(const QPositiveDensity& d) {
    std::vector<double> terms;
    std::map<int, std::pair<Complex, Complex>> combined;
    for (const auto& [n, v] : d.w1()) combined[n].first = v;
    for (const auto& [n, v] : d.w2()) combined[n].second = v;
    for (const auto& [n, pr] : combined) terms.push_back(std::hypot(std::abs(pr.first), std::abs(pr.second)));
    return pairwise_sum(terms);
}

namespace {

template <class T>
T pairwise(std::span<const T> v) {
    if (v.size() <= 8) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

} // namespace

Complex pairwise_sum(std::span<const Complex> values) { return pairwise(values); }
double pairwise_sum(std::span<const double> values) { return pairwise(values); }

} // namespace quatopuc
