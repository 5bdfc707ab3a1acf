#include "quatopuc/series.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>

namespace quatopuc {

TruncSeries::TruncSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1, ComplexMat2::Zero()) {}

TruncSeries::TruncSeries(std::vector<ComplexMat2> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(ComplexMat2::Zero());
}

TruncSeries TruncSeries::constant(const ComplexMat2& c, int order) {
    TruncSeries s(order);
    s[0] = c;
    return s;
}

TruncSeries TruncSeries::truncated(int order) const {
    const int m = std::min(order, this->order());
    return TruncSeries(std::vector<ComplexMat2>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

TruncSeries TruncSeries::times_z() const {
    TruncSeries out(order());
    for (int n = order(); n >= 1; --n) out[n] = (*this)[n - 1];
    return out;
}

TruncSeries TruncSeries::div_z(double tol) const {
    const double lead = coeffs_.front().cwiseAbs().maxCoeff();
    if (!(lead <= tol))
        throw Error(Errc::ShiftResidual, "constant coefficient " + std::to_string(lead) + " does not vanish");
    if (order() == 0) return TruncSeries(0);
    return TruncSeries(std::vector<ComplexMat2>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
    return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out = a;
    return out += b;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out = a;
    return out -= b;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncSeries out(order);
    for (int n = 0; n <= order; ++n) {
        ComplexMat2 acc = ComplexMat2::Zero();
        for (int k = 0; k <= n; ++k) acc.noalias() += a[k] * b[n - k];
        out[n] = acc;
    }
    return out;
}

TruncSeries operator*(const ComplexMat2& m, const TruncSeries& a) {
    TruncSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) out[n] = m * a[n];
    return out;
}

TruncSeries operator*(const TruncSeries& a, const ComplexMat2& m) {
    TruncSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) out[n] = a[n] * m;
    return out;
}

TruncSeries series_inv(const TruncSeries& a) {
    Eigen::JacobiSVD<ComplexMat2> svd(a[0]);
    const auto& sv = svd.singularValues();
    if (!(sv(1) > 0.0) || sv(0) / sv(1) > kMaxConstantCondition)
        throw Error(Errc::SingularConstantTerm, "constant coefficient is not safely invertible");
    const ComplexMat2 a0inv = a[0].inverse();
    TruncSeries out(a.order());
    out[0] = a0inv;
    // b_n = -a_0^{-1} sum_{k=1}^{n} a_k b_{n-k}, which gives a * b = I.
    for (int n = 1; n <= a.order(); ++n) {
        ComplexMat2 acc = ComplexMat2::Zero();
        for (int k = 1; k <= n; ++k) acc.noalias() += a[k] * out[n - k];
        out[n] = -a0inv * acc;
    }
    return out;
}

TruncSeries herglotz_from_moments(std::span<const ComplexMat2> moments) {
    const int order = static_cast<int>(moments.size());
    TruncSeries F = TruncSeries::identity(order);
    for (int n = 1; n <= order; ++n) F[n] = 2.0 * moments[static_cast<std::size_t>(n - 1)];
    return F;
}

TruncSeries schur_from_herglotz(const TruncSeries& F) {
    if (F.order() < 1) throw Error(Errc::InvalidInput, "Herglotz series needs order >= 1");
    const TruncSeries I = TruncSeries::identity(F.order());
    const TruncSeries zf = (F - I) * series_inv(F + I);
    return zf.div_z(kShiftTolerance);
}

TruncSeries herglotz_from_schur(const TruncSeries& f) {
    TruncSeries zf(f.order() + 1);
    for (int n = 0; n <= f.order(); ++n) zf[n + 1] = f[n];
    const TruncSeries I = TruncSeries::identity(zf.order());
    return (I + zf) * series_inv(I - zf);
}

TruncSeries herglotz_from_schur_powers(const TruncSeries& f) {
    const int order = f.order() + 1;
    TruncSeries zf(order);
    for (int n = 0; n <= f.order(); ++n) zf[n + 1] = f[n];
    TruncSeries F = TruncSeries::identity(order);
    TruncSeries power = zf;
    // (z f)^n starts at z^n, so n = order is the last contributing power.
    for (int n = 1; n <= order; ++n) {
        for (int m = 0; m <= order; ++m) F[m] += 2.0 * power[m];
        power = power * zf;
    }
    return F;
}

double max_coeff_distance(const TruncSeries& a, const TruncSeries& b) {
    const int order = std::min(a.order(), b.order());
    double d = 0.0;
    for (int n = 0; n <= order; ++n) d = std::max(d, (a[n] - b[n]).cwiseAbs().maxCoeff());
    return d;
}

} // namespace quatopuc
