#pragma once

#include "quatopuc/quat.hpp"

#include <span>
#include <vector>

namespace quatopuc {

// Power series in z with 2x2 complex coefficients, truncated after z^order.
// Arithmetic between series of different orders works at the smaller order.
class TruncSeries {
public:
    explicit TruncSeries(int order = 0);
    explicit TruncSeries(std::vector<ComplexMat2> coeffs);

    static TruncSeries constant(const ComplexMat2& c, int order);
    static TruncSeries identity(int order) { return constant(ComplexMat2::Identity(), order); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexMat2& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    ComplexMat2& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<ComplexMat2>& coeffs() const noexcept { return coeffs_; }

    TruncSeries truncated(int order) const;
    // Multiplication by z; the top coefficient falls off so the order is kept.
    TruncSeries times_z() const;
    // Division by z. The constant term must vanish to `tol`; the order drops by one.
    TruncSeries div_z(double tol) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);

private:
    std::vector<ComplexMat2> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const ComplexMat2& m, const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const ComplexMat2& m);

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

inline constexpr double kMaxConstantCondition = 1e12;
TruncSeries series_inv(const TruncSeries& a);

// F = I + 2 sum_{n=1}^{N} C_n z^n, with moments[n-1] = C_n.
TruncSeries herglotz_from_moments(std::span<const ComplexMat2> moments);

inline constexpr double kShiftTolerance = 1e-10;
// f with F = (I + z f)(I - z f)^{-1}; the result has order F.order() - 1.
TruncSeries schur_from_herglotz(const TruncSeries& F);

// F = (I + z f)(I - z f)^{-1}, of order f.order() + 1.
TruncSeries herglotz_from_schur(const TruncSeries& f);
// Same F written as I + 2 sum (z f)^n.
TruncSeries herglotz_from_schur_powers(const TruncSeries& f);

double max_coeff_distance(const TruncSeries& a, const TruncSeries& b);

} // namespace quatopuc
