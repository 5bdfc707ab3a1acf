#include "quatopuc/sampling.hpp"

#include <cmath>

namespace quatopuc {

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Quaternion Sampler::direction() {
    for (;;) {
        const Quaternion q(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
        const double r2 = norm2(q);
        if (r2 > 1e-4 && r2 <= 1.0) return q / std::sqrt(r2);
    }
}

Quaternion Sampler::imaginary_unit() {
    for (;;) {
        const Quaternion q(0.0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
        const double r2 = norm2(q);
        if (r2 > 1e-4 && r2 <= 1.0) return q / std::sqrt(r2);
    }
}

Quaternion Sampler::in_ball(double radius) {
    for (;;) {
        const Quaternion q(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
        if (norm2(q) < 1.0) return q * radius;
    }
}

Quaternion Sampler::in_shell(double r_lo, double r_hi) { return direction() * uniform(r_lo, r_hi); }

SliceFrame Sampler::frame() {
    const Quaternion i = imaginary_unit();
    for (;;) {
        const Quaternion v = imaginary_unit();
        Quaternion w = v - i * dot(v, i);
        const double n = abs(w);
        if (!(n > 0.1)) continue;
        w = w / n;
        w = w - i * dot(w, i);
        return {i, w / abs(w)};
    }
}

std::vector<Quaternion> Sampler::gammas(int count, double max_modulus) {
    std::vector<Quaternion> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) out.push_back(in_ball(max_modulus));
    return out;
}

} // namespace quatopuc
