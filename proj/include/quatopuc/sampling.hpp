#pragma once

#include "quatopuc/quat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace quatopuc {

// Seeded generator whose output depends only on the seed: uniforms are built
// from raw 64-bit draws, never through implementation-defined std distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(); // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Quaternion direction();                    // uniform on the unit 3-sphere
    Quaternion imaginary_unit();               // uniform on the unit 2-sphere of imaginary units
    Quaternion in_ball(double radius);         // uniform in the radius-ball
    Quaternion in_shell(double r_lo, double r_hi); // modulus uniform in [r_lo, r_hi)
    SliceFrame frame();

    // gammas[n] uniform in the ball of radius max_modulus.
    std::vector<Quaternion> gammas(int count, double max_modulus);

private:
    std::mt19937_64 engine_;
};

} // namespace quatopuc
