#pragma once

#include "quatopuc/cli/json_io.hpp"
#include "quatopuc/measures.hpp"
#include "quatopuc/qopuc.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace quatopuc::cli {

enum class FixtureKind { Moments, Verblunsky, Density };
const char* kind_name(FixtureKind k) noexcept;

// One input file. Exactly one of the payloads is populated, matching `kind`.
struct Fixture {
    FixtureKind kind = FixtureKind::Moments;
    SliceFrame frame;
    std::vector<Quaternion> moments;      // c_0, c_1, ...
    VerblunskySeq gammas;
    std::optional<QPositiveDensity> density;
    Json provenance = Json::object();     // generator name and seed, when generated
};

// Accepts a fixture object or a command report whose result is a fixture.
Fixture fixture_from_json(const Json& j);
Fixture load_fixture(const std::string& path); // IO failures throw std::runtime_error
Json to_json(const Fixture& f);
Json moments_to_json(const std::vector<Quaternion>& c); // [[n, [w, x, y, z]], ...]
std::vector<Quaternion> moments_from_json(const Json& j); // requires c_0; negative orders must be conjugates

// Moments c_0..c_N implied by the fixture. Verblunsky fixtures shorter than N are
// continued by zeros; moment fixtures must reach the horizon.
MomentSequence fixture_moments(const Fixture& f, int N);

Fixture random_gamma_fixture(std::uint64_t seed, int count, double max_modulus, bool random_frame);
// Trigonometric density of the given degree whose matrix weight stays positive definite.
Fixture smooth_density_fixture(std::uint64_t seed, int degree);

} // namespace quatopuc::cli
