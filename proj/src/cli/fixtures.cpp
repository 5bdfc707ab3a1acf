#include "quatopuc/cli/fixtures.hpp"

#include "quatopuc/errors.hpp"
#include "quatopuc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quatopuc::cli {

const char* kind_name(FixtureKind k) noexcept {
    switch (k) {
    case FixtureKind::Moments: return "moments";
    case FixtureKind::Verblunsky: return "verblunsky";
    case FixtureKind::Density: return "density";
    }
    return "moments";
}

namespace {

QPositiveDensity::Coeffs coeffs_from_json(const Json& j) {
    QPositiveDensity::Coeffs out;
    if (j.is_null()) return out;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 3) throw Error(Errc::InvalidInput, "density coefficients are [n, re, im] triples");
        out[e[0].get<int>()] = Complex(e[1].get<double>(), e[2].get<double>());
    }
    return out;
}

Json coeffs_to_json(const QPositiveDensity::Coeffs& c) {
    Json a = Json::array();
    for (const auto& [n, v] : c) a.push_back(Json::array({n, v.real(), v.imag()}));
    return a;
}

} // namespace

// [[n, [w, x, y, z]], ...]; absent orders are zero and negative orders must be conjugates.
std::vector<Quaternion> moments_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::InvalidInput, "moments are an array of [n, [w, x, y, z]] pairs");
    std::map<int, Quaternion> given;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) throw Error(Errc::InvalidInput, "moments are [n, [w, x, y, z]] pairs");
        given[e[0].get<int>()] = quaternion_from_json(e[1]);
    }
    if (!given.count(0)) throw Error(Errc::InvalidInput, "moments need c_0");
    std::vector<Quaternion> c(static_cast<std::size_t>(given.rbegin()->first) + 1);
    for (const auto& [n, q] : given)
        if (n >= 0) c[static_cast<std::size_t>(n)] = q;
    for (const auto& [n, q] : given) {
        if (n >= 0) continue;
        const auto m = static_cast<std::size_t>(-n);
        if (m >= c.size() || !(abs(conj(c[m]) - q) <= MomentSequence::kNormalizationTolerance))
            throw Error(Errc::InvalidInput, "moment c_" + std::to_string(n) + " is not the conjugate of c_" + std::to_string(-n));
    }
    return c;
}

Fixture fixture_from_json(const Json& in) {
    try {
        const Json& j = in.contains("result") && in["result"].is_object() && in["result"].contains("kind") ? in["result"] : in;
        Fixture f;
        const std::string kind = j.at("kind").get<std::string>();
        f.frame = frame_from_json(j.value("frame", Json()));
        if (j.contains("provenance")) f.provenance = j["provenance"];
        if (kind == "moments") {
            f.kind = FixtureKind::Moments;
            f.moments = moments_from_json(j.at("moments"));
            MomentSequence check(f.moments); // validates c_0
            f.moments = check.nonnegative();
        } else if (kind == "verblunsky") {
            f.kind = FixtureKind::Verblunsky;
            f.gammas = quaternions_from_json(j.at("gammas"));
        } else if (kind == "density") {
            f.kind = FixtureKind::Density;
            f.density.emplace(f.frame, coeffs_from_json(j.at("w1")), coeffs_from_json(j.value("w2", Json())));
        } else {
            throw Error(Errc::InvalidInput, "unknown fixture kind '" + kind + "'");
        }
        return f;
    } catch (const Json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("malformed fixture: ") + e.what());
    }
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw Error(Errc::InvalidInput, path + " is not valid JSON: " + e.what());
    }
    return fixture_from_json(j);
}

Json moments_to_json(const std::vector<Quaternion>& c) {
    Json a = Json::array();
    for (std::size_t n = 0; n < c.size(); ++n) a.push_back(Json::array({n, to_json(c[n])}));
    return a;
}

Json to_json(const Fixture& f) {
    Json j{{"kind", kind_name(f.kind)}, {"frame", to_json(f.frame)}};
    if (!f.provenance.empty()) j["provenance"] = f.provenance;
    switch (f.kind) {
    case FixtureKind::Moments: j["moments"] = moments_to_json(f.moments); break;
    case FixtureKind::Verblunsky: j["gammas"] = to_json(f.gammas); break;
    case FixtureKind::Density:
        j["w1"] = coeffs_to_json(f.density->w1());
        j["w2"] = coeffs_to_json(f.density->w2());
        break;
    }
    return j;
}

MomentSequence fixture_moments(const Fixture& f, int N) {
    switch (f.kind) {
    case FixtureKind::Moments: {
        const MomentSequence c(f.moments);
        if (N > c.horizon()) throw Error(Errc::HorizonExceeded, "fixture moments stop at order " + std::to_string(c.horizon()));
        return c.truncated(N);
    }
    case FixtureKind::Verblunsky: {
        VerblunskySeq g = f.gammas;
        g.resize(std::max(g.size(), static_cast<std::size_t>(N)));
        return moments_from_verblunsky(g, N, f.frame);
    }
    case FixtureKind::Density: return moments_from_density(*f.density, N);
    }
    throw Error(Errc::InvalidInput, "unknown fixture kind");
}

Fixture random_gamma_fixture(std::uint64_t seed, int count, double max_modulus, bool random_frame) {
    if (count < 0 || !(max_modulus >= 0.0 && max_modulus < 1.0))
        throw Error(Errc::InvalidInput, "random gammas need count >= 0 and 0 <= max modulus < 1");
    Sampler rng(seed);
    Fixture f;
    f.kind = FixtureKind::Verblunsky;
    if (random_frame) f.frame = rng.frame();
    f.gammas = rng.gammas(count, max_modulus);
    f.provenance = Json{{"generator", "random-gamma"}, {"seed", seed}, {"count", count}, {"max_modulus", max_modulus},
                        {"random_frame", random_frame}};
    return f;
}

Fixture smooth_density_fixture(std::uint64_t seed, int degree) {
    if (degree < 1) throw Error(Errc::InvalidInput, "smooth density needs degree >= 1");
    Sampler rng(seed);
    QPositiveDensity::Coeffs w1{{0, Complex(1.0)}}, w2;
    double total = 0.0;
    for (int n = 1; n <= degree; ++n) {
        const double decay = std::pow(0.5, n - 1);
        w1[n] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * decay;
        w2[n] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * decay;
        total += 2.0 * (std::abs(w1[n]) + std::abs(w2[n]));
    }
    // Gershgorin: the off-identity part of W(theta) has norm at most `total`.
    constexpr double budget = 0.9;
    for (int n = 1; n <= degree; ++n) {
        w1[n] *= budget / total;
        w2[n] *= budget / total;
    }
    Fixture f;
    f.kind = FixtureKind::Density;
    f.density.emplace(f.frame, std::move(w1), std::move(w2));
    f.provenance = Json{{"generator", "smooth-density"}, {"seed", seed}, {"degree", degree}};
    return f;
}

} // namespace quatopuc::cli
