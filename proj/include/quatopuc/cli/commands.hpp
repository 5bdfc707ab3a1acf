#pragma once

#include "quatopuc/cli/fixtures.hpp"
#include "quatopuc/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace quatopuc::cli {

enum class Command {
    MomentsToVerblunsky,
    VerblunskyToMoments,
    Orthopolys,
    Zeros,
    CD,
    SV,
    Baxter,
    GenRandomGamma,
    GenSmoothDensity,
};
const char* command_name(Command c) noexcept;

enum class Format { Json, Csv };

struct Tolerances {
    double route = kRouteTolerance;
};

struct RunConfig {
    Command command = Command::MomentsToVerblunsky;
    std::string input;                 // fixture path; unused by generators
    std::optional<SliceFrame> frame;   // overrides the fixture frame for computations
    int n = 10;
    std::uint64_t seed = 1;
    int samples = 100;                 // cd
    double max_modulus = 0.7;          // gen random-gamma
    bool random_frame = false;         // gen random-gamma
    Tolerances tol;
    Format format = Format::Json;
};

// Exit codes: 0 ok, 1 usage or IO, 2 invalid input, 3 internal cross-check
// mismatch, 4 no convergence.
int exit_code_for(Errc e) noexcept;

struct CommandOutput {
    int exit_code = 0;
    std::string text; // complete output document
};

// Never throws for library or IO failures; those become error reports.
CommandOutput run_command(const RunConfig& cfg);

} // namespace quatopuc::cli
