#include "quatopuc/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace quatopuc;
using namespace quatopuc::cli;

namespace {

// "ix,iy,iz,jx,jy,jz"
SliceFrame parse_frame(const std::string& spec) {
    std::vector<double> v;
    std::stringstream in(spec);
    for (std::string tok; std::getline(in, tok, ',');) v.push_back(std::stod(tok));
    if (v.size() != 6) throw CLI::ValidationError("--frame", "expects six comma-separated numbers ix,iy,iz,jx,jy,jz");
    return {Quaternion(0.0, v[0], v[1], v[2]), Quaternion(0.0, v[3], v[4], v[5])};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic orthogonal polynomials on the unit sphere"};
    app.set_version_flag("--version", std::string(QUATOPUC_VERSION));
    app.require_subcommand(1);

    RunConfig cfg;
    std::string frame_spec, out_path, format = "json";

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("input", cfg.input, "fixture JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--n", cfg.n, "horizon N")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized point sets")->capture_default_str();
        sub->add_option("--frame", frame_spec, "slice frame as ix,iy,iz,jx,jy,jz (default: fixture frame)");
        sub->add_option("--tol-route", cfg.tol.route, "two-route agreement tolerance")->capture_default_str();
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    };

    const std::map<std::string, std::pair<Command, std::string>> analyses = {
        {"moments-to-verblunsky", {Command::MomentsToVerblunsky, "Verblunsky coefficients by both routes"}},
        {"verblunsky-to-moments", {Command::VerblunskyToMoments, "moments from Verblunsky coefficients"}},
        {"orthopolys", {Command::Orthopolys, "left and right orthonormal polynomials"}},
        {"zeros", {Command::Zeros, "zero sets of orthonormal polynomials and their reverses"}},
        {"cd", {Command::CD, "diagonal Christoffel-Darboux identity residual"}},
        {"sv", {Command::SV, "Szego-Verblunsky products against the entropy"}},
        {"baxter", {Command::Baxter, "summability, Wiener norm and density positivity"}},
    };
    std::map<CLI::App*, Command> chosen;
    for (const auto& [name, entry] : analyses) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        common(sub, true);
        if (entry.first == Command::CD) sub->add_option("--samples", cfg.samples, "number of evaluation points")->capture_default_str();
        chosen[sub] = entry.first;
    }

    CLI::App* gen = app.add_subcommand("gen-fixture", "write a generated fixture");
    gen->require_subcommand(1);
    CLI::App* gen_gamma = gen->add_subcommand("random-gamma", "random Verblunsky coefficients in a ball; --n is the count");
    common(gen_gamma, false);
    gen_gamma->add_option("--max-modulus", cfg.max_modulus, "ball radius, below 1")->capture_default_str();
    gen_gamma->add_flag("--random-frame", cfg.random_frame, "draw the slice frame from the seed as well");
    chosen[gen_gamma] = Command::GenRandomGamma;
    CLI::App* gen_smooth = gen->add_subcommand("smooth-density", "positive trigonometric density; --n is the degree");
    common(gen_smooth, false);
    chosen[gen_smooth] = Command::GenSmoothDensity;

    try {
        app.parse(argc, argv);
        for (const auto& [sub, cmd] : chosen)
            if (sub->parsed()) cfg.command = cmd;
        if (!frame_spec.empty()) cfg.frame = parse_frame(frame_spec);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    }
    cfg.format = format == "csv" ? Format::Csv : Format::Json;

    const CommandOutput result = run_command(cfg);
    if (out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << result.text)) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
    }
    if (result.exit_code != 0) std::cerr << "quatopuc: failed with exit code " << result.exit_code << "\n";
    return result.exit_code;
}
