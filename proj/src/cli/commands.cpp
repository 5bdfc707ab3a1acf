#include "quatopuc/cli/commands.hpp"

#include "quatopuc/analysis.hpp"
#include "quatopuc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace quatopuc::cli {

const char* command_name(Command c) noexcept {
    switch (c) {
    case Command::MomentsToVerblunsky: return "moments-to-verblunsky";
    case Command::VerblunskyToMoments: return "verblunsky-to-moments";
    case Command::Orthopolys: return "orthopolys";
    case Command::Zeros: return "zeros";
    case Command::CD: return "cd";
    case Command::SV: return "sv";
    case Command::Baxter: return "baxter";
    case Command::GenRandomGamma: return "gen-fixture random-gamma";
    case Command::GenSmoothDensity: return "gen-fixture smooth-density";
    }
    return "unknown";
}

int exit_code_for(Errc e) noexcept {
    switch (e) {
    case Errc::RouteMismatch:
    case Errc::NotInImage:
    case Errc::NotChiImage:
    case Errc::ShiftResidual:
    case Errc::ConstantMismatch:
        return 3;
    case Errc::NoConvergence:
        return 4;
    default:
        return 2;
    }
}

namespace {

// A tabular result: header plus rows of already formatted cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string text() const {
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + cells[k];
            out += "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out;
    }
};

std::string cell(double x) { return format_double(x); }
std::string cell(int x) { return std::to_string(x); }
std::string cell(std::size_t x) { return std::to_string(x); }

struct Result {
    Json json;
    Table table;
};

Json config_json(const RunConfig& cfg) {
    Json j{{"command", command_name(cfg.command)},
           {"n", cfg.n},
           {"seed", cfg.seed},
           {"format", cfg.format == Format::Json ? "json" : "csv"},
           {"tolerances", Json{{"route", cfg.tol.route}}}};
    j["input"] = cfg.input.empty() ? Json(nullptr) : Json(cfg.input);
    j["frame"] = cfg.frame ? to_json(*cfg.frame) : Json(nullptr);
    if (cfg.command == Command::CD) j["samples"] = cfg.samples;
    if (cfg.command == Command::GenRandomGamma) {
        j["max_modulus"] = cfg.max_modulus;
        j["random_frame"] = cfg.random_frame;
    }
    return j;
}

Json report(const RunConfig& cfg) {
    return Json{{"command", command_name(cfg.command)},
                {"config", config_json(cfg)},
                {"seed", cfg.seed},
                {"library_version", QUATOPUC_VERSION}};
}

void quaternion_rows(Table& t, const std::vector<Quaternion>& qs, int first_index) {
    t.header = {"index", "w", "x", "y", "z"};
    for (std::size_t k = 0; k < qs.size(); ++k)
        t.rows.push_back({cell(static_cast<int>(k) + first_index), cell(qs[k].w), cell(qs[k].x), cell(qs[k].y), cell(qs[k].z)});
}

const QPositiveDensity& require_density(const Fixture& f, const SliceFrame& fr, std::optional<QPositiveDensity>& storage) {
    if (f.kind != FixtureKind::Density)
        throw Error(Errc::InvalidInput, std::string("this command needs a density fixture, got ") + kind_name(f.kind));
    if (fr == f.frame) return *f.density;
    storage = density_in_frame(*f.density, fr);
    return *storage;
}

Result moments_to_verblunsky(const Fixture& f, const RunConfig& cfg, const SliceFrame& fr) {
    const MomentSequence c = fixture_moments(f, cfg.n);
    const VerblunskyRoutes routes = verblunsky_routes(c, cfg.n, fr);
    if (!(routes.residual <= cfg.tol.route))
        throw Error(Errc::RouteMismatch, "Verblunsky routes disagree by " + std::to_string(routes.residual));
    Result r;
    r.json = Json{{"kind", "verblunsky"}, {"frame", to_json(fr)}, {"gammas", to_json(routes.series_route)},
                  {"route_residual", routes.residual}};
    quaternion_rows(r.table, routes.series_route, 0);
    return r;
}

Result verblunsky_to_moments(const Fixture& f, const RunConfig& cfg, const SliceFrame& fr) {
    if (f.kind != FixtureKind::Verblunsky)
        throw Error(Errc::InvalidInput, std::string("this command needs a Verblunsky fixture, got ") + kind_name(f.kind));
    for (std::size_t k = 0; k < f.gammas.size(); ++k)
        if (!(abs(f.gammas[k]) < 1.0)) throw Error(Errc::NotContraction, "gamma_" + std::to_string(k) + " is not a strict contraction", static_cast<int>(k));
    VerblunskySeq g = f.gammas;
    g.resize(std::max(g.size(), static_cast<std::size_t>(cfg.n)));
    const MomentSequence c = moments_from_verblunsky(g, cfg.n, fr);
    Result r;
    r.json = Json{{"kind", "moments"}, {"frame", to_json(fr)}, {"moments", moments_to_json(c.nonnegative())}};
    quaternion_rows(r.table, c.nonnegative(), 0);
    return r;
}

template <class Poly, class Inner>
double gram_residual(const std::vector<Poly>& fam, const MomentSequence& c, Inner inner) {
    double worst = 0.0;
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = 0; b < fam.size(); ++b)
            worst = std::max(worst, abs(inner(fam[a], fam[b], c) - Quaternion(a == b ? 1.0 : 0.0)));
    return worst;
}

template <class Poly>
Json poly_list_json(const std::vector<Poly>& fam) {
    const char* space = Poly::side == CoeffSide::Right ? "L" : "R";
    Json a = Json::array();
    for (std::size_t n = 0; n < fam.size(); ++n)
        a.push_back(Json{{"degree", n}, {"space", space}, {"coeffs", to_json(fam[n].coeffs)}});
    return a;
}

Result orthopolys(const Fixture& f, const RunConfig& cfg) {
    const MomentSequence c = fixture_moments(f, cfg.n);
    const OrthonormalFamilies fam = orthonormal_polys(c, cfg.n);
    Result r;
    r.json = Json{{"right", poly_list_json(fam.right)},
                  {"left", poly_list_json(fam.left)},
                  {"gram_residual_right", gram_residual(fam.right, c, [](auto& a, auto& b, auto& m) { return inner_R(a, b, m); })},
                  {"gram_residual_left", gram_residual(fam.left, c, [](auto& a, auto& b, auto& m) { return inner_L(a, b, m); })}};
    r.table.header = {"family", "degree", "k", "w", "x", "y", "z"};
    auto rows = [&](const char* name, const auto& list) {
        for (std::size_t n = 0; n < list.size(); ++n)
            for (std::size_t k = 0; k < list[n].coeffs.size(); ++k) {
                const Quaternion& q = list[n].coeffs[k];
                r.table.rows.push_back({name, cell(n), cell(k), cell(q.w), cell(q.x), cell(q.y), cell(q.z)});
            }
    };
    rows("right", fam.right);
    rows("left", fam.left);
    return r;
}

Json zero_report_json(const ZeroReport& z) {
    Json roots = Json::array();
    for (Complex s : z.slice_roots) roots.push_back(to_json(s));
    return Json{{"slice_roots", roots},
                {"moduli", to_json(z.moduli)},
                {"all_inside_ball", z.all_inside_ball},
                {"all_outside_closed_ball", z.all_outside_closed_ball},
                {"route_distance", z.route_distance}};
}

Result zeros(const Fixture& f, const RunConfig& cfg, const SliceFrame& fr) {
    const MomentSequence c = fixture_moments(f, cfg.n);
    const std::vector<DegreeZeroCheck> checks = zeros_theorem_check(c, cfg.n, fr, cfg.tol.route);
    Result r;
    Json degrees = Json::array();
    double max_in = 0.0, min_out = std::numeric_limits<double>::infinity(), worst_route = 0.0, worst_lr = 0.0;
    bool inside = true, outside = true, equal = true;
    r.table.header = {"degree", "family", "re", "im", "modulus"};
    for (const DegreeZeroCheck& d : checks) {
        degrees.push_back(Json{{"degree", d.degree},
                               {"left", zero_report_json(d.left)},
                               {"right", zero_report_json(d.right)},
                               {"left_rev", zero_report_json(d.left_rev)},
                               {"right_rev", zero_report_json(d.right_rev)},
                               {"left_right_distance", d.left_right_distance},
                               {"inside", d.inside},
                               {"outside", d.outside},
                               {"sets_equal", d.sets_equal}});
        for (const auto* z : {&d.left, &d.right}) for (double m : z->moduli) max_in = std::max(max_in, m);
        for (const auto* z : {&d.left_rev, &d.right_rev}) for (double m : z->moduli) min_out = std::min(min_out, m);
        for (const auto* z : {&d.left, &d.right, &d.left_rev, &d.right_rev}) worst_route = std::max(worst_route, z->route_distance);
        worst_lr = std::max(worst_lr, d.left_right_distance);
        inside = inside && d.inside;
        outside = outside && d.outside;
        equal = equal && d.sets_equal;
        const std::pair<const char*, const ZeroReport*> fams[] = {
            {"left", &d.left}, {"right", &d.right}, {"left_rev", &d.left_rev}, {"right_rev", &d.right_rev}};
        for (const auto& [name, z] : fams)
            for (std::size_t k = 0; k < z->slice_roots.size(); ++k)
                r.table.rows.push_back({cell(d.degree), name, cell(z->slice_roots[k].real()), cell(z->slice_roots[k].imag()), cell(z->moduli[k])});
    }
    r.json = Json{{"degrees", degrees},
                  {"max_modulus", max_in},
                  {"min_reverse_modulus", finite_or_null(min_out)},
                  {"all_inside_ball", inside},
                  {"all_reverse_outside_closed_ball", outside},
                  {"left_right_equal", equal},
                  {"max_route_distance", worst_route},
                  {"max_left_right_distance", worst_lr}};
    return r;
}

Result cd(const Fixture& f, const RunConfig& cfg) {
    const MomentSequence c = fixture_moments(f, cfg.n + 1);
    const double residual = cd_identity_check(c, cfg.n, cfg.samples, cfg.seed);
    const double base = cd_kernel_diag(c, 0, Quaternion(0.3, 0.1, -0.2, 0.4));
    Result r;
    r.json = Json{{"residual", residual}, {"samples", cfg.samples}, {"base_case_kernel", base}};
    r.table.header = {"n", "samples", "residual", "base_case_kernel"};
    r.table.rows.push_back({cell(cfg.n), cell(cfg.samples), cell(residual), cell(base)});
    return r;
}

Result sv(const Fixture& f, const RunConfig& cfg, const SliceFrame& fr) {
    std::optional<QPositiveDensity> storage;
    const QPositiveDensity& d = require_density(f, fr, storage);
    const SVReport rep = sv_check(d, cfg.n, true);
    Result r;
    r.json = Json{{"gammas", to_json(rep.gammas)},
                  {"route_residual", rep.route_residual},
                  {"partial_products", to_json(rep.partial_products)},
                  {"entropy", finite_or_null(rep.entropy.value)},
                  {"entropy_diverging", rep.entropy.diverging},
                  {"entropy_error_estimate", finite_or_null(rep.entropy.error_estimate)},
                  {"exp_entropy", rep.exp_entropy},
                  {"gap_history", to_json(rep.gap_history)},
                  {"final_gap", rep.gap_history.empty() ? Json(std::abs(1.0 - rep.exp_entropy)) : Json(rep.gap_history.back())}};
    r.table.header = {"m", "partial_product", "gap"};
    for (std::size_t m = 0; m < rep.partial_products.size(); ++m)
        r.table.rows.push_back({cell(m), cell(rep.partial_products[m]), cell(rep.gap_history[m])});
    return r;
}

Result baxter(const Fixture& f, const RunConfig& cfg, const SliceFrame& fr) {
    std::optional<QPositiveDensity> storage;
    const QPositiveDensity& d = require_density(f, fr, storage);
    const BaxterReport rep = baxter_check(d, cfg.n);
    Result r;
    r.json = Json{{"gamma_l1", rep.gamma_l1.value},
                  {"gamma_l1_diverging", rep.gamma_l1.diverging},
                  {"gamma_l1_partial_sums", to_json(rep.gamma_l1.partial_sums)},
                  {"wiener_norm", finite_or_null(rep.wiener_norm)},
                  {"wiener_finite", rep.wiener_finite},
                  {"density_min", rep.density_min},
                  {"verdict", verdict_name(rep.verdict)}};
    r.table.header = {"n", "gamma_modulus", "l1_partial_sum"};
    for (std::size_t n = 0; n < rep.gammas.size(); ++n)
        r.table.rows.push_back({cell(n), cell(abs(rep.gammas[n])), cell(rep.gamma_l1.partial_sums[n])});
    return r;
}

Result generated(const Fixture& f) {
    Result r;
    r.json = to_json(f);
    r.json["provenance"]["library_version"] = QUATOPUC_VERSION;
    if (f.kind == FixtureKind::Verblunsky) {
        quaternion_rows(r.table, f.gammas, 0);
    } else {
        r.table.header = {"part", "n", "re", "im"};
        for (const auto& [n, v] : f.density->w1()) r.table.rows.push_back({"w1", cell(n), cell(v.real()), cell(v.imag())});
        for (const auto& [n, v] : f.density->w2()) r.table.rows.push_back({"w2", cell(n), cell(v.real()), cell(v.imag())});
    }
    return r;
}

Result dispatch(const RunConfig& cfg) {
    if (cfg.n < 0) throw Error(Errc::InvalidInput, "--n must be nonnegative");
    switch (cfg.command) {
    case Command::GenRandomGamma: return generated(random_gamma_fixture(cfg.seed, cfg.n, cfg.max_modulus, cfg.random_frame));
    case Command::GenSmoothDensity: return generated(smooth_density_fixture(cfg.seed, cfg.n));
    default: break;
    }
    const Fixture f = load_fixture(cfg.input);
    const SliceFrame fr = cfg.frame.value_or(f.frame);
    switch (cfg.command) {
    case Command::MomentsToVerblunsky: return moments_to_verblunsky(f, cfg, fr);
    case Command::VerblunskyToMoments: return verblunsky_to_moments(f, cfg, fr);
    case Command::Orthopolys: return orthopolys(f, cfg);
    case Command::Zeros: return zeros(f, cfg, fr);
    case Command::CD: return cd(f, cfg);
    case Command::SV: return sv(f, cfg, fr);
    case Command::Baxter: return baxter(f, cfg, fr);
    default: break;
    }
    throw Error(Errc::InvalidInput, "unhandled command");
}

CommandOutput error_output(const RunConfig& cfg, int code, const std::string& name, const std::string& message,
                           std::optional<int> index) {
    Json j = report(cfg);
    j["error"] = Json{{"code", name}, {"exit_code", code}, {"message", message},
                      {"order", index ? Json(*index) : Json(nullptr)}};
    return {code, to_text(j)};
}

} // namespace

CommandOutput run_command(const RunConfig& cfg) {
    try {
        Result r = dispatch(cfg);
        if (cfg.format == Format::Csv) return {0, r.table.text()};
        if (cfg.command == Command::GenRandomGamma || cfg.command == Command::GenSmoothDensity) return {0, to_text(r.json)};
        Json j = report(cfg);
        j["result"] = std::move(r.json);
        return {0, to_text(j)};
    } catch (const Error& e) {
        return error_output(cfg, exit_code_for(e.code()), std::string(errc_name(e.code())), e.what(), e.index());
    } catch (const std::runtime_error& e) {
        return error_output(cfg, 1, "IOError", e.what(), std::nullopt);
    }
}

} // namespace quatopuc::cli
