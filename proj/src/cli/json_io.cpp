#include "quatopuc/cli/json_io.hpp"

#include "quatopuc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace quatopuc::cli {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    // Keep floats recognizable as floats after a round trip.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

namespace {

void write(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) { out += "{}"; return; }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) { // std::map storage iterates in key order
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            write(it.value(), out, depth + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) { out += "[]"; return; }
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        if (flat) {
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ", ";
                write(j[k], out, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) out += ",\n";
            out += pad;
            write(j[k], out, depth + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case Json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace

std::string to_text(const Json& j) {
    std::string out;
    write(j, out, 0);
    out += "\n";
    return out;
}

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }
Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const SliceFrame& fr) {
    auto imag3 = [](const Quaternion& q) { return Json::array({q.x, q.y, q.z}); };
    return Json{{"i", imag3(fr.i())}, {"j", imag3(fr.j())}};
}

Json to_json(const std::vector<Quaternion>& qs) {
    Json a = Json::array();
    for (const Quaternion& q : qs) a.push_back(to_json(q));
    return a;
}

Json to_json(const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(finite_or_null(x));
    return a;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(Errc::InvalidInput, "a quaternion is an array [w, x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

SliceFrame frame_from_json(const Json& j) {
    if (j.is_null()) return {};
    auto imag3 = [](const Json& a) {
        if (!a.is_array() || a.size() != 3) throw Error(Errc::InvalidInput, "a frame unit is an array [x, y, z]");
        return Quaternion(0.0, a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
    };
    return {imag3(j.at("i")), imag3(j.at("j"))};
}

std::vector<Quaternion> quaternions_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an array of quaternions");
    std::vector<Quaternion> out;
    for (const Json& e : j) out.push_back(quaternion_from_json(e));
    return out;
}

} // namespace quatopuc::cli
