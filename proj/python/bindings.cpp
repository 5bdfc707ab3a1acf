#include "quatopuc/analysis.hpp"
#include "quatopuc/errors.hpp"
#include "quatopuc/zeros.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

namespace py = pybind11;
using namespace quatopuc;

namespace {

QPositiveDensity make_density(const std::map<int, Complex>& w1, const std::map<int, Complex>& w2, const SliceFrame& fr) {
    return {fr, QPositiveDensity::Coeffs(w1.begin(), w1.end()), QPositiveDensity::Coeffs(w2.begin(), w2.end())};
}

py::dict zero_dict(const ZeroReport& z) {
    py::dict d;
    d["slice_roots"] = z.slice_roots;
    d["moduli"] = z.moduli;
    d["all_inside_ball"] = z.all_inside_ball;
    d["all_outside_closed_ball"] = z.all_outside_closed_ball;
    d["route_distance"] = z.route_distance;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternionic orthogonal polynomials on the unit sphere";
    static py::exception<Error> error(m, "QuatopucError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("code") = std::string(errc_name(e.code()));
            exc.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("w") = 0.0, py::arg("x") = 0.0, py::arg("y") = 0.0,
             py::arg("z") = 0.0)
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("conj", [](const Quaternion& q) { return conj(q); })
        .def("inverse", [](const Quaternion& q) { return inverse(q); })
        .def("__abs__", [](const Quaternion& q) { return abs(q); })
        .def("as_tuple", [](const Quaternion& q) { return py::make_tuple(q.w, q.x, q.y, q.z); })
        .def("__repr__", [](const Quaternion& q) {
            std::ostringstream s;
            s.precision(17);
            s << "Quaternion(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
            return s.str();
        });

    py::class_<SliceFrame>(m, "SliceFrame")
        .def(py::init<>())
        .def(py::init<const Quaternion&, const Quaternion&>(), py::arg("i"), py::arg("j"))
        .def_property_readonly("i", &SliceFrame::i)
        .def_property_readonly("j", &SliceFrame::j)
        .def_property_readonly("k", &SliceFrame::k);

    m.def("chi", &chi, py::arg("p"), py::arg("frame") = SliceFrame{});
    m.def("chi_inv", &chi_inv, py::arg("m"), py::arg("frame") = SliceFrame{}, py::arg("tol") = kImageTolerance);

    m.def(
        "moments_from_verblunsky",
        [](VerblunskySeq g, int n, const SliceFrame& fr) {
            g.resize(std::max(g.size(), static_cast<std::size_t>(std::max(n, 0))));
            return moments_from_verblunsky(g, n, fr).nonnegative();
        },
        py::arg("gammas"), py::arg("n"), py::arg("frame") = SliceFrame{}, "c_0..c_n; missing coefficients are taken as zero");
    m.def(
        "verblunsky_from_moments",
        [](const std::vector<Quaternion>& c, int n, const SliceFrame& fr, double tol) {
            return verblunsky_from_moments_q(MomentSequence(c), n, fr, tol);
        },
        py::arg("moments"), py::arg("n"), py::arg("frame") = SliceFrame{}, py::arg("tol") = kRouteTolerance);
    m.def(
        "orthonormal_polys",
        [](const std::vector<Quaternion>& c, int n) {
            const OrthonormalFamilies fam = orthonormal_polys(MomentSequence(c), n);
            std::vector<std::vector<Quaternion>> right, left;
            for (const auto& p : fam.right) right.push_back(p.coeffs);
            for (const auto& p : fam.left) left.push_back(p.coeffs);
            return py::make_tuple(right, left);
        },
        py::arg("moments"), py::arg("n"), "(right family in H[p]^L, left family in H[p]^R), coefficient lists");
    m.def(
        "zeros_theorem_check",
        [](const std::vector<Quaternion>& c, int n, const SliceFrame& fr) {
            py::list out;
            for (const DegreeZeroCheck& d : zeros_theorem_check(MomentSequence(c), n, fr)) {
                py::dict e;
                e["degree"] = d.degree;
                e["left"] = zero_dict(d.left);
                e["right"] = zero_dict(d.right);
                e["left_rev"] = zero_dict(d.left_rev);
                e["right_rev"] = zero_dict(d.right_rev);
                e["left_right_distance"] = d.left_right_distance;
                e["inside"] = d.inside;
                e["outside"] = d.outside;
                e["sets_equal"] = d.sets_equal;
                out.append(e);
            }
            return out;
        },
        py::arg("moments"), py::arg("n"), py::arg("frame") = SliceFrame{});
    m.def(
        "cd_identity_check",
        [](const std::vector<Quaternion>& c, int n, int samples, std::uint64_t seed) {
            return cd_identity_check(MomentSequence(c), n, samples, seed);
        },
        py::arg("moments"), py::arg("n"), py::arg("samples") = 100, py::arg("seed") = 1);
    m.def(
        "sv_check",
        [](const std::map<int, Complex>& w1, const std::map<int, Complex>& w2, int n, const SliceFrame& fr) {
            const SVReport r = sv_check(make_density(w1, w2, fr), n, true);
            py::dict d;
            d["gammas"] = r.gammas;
            d["partial_products"] = r.partial_products;
            d["entropy"] = r.entropy.value;
            d["entropy_diverging"] = r.entropy.diverging;
            d["exp_entropy"] = r.exp_entropy;
            d["gap_history"] = r.gap_history;
            return d;
        },
        py::arg("w1"), py::arg("w2") = std::map<int, Complex>{}, py::arg("n") = 10, py::arg("frame") = SliceFrame{});
    m.def(
        "baxter_check",
        [](const std::map<int, Complex>& w1, const std::map<int, Complex>& w2, int n, const SliceFrame& fr) {
            const BaxterReport r = baxter_check(make_density(w1, w2, fr), n);
            py::dict d;
            d["gamma_l1"] = r.gamma_l1.value;
            d["gamma_l1_diverging"] = r.gamma_l1.diverging;
            d["wiener_norm"] = r.wiener_norm;
            d["density_min"] = r.density_min;
            d["verdict"] = std::string(verdict_name(r.verdict));
            return d;
        },
        py::arg("w1"), py::arg("w2") = std::map<int, Complex>{}, py::arg("n") = 10, py::arg("frame") = SliceFrame{});
}
