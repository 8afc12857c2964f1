#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lowdeg/cohomology.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/formulas.hpp"
#include "lowdeg/pointconfig.hpp"
#include "lowdeg/secants.hpp"

namespace py = pybind11;
using namespace lowdeg;

namespace {

Field field_of(std::optional<std::uint64_t> p) { return p ? Field::prime(*p) : Field::rationals(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quadrics through low-degree varieties: exact formulas, constructions and deficiency checks";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<FieldMismatch>(m, "FieldMismatch", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
    py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
    py::register_exception<FieldTooSmall>(m, "FieldTooSmall", base.ptr());
    py::register_exception<ComplexityRefusal>(m, "ComplexityRefusal", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());

    m.attr("DEFAULT_PRIME") = default_prime;
    m.attr("DEFAULT_SEED") = default_seed;

    // formulas
    m.def("binom", &binom);
    m.def("F", &F, py::arg("n"), py::arg("c"), py::arg("m"));
    m.def("G", &G, py::arg("t"), py::arg("n"), py::arg("c"), py::arg("m"));
    m.def("H", &H, py::arg("k"), py::arg("n"), py::arg("c"), py::arg("m"));
    m.def("u", &u, py::arg("c"), py::arg("g"), py::arg("d"), py::arg("m"));

    py::class_<DeltaAnswer>(m, "DeltaAnswer")
        .def_readonly("value", &DeltaAnswer::value)
        .def_property_readonly("witness", [](const DeltaAnswer& a) { return to_string(a.witness); })
        .def_readonly("depth", &DeltaAnswer::depth)
        .def_readonly("g", &DeltaAnswer::g)
        .def_readonly("d", &DeltaAnswer::d);
    m.def("delta_small", &delta_small, py::arg("n"), py::arg("c"), py::arg("m"), py::arg("k"));
    m.def("delta_curve", &delta_curve, py::arg("c"), py::arg("m"), py::arg("k"));

    py::class_<IdentityResult>(m, "IdentityResult")
        .def_readonly("name", &IdentityResult::name)
        .def_readonly("passed", &IdentityResult::pass)
        .def_readonly("checked", &IdentityResult::checked)
        .def_readonly("counterexample", &IdentityResult::counterexample);
    m.def("identity_suite", &identity_suite, py::arg("n_max"), py::arg("c_max"), py::arg("m_max"));
    m.def("specialization_suite", &specialization_suite, py::arg("n_max"), py::arg("c_max"), py::arg("cm_max"));

    // varieties; p=None means the rationals
    py::class_<ParamVariety>(m, "Variety")
        .def_readonly("n", &ParamVariety::n)
        .def_readonly("ambient", &ParamVariety::amb)
        .def_readonly("degree", &ParamVariety::d)
        .def_readonly("genus", &ParamVariety::g)
        .def_readonly("label", &ParamVariety::label)
        .def_property_readonly("c", &ParamVariety::c)
        .def_property_readonly("field", [](const ParamVariety& v) { return v.field.to_string(); })
        .def("descriptor", [](const ParamVariety& v) { return descriptor_json(v); })
        .def("__repr__", [](const ParamVariety& v) { return "<Variety " + v.label + " in P^" + std::to_string(v.amb) + ">"; });
    m.def("from_descriptor", &from_descriptor);

    m.def("rational_normal_curve", [](std::size_t r, std::optional<std::uint64_t> p) {
        return rational_normal_curve(r, field_of(p));
    }, py::arg("r"), py::arg("p") = default_prime);
    m.def("scroll_surface", [](std::size_t a, std::size_t b, std::optional<std::uint64_t> p) {
        return scroll_surface(a, b, field_of(p));
    }, py::arg("a"), py::arg("b"), py::arg("p") = default_prime);
    m.def("veronese_surface", [](std::optional<std::uint64_t> p) { return veronese_surface(field_of(p)); },
          py::arg("p") = default_prime);
    m.def("scroll_section_curve", [](std::size_t a, std::size_t b, std::size_t k, std::optional<std::uint64_t> p,
                                     std::uint64_t seed) { return scroll_section_curve(a, b, k, field_of(p), seed); },
          py::arg("a"), py::arg("b"), py::arg("k"), py::arg("p") = default_prime, py::arg("seed") = default_seed);
    m.def("elliptic_normal_curve", [](std::size_t c, std::uint64_t p) { return elliptic_normal_curve(c, Field::prime(p)); },
          py::arg("c"), py::arg("p") = default_prime);
    m.def("hyperelliptic_g2_curve", [](std::size_t c, std::uint64_t p) { return hyperelliptic_g2_curve(c, Field::prime(p)); },
          py::arg("c"), py::arg("p") = default_prime);
    m.def("projected_rnc", [](std::size_t r, std::optional<std::uint64_t> p, std::uint64_t seed) {
        return projected_rnc(r, field_of(p), seed);
    }, py::arg("r"), py::arg("p") = default_prime, py::arg("seed") = default_seed);
    m.def("multisecant_projection", [](std::size_t c, std::size_t k, std::size_t g, std::optional<std::uint64_t> p,
                                       std::uint64_t seed) { return multisecant_projection(c, k, g, field_of(p), seed); },
          py::arg("c"), py::arg("k"), py::arg("g"), py::arg("p") = default_prime, py::arg("seed") = default_seed);
    m.def("genus_zero_scroll_curve", [](std::size_t c, std::size_t k, std::size_t d, std::optional<std::uint64_t> p,
                                        std::uint64_t seed) { return genus_zero_scroll_curve(c, k, d, field_of(p), seed); },
          py::arg("c"), py::arg("k"), py::arg("d"), py::arg("p") = default_prime, py::arg("seed") = default_seed);

    // cohomology
    m.def("a_m", &a_m, py::arg("variety"), py::arg("m"), py::arg("seed") = default_seed);
    m.def("h1_ideal", &h1_ideal, py::arg("curve"), py::arg("m"), py::arg("seed") = default_seed);

    py::class_<DeficiencyProfile>(m, "DeficiencyProfile")
        .def_readonly("c", &DeficiencyProfile::c)
        .def_readonly("d", &DeficiencyProfile::d)
        .def_readonly("g", &DeficiencyProfile::g)
        .def_readonly("a", &DeficiencyProfile::a)
        .def_readonly("u", &DeficiencyProfile::u)
        .def_readonly("h1", &DeficiencyProfile::h1)
        .def_readonly("reg", &DeficiencyProfile::reg)
        .def("linearly_normal", &DeficiencyProfile::linearly_normal)
        .def("nonzero", &DeficiencyProfile::nonzero_string)
        .def("csv", [](const DeficiencyProfile& p) { return profile_csv(p); });
    m.def("deficiency_profile", &deficiency_profile, py::arg("curve"), py::arg("seed") = default_seed);
    m.def("profile_from_h1", &profile_from_h1, py::arg("c"), py::arg("d"), py::arg("g"), py::arg("h1"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_property_readonly("status", [](const CheckResult& r) { return to_string(r.status); })
        .def_readonly("detail", &CheckResult::detail)
        .def_readonly("equality", &CheckResult::equality);
    m.def("verify_monotonic", &verify_monotonic);
    m.def("verify_reg_bound", &verify_reg_bound);

    py::class_<A2Classification>(m, "A2Classification")
        .def_readonly("a2", &A2Classification::a2)
        .def_readonly("k", &A2Classification::k)
        .def_readonly("h1_2", &A2Classification::h1_2)
        .def_readonly("predicted_h1_2", &A2Classification::predicted_h1_2)
        .def_readonly("identity_holds", &A2Classification::identity_holds)
        .def_readonly("case", &A2Classification::case_name);
    m.def("classify_a2_curve", &classify_a2_curve, py::arg("curve"), py::arg("seed") = default_seed);

    // point configurations
    py::class_<PointConfig>(m, "PointConfig")
        .def(py::init([](const std::vector<std::vector<long long>>& pts, std::optional<std::uint64_t> p) {
                 if (pts.empty()) throw DomainError("need at least one point");
                 return PointConfig::from_integers(field_of(p), pts[0].size() - 1, pts);
             }),
             py::arg("points"), py::arg("p") = default_prime)
        .def_property_readonly("c", &PointConfig::c)
        .def("__len__", &PointConfig::size)
        .def("span_dim", [](const PointConfig& g) { return span_dim(g); })
        .def("hilbert", [](const PointConfig& g, unsigned m) { return hilbert(g, m); })
        .def("regularity", [](const PointConfig& g) { return regularity(g); })
        .def("nu", [](const PointConfig& g) { return nu_vector(g).values; })
        .def("extract_three_regular", [](const PointConfig& g) { return extract_three_regular(g).indices; })
        .def("to_text", [](const PointConfig& g) {
            std::ostringstream o;
            write_points(o, g);
            return o.str();
        });
    m.def("sample_points", &sample_points, py::arg("variety"), py::arg("count"), py::arg("seed") = default_seed);
    m.def("read_points", [](const std::string& text) {
        std::istringstream in(text);
        return read_points(in);
    });

    // secants
    py::class_<ZakInvariants>(m, "ZakInvariants")
        .def_readonly("n", &ZakInvariants::n)
        .def_readonly("c", &ZakInvariants::c)
        .def_readonly("a2", &ZakInvariants::a2)
        .def_readonly("s", &ZakInvariants::s)
        .def_readonly("ell2", &ZakInvariants::ell2)
        .def_readonly("k2", &ZakInvariants::k2)
        .def_readonly("delta2", &ZakInvariants::delta2)
        .def_readonly("zak4_ok", &ZakInvariants::zak4_ok)
        .def_readonly("rational_confirmed", &ZakInvariants::rational_confirmed)
        .def("delta", &ZakInvariants::delta_at)
        .def("json", [](const ZakInvariants& z) { return invariant_json(z); });
    m.def("zak_invariants", &zak_invariants, py::arg("variety"), py::arg("trials") = 3, py::arg("seed") = default_seed,
          py::arg("confirm") = false);
}
