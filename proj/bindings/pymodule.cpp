// Python bindings: a thin functional layer over the core operations.
// Categories are opaque handles; everything else crosses the boundary as
// strings (canonical scalar spellings), ints, lists, and dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "mcdg/catfile.hpp"
#include "mcdg/complexes.hpp"
#include "mcdg/lifting.hpp"
#include "mcdg/nerve.hpp"
#include "mcdg/sampling.hpp"

namespace py = pybind11;
using namespace mcdg;

namespace {

struct Category {
    std::shared_ptr<DGCategory> P;
    const DGCategory& ref() const { return *P; }
};

Category wrap(DGCategory P) { return Category{std::make_shared<DGCategory>(std::move(P))}; }

Element degree1_element(const DGCategory& P, int obj, const std::vector<std::string>& coeffs) {
    const Field& k = P.ring.base();
    Element eta = zero_element(P, obj, obj, 1);
    require(coeffs.size() == eta.coeffs.size(),
            "expected " + std::to_string(eta.coeffs.size()) + " coefficients, got " +
                std::to_string(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) eta.coeffs[i] = k.parse(coeffs[i]);
    return eta;
}

std::vector<std::string> scalar_strings(const Field& k, const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Scalar& c : v) out.push_back(k.to_string(c));
    return out;
}

Ring named_ring(const Field& k, const std::string& name) {
    if (name == "dual") return Ring::dual_numbers(k);
    if (name == "poly3") return Ring::truncated_poly3(k);
    fail("unknown coefficient ring '" + name + "' (expected dual or poly3)");
}

} // namespace

PYBIND11_MODULE(_mcdg, m) {
    m.doc() = "exact toolkit for dg-categories, Maurer-Cartan loci, and their nerves";

    py::register_exception<error>(m, "Error", PyExc_ValueError);

    py::class_<Category>(m, "Category",
                         "dg-category presented by structure constants, over Q or a prime field")
        .def_property_readonly(
            "objects",
            [](const Category& c) { return c.ref().objects; },
            "object labels in file order")
        .def_property_readonly(
            "field", [](const Category& c) { return c.ref().ring.base().name(); },
            "base field name (Q or Fp)")
        .def(
            "emit", [](const Category& c) { return emit_category(c.ref()); },
            "canonical text form; a fixed point of parse followed by emit")
        .def(
            "validate", [](const Category& c) { validate_category(c.ref()); },
            "exhaustive axiom check; raises Error naming the first violation")
        .def(
            "over",
            [](const Category& c, const std::string& field) {
                return wrap(reduce_category(c.ref(), parse_field_name(field)));
            },
            py::arg("field"), "the same structure constants reduced to another coefficient field")
        .def(
            "hom_dims",
            [](const Category& c, const std::string& src, const std::string& dst) {
                const DGCategory& P = c.ref();
                int a = P.index_of(src), b = P.index_of(dst);
                py::dict out;
                for (int i = P.min_degree(a, b); i <= P.max_degree(a, b); ++i)
                    if (P.dim(a, b, i) > 0) out[py::int_(i)] = P.dim(a, b, i);
                return out;
            },
            py::arg("src"), py::arg("dst"), "nonzero hom dimensions by degree")
        .def(
            "ideal",
            [](const Category& c, const std::string& object) {
                return emit_ideal(curvature_ideal(c.ref(), c.ref().index_of(object)));
            },
            py::arg("object"),
            "generators of the ideal cutting out the Maurer-Cartan locus, as text")
        .def(
            "count_points",
            [](const Category& c, const std::string& object, bool dual, std::size_t guard) {
                CurvatureIdeal I = curvature_ideal(c.ref(), c.ref().index_of(object));
                const Field& k = c.ref().ring.base();
                Ring B = dual ? Ring::dual_numbers(k) : Ring::field(k);
                return enumerate_points(I, B, guard).size();
            },
            py::arg("object"), py::arg("dual") = false, py::arg("guard") = 2'000'000,
            "number of Maurer-Cartan points over the base field (or its dual numbers)")
        .def(
            "is_mc",
            [](const Category& c, const std::string& object,
               const std::vector<std::string>& coeffs) {
                const DGCategory& P = c.ref();
                return is_mc(P, degree1_element(P, P.index_of(object), coeffs));
            },
            py::arg("object"), py::arg("coeffs"),
            "whether the degree-1 coefficient vector satisfies the Maurer-Cartan equation")
        .def(
            "curvature",
            [](const Category& c, const std::string& object,
               const std::vector<std::string>& coeffs) {
                const DGCategory& P = c.ref();
                Element eta = degree1_element(P, P.index_of(object), coeffs);
                return scalar_strings(P.ring.base(), curvature(P, eta).coeffs);
            },
            py::arg("object"), py::arg("coeffs"),
            "coefficients of d(eta) + eta.eta in the degree-2 hom basis")
        .def(
            "lift_certificate",
            [](const Category& c, const std::string& object, const std::string& ring,
               std::uint64_t seed) {
                const DGCategory& P = c.ref();
                Ring B = named_ring(P.ring.base(), ring);
                Rng rng(seed);
                GeneratedLift gen = random_lift_problem(rng, P, B, P.index_of(object));
                return lift(gen.prob).certificate;
            },
            py::arg("object"), py::arg("ring") = "dual", py::arg("seed") = 0,
            "solve a seeded random square-zero lifting problem and return the certificate")
        .def(
            "dp_ranks",
            [](const Category& c, const std::string& src, const std::string& dst, int level) {
                const DGCategory& P = c.ref();
                Element ea = zero_element(P, P.index_of(src), P.index_of(src), 1);
                Element eb = zero_element(P, P.index_of(dst), P.index_of(dst), 1);
                return dold_puppe(truncate_hom(P, ea, eb), level).ranks;
            },
            py::arg("src"), py::arg("dst"), py::arg("level"),
            "levelwise ranks of the realized truncated hom complex")
        .def(
            "segal_ok",
            [](const Category& c, int n, int m, int cap, std::uint64_t guard) {
                const DGCategory& P = c.ref();
                DPHoms H = dp_homs(P, cap);
                return segal_check(P.ring.base(), nerve_slice(H), n, m, guard);
            },
            py::arg("n"), py::arg("m"), py::arg("cap"), py::arg("guard") = 1'000'000,
            "whether the Segal comparison at nerve level (n, m) is a bijection")
        .def(
            "prestack",
            [](const Category& c, int level, bool dual, std::size_t guard) {
                const DGCategory& P = c.ref();
                const Field& k = P.ring.base();
                Ring R = dual ? Ring::dual_numbers(k) : Ring::field(k);
                PrestackValue V = mc_prestack_value(P, R, level, nullptr, guard);
                py::list points;
                for (const MCObject& pt : V.points) {
                    py::dict d;
                    d["object"] = P.objects[static_cast<std::size_t>(pt.object)];
                    d["eta"] = scalar_strings(k, pt.eta.coeffs);
                    points.append(d);
                }
                py::list interior;
                for (const InteriorLevel& L : V.interior) {
                    py::dict d;
                    d["level"] = L.n;
                    d["tuples"] = L.tuples.size();
                    d["total"] = L.total.str();
                    interior.append(d);
                }
                py::dict out;
                out["ring"] = R.name();
                out["cap"] = level;
                out["points"] = points;
                out["counted"] = V.counted;
                out["interior"] = interior;
                return out;
            },
            py::arg("level"), py::arg("dual") = false, py::arg("guard") = 2'000'000,
            "Maurer-Cartan points and invertible-interior counts of the deformation prestack")
        .def("__repr__", [](const Category& c) {
            std::string s = "Category(field=" + c.ref().ring.base().name() + ", objects=[";
            for (std::size_t i = 0; i < c.ref().objects.size(); ++i)
                s += (i ? ", " : "") + c.ref().objects[i];
            return s + "])";
        });

    m.def(
        "parse", [](const std::string& text) { return wrap(parse_category(text)); },
        py::arg("text"), "parse a category description from its canonical text form");
    m.def(
        "load", [](const std::string& path) { return wrap(parse_category(read_file(path))); },
        py::arg("path"), "parse a category description from a .cat file");
    m.def(
        "direct_ideal",
        [](const std::vector<int>& dims, const std::string& field) {
            return emit_ideal(buchsbaum_eisenbud_ideal(dims, parse_field_name(field)));
        },
        py::arg("dims"), py::arg("field"),
        "the classical ideal of the variety of complexes for a dimension vector, as text");
}
