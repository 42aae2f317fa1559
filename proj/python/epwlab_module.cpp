// Python bindings: a thin JSON-string surface over the C++ library, so
// callers exchange the same documents the CLI reads and writes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "epwlab/epw.hpp"
#include "epwlab/errors.hpp"
#include "epwlab/exterior.hpp"
#include "epwlab/json_io.hpp"
#include "epwlab/lattice.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/sampler.hpp"
#include "epwlab/suites.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

using epwlab::exactalg::kFieldQ;
using epwlab::exactalg::Matrix;
using epwlab::exactalg::Scalar;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw epwlab::io_error(std::string("unreadable JSON: ") + e.what());
    }
}

epwlab::exterior::LagrangianSubspace lagrangian_of(const std::string& text) {
    return epwlab::io::lagrangian_from_json(parse(text));
}

std::string seeded_lagrangian(std::uint64_t seed, long field) {
    epwlab::exactalg::SeededSampler sampler(seed);
    Matrix s = epwlab::exactalg::random_symmetric_matrix(sampler, 10, field);
    return epwlab::io::lagrangian_to_json(epwlab::exterior::graph_lagrangian(s)).dump();
}

std::string sextic(const std::string& lagrangian_json, int chart) {
    auto a = lagrangian_of(lagrangian_json);
    epwlab::epw::SexticEquation s = epwlab::epw::sextic_equation(a, chart - 1);
    json j{{"kind", s.kind == epwlab::epw::SexticKind::Polynomial ? "polynomial"
                                                                  : "identically_zero"},
           {"chart", chart},
           {"sextic", epwlab::io::multipoly_to_json(s.poly)}};
    return j.dump();
}

std::string census(const std::string& lagrangian_json, long field) {
    auto a = lagrangian_of(lagrangian_json);
    if (a.field == kFieldQ) {
        if (field == 0) throw epwlab::precondition_error("rational input needs a reduction prime");
        a = epwlab::epw::reduce_mod_p(a, field);
    } else if (field != 0 && field != a.field) {
        throw epwlab::precondition_error("field does not match the input");
    }
    return epwlab::io::census_to_json(epwlab::epw::corank_census(a)).dump();
}

int corank(const std::string& lagrangian_json, const std::vector<std::string>& point) {
    auto a = lagrangian_of(lagrangian_json);
    std::vector<Scalar> v;
    v.reserve(point.size());
    for (const auto& c : point) v.push_back(Scalar::parse(a.field, c));
    return epwlab::epw::corank_at(a, v);
}

bool dual_membership(const std::string& lagrangian_json, const std::string& hyperplane_json) {
    auto a = lagrangian_of(lagrangian_json);
    Matrix w = epwlab::io::matrix_from_json(parse(hyperplane_json));
    return epwlab::epw::dual_membership(a, w);
}

std::string run_suite(const std::string& name, std::uint64_t seed, long field, int samples,
                      long bound) {
    epwlab::cli::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.field = field;
    cfg.samples = samples;
    cfg.bound = bound;
    return epwlab::cli::report_to_json(epwlab::cli::run_suite(name, cfg)).dump();
}

std::string discriminant(const std::string& lattice_json) {
    epwlab::lattice::EvenLattice l = epwlab::io::lattice_from_json(parse(lattice_json));
    epwlab::lattice::FiniteQuadForm f = epwlab::lattice::discriminant_form(l);
    json q = json::array(), b = json::array();
    for (const auto& x : f.q_table) q.push_back(x.get_str());
    for (const auto& row : f.b_table) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        b.push_back(r);
    }
    return json{{"orders", f.orders},
                {"group_order", f.group_order().get_str()},
                {"q", q},
                {"b", b}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(epwlab, m) {
    m.doc() = "exact verification toolkit: degeneracy sextics of Lagrangian subspaces, "
              "even-lattice discriminant forms, and the rank-24 embedding checks";

    py::register_exception<epwlab::error>(m, "EpwlabError", PyExc_ValueError);

    m.def("seeded_lagrangian", &seeded_lagrangian, py::arg("seed"), py::arg("field"),
          "graph Lagrangian of a seeded random symmetric 10x10 matrix, as JSON");
    m.def("sextic", &sextic, py::arg("lagrangian_json"), py::arg("chart") = 1,
          "normalized chart sextic of a Lagrangian, as JSON (chart is 1-based)");
    m.def("census", &census, py::arg("lagrangian_json"), py::arg("field") = 0,
          "corank census over the base field (or after reduction mod the given prime)");
    m.def("corank", &corank, py::arg("lagrangian_json"), py::arg("point"),
          "corank at a projective point given by coordinate strings");
    m.def("dual_membership", &dual_membership, py::arg("lagrangian_json"),
          py::arg("hyperplane_json"),
          "whether the triple wedge of the hyperplane (5x6 matrix JSON) meets the Lagrangian");
    m.def("run_suite", &run_suite, py::arg("name"), py::arg("seed") = 42,
          py::arg("field") = -1, py::arg("samples") = 200, py::arg("bound") = 3,
          "run a named verification suite; returns the report JSON");
    m.def("discriminant", &discriminant, py::arg("lattice_json"),
          "discriminant group and torsion form of an even lattice JSON");
    m.def("out_of_scope", [] { return epwlab::cli::out_of_scope_notes(); },
          "statements recorded in every report header but deliberately not computed");
}
