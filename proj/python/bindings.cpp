#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nbilliard/billiard_sim.hpp"
#include "nbilliard/bounds.hpp"
#include "nbilliard/spherical.hpp"

namespace py = pybind11;
using namespace nbilliard;

namespace {

Subspace make_subspace(const Matrix& columns, const std::vector<double>& masses, int spatial_dim) {
    const Metric g = masses.empty()
                         ? Metric::euclidean(static_cast<int>(columns.rows()))
                         : Metric::mass(MassVector(masses), spatial_dim);
    return orthonormalize(columns, g);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "collision subspace angles, bounds, and billiard simulation";

    py::class_<Subspace>(mod, "Subspace")
        .def_property_readonly("dim", &Subspace::dim)
        .def_readonly("ambient_dim", &Subspace::ambient_dim)
        .def_readonly("basis", &Subspace::basis)
        .def("gram_defect", &Subspace::gram_defect)
        .def("project", &Subspace::project)
        .def("distance", &Subspace::distance);

    py::class_<AngleVector>(mod, "AngleVector")
        .def_readonly("angles", &AngleVector::angles)
        .def_readonly("principal_left", &AngleVector::principal_left)
        .def_readonly("principal_right", &AngleVector::principal_right);

    mod.def("subspace", &make_subspace, py::arg("columns"),
            py::arg("masses") = std::vector<double>{}, py::arg("spatial_dim") = 1,
            "Orthonormalize spanning columns into a Subspace (mass metric when "
            "masses are given).");
    mod.def("principal_angles",
            [](const Subspace& f, const Subspace& g) { return principal_angles(f, g); });
    mod.def("principal_angles_oracle", &principal_angles_oracle, py::arg("f"), py::arg("g"),
            py::arg("resolution"));
    mod.def("subspace_intersection", &subspace_intersection);
    mod.def("orthogonal_complement", &orthogonal_complement);
    mod.def("check_angle_duality",
            [](const Subspace& f, const Subspace& g) { return check_angle_duality(f, g).pass; });

    mod.def("build_delta",
            [](int n, int m, const std::vector<double>& masses, int i, int j) {
                return build_delta(BilliardSystem(n, m, MassVector(masses)), PairIndex(i, j));
            },
            py::arg("n"), py::arg("m"), py::arg("masses"), py::arg("i"), py::arg("j"));
    mod.def("closed_form_angle", &closed_form_angle, py::arg("m_i"), py::arg("m_j"),
            py::arg("m_k"));
    mod.def("verify_angle_theorem",
            [](int n, int m, const std::vector<double>& masses, int ai, int aj, int bi, int bj) {
                const auto rep = verify_angle_theorem(BilliardSystem(n, m, MassVector(masses)),
                                                      PairIndex(ai, aj), PairIndex(bi, bj));
                return py::make_tuple(rep.pass, rep.computed, rep.max_discrepancy);
            });

    mod.def("wedge_bound", &wedge_bound);
    mod.def("three_mass_bound", &three_mass_bound);
    mod.def("three_mass_system_bound", &three_mass_system_bound);

    mod.def("simulate",
            [](double m1, double m2, double m3, long trials, uint64_t seed) {
                const JacobiMasses jm(m1, m2, m3);
                SearchParams params;
                params.trials = trials;
                params.seed = seed;
                const SearchResult res =
                    max_collision_search(reduced_arrangement(jm), params, reduced_slice_sampler());
                return py::make_tuple(res.max_count, res.histogram, res.degenerate);
            },
            py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("trials") = 10000,
            py::arg("seed") = 0,
            "Monte-Carlo collision search in the reduced arrangement; returns "
            "(max_count, histogram, degenerate).");

    mod.def("tiling_face_counts", [](int which) {
        const FaceCount fc = count_faces(which == 322 ? tiling_322() : tiling_332());
        return py::make_tuple(fc.faces_euler, fc.faces_sampled, fc.consistent);
    });
}
