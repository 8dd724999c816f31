#include "nbilliard/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nbilliard/rng.hpp"

namespace nbilliard {

PlaneArrangement::PlaneArrangement(std::vector<Eigen::Vector3d> ns) : normals(std::move(ns)) {
    for (auto& n : normals) {
        if (std::abs(n.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("PlaneArrangement: normals must be unit length");
    }
    for (size_t i = 0; i < normals.size(); ++i)
        for (size_t j = i + 1; j < normals.size(); ++j)
            if (std::abs(normals[i].dot(normals[j])) >= 1.0 - 1e-10)
                throw std::invalid_argument("PlaneArrangement: parallel planes");
}

double dihedral_angle_via_tangents(const Eigen::Vector3d& n1, const Eigen::Vector3d& n2) {
    const Eigen::Vector3d u1 = n1.normalized(), u2 = n2.normalized();
    if (std::abs(u1.dot(u2)) >= 1.0 - 1e-10)
        throw std::invalid_argument("dihedral_angle_via_tangents: parallel planes");

    const Eigen::Vector3d p1 = u1.cross(u2).normalized();  // a point of C1 ^ C2
    // tangent to C_i at p1: in the plane (perp to n_i) and perp to the radius
    const Eigen::Vector3d t1 = u1.cross(p1).normalized();
    const Eigen::Vector3d t2 = u2.cross(p1).normalized();
    return std::acos(std::clamp(std::abs(t1.dot(t2)), 0.0, 1.0));
}

ConeVerdict cone_feasibility(const std::array<double, 3>& angles) {
    for (double a : angles)
        if (!(a > 0.0 && a < M_PI))
            throw std::invalid_argument("cone_feasibility: angles must lie in (0, pi)");
    const double sum = angles[0] + angles[1] + angles[2];
    return sum <= M_PI + 1e-9 ? ConeVerdict::infeasible : ConeVerdict::feasible;
}

PlaneArrangement tiling_322() {
    const double h = 0.5;
    const double s = std::sqrt(3.0) / 2.0;
    return PlaneArrangement({
        {0.0, 0.0, 1.0},  // z = 0
        {0.0, 1.0, 0.0},  // y = 0
        {s, -h, 0.0},     // y = sqrt(3) x
        {s, h, 0.0},      // y = -sqrt(3) x
    });
}

PlaneArrangement tiling_332() {
    const double h = 0.5;
    const double r = 1.0 / std::sqrt(2.0);
    return PlaneArrangement({
        {1.0, 0.0, 0.0},
        {0.0, 1.0, 0.0},
        {-h, -h, r},
        {-h, h, -r},
        {h, -h, -r},
        {h, h, r},
    });
}

FaceCount count_faces(const PlaneArrangement& arr, long samples, uint64_t seed) {
    if (arr.size() < 1) throw std::invalid_argument("count_faces: empty arrangement");
    if (arr.size() > 62) throw std::invalid_argument("count_faces: too many planes");

    // vertices: pairwise circle intersections, deduplicated
    std::vector<Eigen::Vector3d> vertices;
    for (int i = 0; i < arr.size(); ++i)
        for (int j = i + 1; j < arr.size(); ++j) {
            const Eigen::Vector3d dir = arr.normals[i].cross(arr.normals[j]).normalized();
            for (const Eigen::Vector3d& v : {dir, Eigen::Vector3d(-dir)}) {
                bool seen = false;
                for (const auto& w : vertices)
                    if ((w - v).norm() < 1e-8) seen = true;
                if (!seen) vertices.push_back(v);
            }
        }

    FaceCount fc;
    fc.vertices = static_cast<int>(vertices.size());

    // each circle is split into as many arcs as it carries vertices
    for (int i = 0; i < arr.size(); ++i) {
        int on_circle = 0;
        for (const auto& v : vertices)
            if (std::abs(arr.normals[i].dot(v)) < 1e-9) ++on_circle;
        fc.edges += on_circle;
    }
    fc.faces_euler = 2 - fc.vertices + fc.edges;

    Rng rng(seed);
    std::set<uint64_t> cells;
    for (long t = 0; t < samples; ++t) {
        const Vector p3 = rng.unit_sphere(3);
        const Eigen::Vector3d p(p3[0], p3[1], p3[2]);
        uint64_t signs = 0;
        bool near_circle = false;
        for (int i = 0; i < arr.size(); ++i) {
            const double d = arr.normals[i].dot(p);
            if (std::abs(d) < 1e-4) {
                near_circle = true;
                break;
            }
            if (d > 0.0) signs |= 1ull << i;
        }
        if (!near_circle) cells.insert(signs);
    }
    fc.faces_sampled = static_cast<int>(cells.size());
    fc.consistent = fc.faces_sampled == fc.faces_euler;
    return fc;
}

namespace {

/// Distance between the affine line a + t*u and the origin line span{d}.
double line_line_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& u,
                          const Eigen::Vector3d& d) {
    const Eigen::Vector3d c = u.cross(d);
    if (c.norm() < 1e-12) {
        const Eigen::Vector3d dn = d.normalized();
        return (a - a.dot(dn) * dn).norm();
    }
    return std::abs(a.dot(c)) / c.norm();
}

long count_line_crossings(const Eigen::Vector3d& a, const Eigen::Vector3d& u,
                          const PlaneArrangement& arr) {
    std::vector<double> times;
    for (const auto& n : arr.normals) {
        const double nu = n.dot(u);
        if (std::abs(nu) < 1e-10) continue;  // parallel to the plane
        times.push_back(-n.dot(a) / nu);
    }
    std::sort(times.begin(), times.end());
    long crossings = 0;
    for (size_t k = 0; k < times.size();) {
        size_t e = k + 1;
        while (e < times.size() && times[e] - times[e - 1] < 1e-9) ++e;
        ++crossings;  // coincident hits are one intersection point
        k = e;
    }
    return crossings;
}

BoundReport run_line_count(const PlaneArrangement& arr, long trials, uint64_t seed,
                           const std::string& name, double predicted) {
    if (trials < 1) throw std::invalid_argument("line_intersection_count: trials must be >= 1");

    BoundReport rep;
    rep.name = name;
    rep.inputs = {{"planes", static_cast<double>(arr.size())},
                  {"trials", static_cast<double>(trials)},
                  {"seed", static_cast<double>(seed)}};
    rep.predicted = predicted;

    long best = 0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<uint64_t>(t));
        Eigen::Vector3d a, u;
        for (int i = 0; i < 3; ++i) a[i] = 2.0 * rng.normal();
        const Vector us = rng.unit_sphere(3);
        u = Eigen::Vector3d(us[0], us[1], us[2]);

        bool clear = true;
        for (int i = 0; i < arr.size() && clear; ++i)
            for (int j = i + 1; j < arr.size() && clear; ++j) {
                const Eigen::Vector3d d = arr.normals[i].cross(arr.normals[j]);
                if (line_line_distance(a, u, d) < 1e-7) clear = false;
            }
        if (!clear) continue;  // too close to a pairwise intersection line

        best = std::max(best, count_line_crossings(a, u, arr));
    }
    rep.empirical_max = best;
    rep.consistent = best <= static_cast<long>(rep.predicted);
    return rep;
}

}  // namespace

BoundReport line_intersection_count(const PlaneArrangement& arr, long trials, uint64_t seed) {
    return run_line_count(arr, trials, seed, "line-intersections",
                          static_cast<double>(arr.size()));
}

BoundReport three_planes_common_line_count(long trials, uint64_t seed) {
    const double r = 1.0 / std::sqrt(2.0);
    const PlaneArrangement arr({
        {r, -r, 0.0},  // x = y
        {0.0, r, -r},  // y = z
        {r, 0.0, -r},  // x = z
    });
    return run_line_count(arr, trials, seed, "three-planes-common-line", 3.0);
}

}  // namespace nbilliard
