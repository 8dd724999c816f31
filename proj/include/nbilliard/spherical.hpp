#pragma once

#include <array>

#include "nbilliard/bounds.hpp"

namespace nbilliard {

/// A finite set of planes through the origin in R^3, one unit normal each.
/// Great circles C_i = plane_i intersected with the unit sphere are derived.
struct PlaneArrangement {
    std::vector<Eigen::Vector3d> normals;

    explicit PlaneArrangement(std::vector<Eigen::Vector3d> ns);

    int size() const { return static_cast<int>(normals.size()); }
};

/// Angle between the two great circles at an intersection point, measured
/// between tangent vectors there. Equals the nonzero principal angle of the
/// planes (the angle between the normals, folded into [0, pi/2]).
double dihedral_angle_via_tangents(const Eigen::Vector3d& n1, const Eigen::Vector3d& n2);

enum class ConeVerdict { feasible, infeasible };

/// Can a trihedral cone have these three face angles on the sphere? The
/// triangle cut out by a genuine cone has angle sum strictly greater than
/// pi, so a sum of at most pi is infeasible.
ConeVerdict cone_feasibility(const std::array<double, 3>& angles);

/// Four planes whose great circles tile the sphere with twelve
/// pi/3-pi/2-pi/2 triangles: z=0, y=0, y=sqrt(3)x, y=-sqrt(3)x.
PlaneArrangement tiling_322();

/// Six planes whose great circles tile the sphere with twenty-four
/// pi/3-pi/3-pi/2 triangles.
PlaneArrangement tiling_332();

struct FaceCount {
    int vertices = 0;
    int edges = 0;
    int faces_euler = 0;    // 2 - V + E
    int faces_sampled = 0;  // distinct sign vectors over sampled sphere points
    bool consistent = false;
};

/// Counts the cells the great circles cut the sphere into, twice over:
/// combinatorially through the Euler characteristic and empirically by
/// classifying random sphere points by their sign vector.
FaceCount count_faces(const PlaneArrangement& arr, long samples = 1000000, uint64_t seed = 1);

/// Samples random affine lines (kept clear of every pairwise plane
/// intersection line) and counts distinct plane-crossing points. The
/// predicted ceiling is the number of planes.
BoundReport line_intersection_count(const PlaneArrangement& arr, long trials, uint64_t seed);

/// The arrangement {x=y, y=z, x=z}, whose planes share the line through
/// (1,1,1): lines avoiding that common line meet the planes in at most
/// three points.
BoundReport three_planes_common_line_count(long trials, uint64_t seed);

}  // namespace nbilliard
