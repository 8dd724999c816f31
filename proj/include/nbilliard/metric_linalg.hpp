#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbilliard/metric.hpp"
#include "nbilliard/numeric_policy.hpp"

namespace nbilliard {

/// A linear subspace given by a metric-orthonormal spanning set (columns of
/// `basis`, in the original coordinates). dim == basis.cols().
struct Subspace {
    int ambient_dim = 0;
    Metric metric = Metric::euclidean(0);
    Matrix basis;  // ambient_dim x dim, orthonormal under `metric`

    int dim() const { return static_cast<int>(basis.cols()); }

    /// Max |<b_i,b_j> - delta_ij| under the metric.
    double gram_defect() const;

    /// Metric-orthogonal projection of x onto this subspace.
    Vector project(const Vector& x) const;

    /// Metric distance from x to the subspace.
    double distance(const Vector& x) const;

    bool contains(const Vector& x, double tol) const { return distance(x) <= tol * std::max(1.0, x.norm()); }
};

/// Principal angles between a pair of subspaces, nondecreasing, in [0, pi/2].
/// principal_left/right hold the paired principal vectors as columns (unit
/// under the shared metric), aligned with `angles`.
struct AngleVector {
    std::vector<double> angles;
    Matrix principal_left;
    Matrix principal_right;

    size_t size() const { return angles.size(); }
    double operator[](size_t k) const { return angles[k]; }
};

/// Spanning set -> Subspace. Modified Gram-Schmidt with one full
/// re-orthogonalization pass; dependent columns are dropped. An all-zero
/// input yields a dim-0 subspace.
Subspace orthonormalize(const std::vector<Vector>& vectors, const Metric& g);
Subspace orthonormalize(const Matrix& columns, const Metric& g);

/// Principal angles via SVD of the cross-Gram matrix of the orthonormal
/// bases (Euclidean SVD in the rescaled frame). Angles below pi/4 are
/// recomputed through the sine route so that zero angles come out at
/// machine precision rather than sqrt(eps).
AngleVector principal_angles(const Subspace& F, const Subspace& G);

/// Independent check of the variational definition: greedy maximization of
/// |<u,v>| over discretized unit spheres (resolution samples per angular
/// dimension) with deflation onto the orthogonal complements of the found
/// principal vectors. Only for dim <= 3 per side; agrees with
/// principal_angles within 2*pi/resolution per angle.
AngleVector principal_angles_oracle(const Subspace& F, const Subspace& G, int resolution);

/// Span of the principal-vector pairs whose angle is below the zero-angle
/// tolerance.
Subspace subspace_intersection(const Subspace& F, const Subspace& G);

/// Metric-orthogonal complement; dim = ambient_dim - dim F.
Subspace orthogonal_complement(const Subspace& F);

/// One identity of the angle-duality lemma, evaluated from both sides.
struct DualityIdentity {
    std::string name;
    std::vector<double> lhs;
    std::vector<double> rhs;
    double max_discrepancy = 0.0;
};

struct DualityReport {
    std::vector<DualityIdentity> identities;
    double max_discrepancy = 0.0;
    bool pass = false;
};

/// Evaluates the four identities relating angles of F, G and their
/// complements (symmetry, the two padding rules, the pi/2-complement rule).
/// Passes iff every discrepancy < 1e-8.
DualityReport check_angle_duality(const Subspace& F, const Subspace& G);

}  // namespace nbilliard
