#include "nbilliard/jacobi.hpp"

#include <cmath>

#include "nbilliard/rng.hpp"

namespace nbilliard {

Matrix jacobi_matrix(const JacobiMasses& jm) {
    const double msum = jm.m1 + jm.m2;
    Matrix p = Matrix::Zero(4, 6);
    for (int axis = 0; axis < 2; ++axis) {
        p(axis, 0 + axis) = jm.mu1;
        p(axis, 2 + axis) = -jm.mu1;
        p(2 + axis, 0 + axis) = -jm.mu2 * jm.m1 / msum;
        p(2 + axis, 2 + axis) = -jm.mu2 * jm.m2 / msum;
        p(2 + axis, 4 + axis) = jm.mu2;
    }
    return p;
}

ReducedConfig jacobi_project(const std::array<Eigen::Vector2d, 3>& q, const JacobiMasses& jm) {
    Vector flat(6);
    flat << q[0].x(), q[0].y(), q[1].x(), q[1].y(), q[2].x(), q[2].y();
    const Vector r = jacobi_matrix(jm) * flat;
    ReducedConfig rc;
    rc.v = Eigen::Vector2d(r[0], r[1]);
    rc.w = Eigen::Vector2d(r[2], r[3]);
    return rc;
}

Subspace reduced_delta(const PairIndex& pair, const JacobiMasses& jm) {
    if (pair.j > 3) throw std::invalid_argument("reduced_delta: pair out of range");
    const Subspace delta = build_delta(jm.system(), pair);
    const Matrix image = jacobi_matrix(jm) * delta.basis;
    return orthonormalize(image, Metric::euclidean(4));
}

Eigen::Vector2d reduced_line_direction(const PairIndex& pair, const JacobiMasses& jm) {
    // the collinear (m = 1) version of the projection; its image of the
    // pair subspace is the real line whose complex span is reduced_delta
    const double msum = jm.m1 + jm.m2;
    Matrix p = Matrix::Zero(2, 3);
    p(0, 0) = jm.mu1;
    p(0, 1) = -jm.mu1;
    p(1, 0) = -jm.mu2 * jm.m1 / msum;
    p(1, 1) = -jm.mu2 * jm.m2 / msum;
    p(1, 2) = jm.mu2;

    const BilliardSystem line_sys(3, 1, jm.mass_vector());
    const Matrix image = p * build_delta(line_sys, pair).basis;
    Subspace s = orthonormalize(image, Metric::euclidean(2));
    if (s.dim() != 1) throw std::logic_error("reduced_line_direction: expected a line");
    return Eigen::Vector2d(s.basis(0, 0), s.basis(1, 0));
}

PrincipalImageReport verify_principal_vector_image(const PairIndex& a, const PairIndex& b,
                                                   const JacobiMasses& jm) {
    const BilliardSystem sys = jm.system();
    const Matrix p = jacobi_matrix(jm);
    const AngleVector av = principal_angles(build_delta(sys, a), build_delta(sys, b));
    const Subspace ra = reduced_delta(a, jm);
    const Subspace rb = reduced_delta(b, jm);

    PrincipalImageReport rep;
    for (size_t k = 0; k < av.size(); ++k) {
        if (av[k] < policy().zero_angle_tol) continue;  // translations map to the origin
        const Vector u_img = p * av.principal_left.col(static_cast<Eigen::Index>(k));
        const Vector v_img = p * av.principal_right.col(static_cast<Eigen::Index>(k));

        // nonzero-angle principal vectors live in the zero-center-of-mass
        // part, where the projection is an isometry
        rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(u_img.norm() - 1.0));
        rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(v_img.norm() - 1.0));
        rep.max_discrepancy = std::max(rep.max_discrepancy, ra.distance(u_img));
        rep.max_discrepancy = std::max(rep.max_discrepancy, rb.distance(v_img));

        // image pair realizes the same angle and the principal-vector
        // relation: projecting one onto the other plane gives cos(theta)
        // times its partner
        const double c = u_img.dot(v_img);
        rep.max_discrepancy =
            std::max(rep.max_discrepancy, std::abs(std::abs(c) - std::cos(av[k])));
        const Vector proj = rb.project(u_img);
        rep.max_discrepancy = std::max(rep.max_discrepancy, (proj - c * v_img).norm());
        ++rep.checked;
    }
    rep.pass = rep.checked > 0 && rep.max_discrepancy < 1e-8;
    return rep;
}

VectorAngleRange min_vector_angle(const PairIndex& a, const PairIndex& b, const JacobiMasses& jm,
                                  int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("min_vector_angle: trials must be >= 1");
    const Subspace ra = reduced_delta(a, jm);
    const Subspace rb = reduced_delta(b, jm);

    Rng rng(seed);
    VectorAngleRange range{M_PI, 0.0};
    for (int t = 0; t < trials; ++t) {
        const double alpha = rng.uniform(0.0, 2.0 * M_PI);
        const double beta = rng.uniform(0.0, 2.0 * M_PI);
        const Vector v1 = ra.basis.col(0) * std::cos(alpha) + ra.basis.col(1) * std::sin(alpha);
        const Vector v2 = rb.basis.col(0) * std::cos(beta) + rb.basis.col(1) * std::sin(beta);
        const double ang = std::acos(std::clamp(std::abs(v1.dot(v2)), 0.0, 1.0));
        range.min_angle = std::min(range.min_angle, ang);
        range.max_angle = std::max(range.max_angle, ang);
    }
    return range;
}

}  // namespace nbilliard
