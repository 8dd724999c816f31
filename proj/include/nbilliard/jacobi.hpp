#pragma once

#include <array>

#include "nbilliard/collision_subspaces.hpp"

namespace nbilliard {

/// Three planar masses plus the derived Jacobi normalizers:
///   1/mu1^2 = 1/m1 + 1/m2,   1/mu2^2 = 1/m3 + 1/(m1+m2).
struct JacobiMasses {
    double m1, m2, m3;
    double mu1, mu2;

    JacobiMasses(double a, double b, double c) : m1(a), m2(b), m3(c) {
        if (!(a > 0 && b > 0 && c > 0))
            throw std::invalid_argument("JacobiMasses: masses must be positive");
        mu1 = 1.0 / std::sqrt(1.0 / m1 + 1.0 / m2);
        mu2 = 1.0 / std::sqrt(1.0 / m3 + 1.0 / (m1 + m2));
    }

    MassVector mass_vector() const { return MassVector({m1, m2, m3}); }
    BilliardSystem system() const { return BilliardSystem(3, 2, mass_vector()); }
};

/// A point of the translation quotient: v, w are the two planar Jacobi
/// coordinates. Flattened layout in R^4 is (v_x, v_y, w_x, w_y); under the
/// complex model z = x + i y per coordinate.
struct ReducedConfig {
    Eigen::Vector2d v;
    Eigen::Vector2d w;

    Vector flat() const {
        Vector r(4);
        r << v.x(), v.y(), w.x(), w.y();
        return r;
    }
};

/// The 4x6 matrix of the translation-quotient projection
///   v = mu1 (q1 - q2),  w = mu2 (q3 - (m1 q1 + m2 q2)/(m1 + m2)),
/// acting on the particle-major flattening of (q1, q2, q3) in R^2.
Matrix jacobi_matrix(const JacobiMasses& jm);

/// Apply the projection to a configuration. Linear; kernel is exactly the
/// translation family q + c*(1,1,1).
ReducedConfig jacobi_project(const std::array<Eigen::Vector2d, 3>& q, const JacobiMasses& jm);

/// Image of Delta_pair under the projection: a 2-plane in R^4 with the
/// Euclidean metric (Jacobi coordinates diagonalize the mass metric).
Subspace reduced_delta(const PairIndex& pair, const JacobiMasses& jm);

/// The real direction (a, b) with reduced_delta = C-span{(a, b)}: the
/// 2-plane is spanned by (a,0,b,0) and (0,a,0,b).
Eigen::Vector2d reduced_line_direction(const PairIndex& pair, const JacobiMasses& jm);

struct PrincipalImageReport {
    int checked = 0;
    double max_discrepancy = 0.0;
    bool pass = false;
};

/// Pushes the nonzero-angle principal vectors of (Delta_A, Delta_B) through
/// the projection and checks they are principal vectors of the reduced pair:
/// unit norm, contained in the reduced subspace, and projecting onto their
/// partner with the matching angle cosine.
PrincipalImageReport verify_principal_vector_image(const PairIndex& a, const PairIndex& b,
                                                   const JacobiMasses& jm);

struct VectorAngleRange {
    double min_angle;
    double max_angle;
};

/// Samples unit vectors V1 in the reduced A-plane and V2 in the reduced
/// B-plane and records the range of arccos|<V1,V2>| over `trials` draws.
VectorAngleRange min_vector_angle(const PairIndex& a, const PairIndex& b, const JacobiMasses& jm,
                                  int trials, uint64_t seed = 12345);

}  // namespace nbilliard
