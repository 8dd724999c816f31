#pragma once

#include <string>
#include <vector>

#include "nbilliard/metric_linalg.hpp"

namespace nbilliard {

/// N point particles in R^m; configuration space R^N (x) R^m with the mass
/// metric. The codimension of each binary collision subspace equals m.
struct BilliardSystem {
    int n_particles;
    int spatial_dim;
    MassVector masses;

    BilliardSystem(int n, int m, MassVector mv)
        : n_particles(n), spatial_dim(m), masses(std::move(mv)) {
        if (n < 2) throw std::invalid_argument("BilliardSystem: need N >= 2");
        if (m < 1) throw std::invalid_argument("BilliardSystem: need m >= 1");
        if (masses.size() != n)
            throw std::invalid_argument("BilliardSystem: masses length must equal N");
    }

    int ambient_dim() const { return n_particles * spatial_dim; }
    Metric metric() const { return Metric::mass(masses, spatial_dim); }
    int coord(int particle, int axis) const { return (particle - 1) * spatial_dim + axis; }
};

/// Unordered particle pair, stored with i < j (1-based).
struct PairIndex {
    int i, j;

    PairIndex(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
        if (a == b || i < 1) throw std::invalid_argument("PairIndex: need two distinct indices >= 1");
    }

    bool operator==(const PairIndex& o) const { return i == o.i && j == o.j; }
    std::string label() const { return "(" + std::to_string(i) + std::to_string(j) + ")"; }
};

/// The binary collision subspace Delta_ij: configurations with q_i = q_j.
/// dim m(N-1) in ambient dim mN, orthonormal under the mass metric.
Subspace build_delta(const BilliardSystem& sys, const PairIndex& pair);

/// Nonzero principal angle between Delta_ij and Delta_jk when the shared
/// particle's mass sits in the middle slot:
///   cos(theta) = sqrt(m_i*m_k / ((m_i+m_j)*(m_j+m_k))).
/// Always in (0, pi/2); symmetric in m_i <-> m_k; depends only on ratios.
double closed_form_angle(double m_i, double m_j, double m_k);

struct AngleTheoremReport {
    std::vector<double> expected;
    std::vector<double> computed;
    double max_discrepancy = 0.0;
    int zero_count = 0;
    int expected_zero_count = 0;
    bool pass = false;
};

/// Checks the two-subspace angle pattern: d(N-2) zeros, then d copies of
/// pi/2 (disjoint pairs) or of the closed-form angle (one shared index).
AngleTheoremReport verify_angle_theorem(const BilliardSystem& sys, const PairIndex& a,
                                        const PairIndex& b);

struct DecompositionReport {
    int dim_x = 0, dim_y = 0;
    double span_discrepancy_x = 0.0;  // angle of numeric X against the explicit span
    double span_discrepancy_y = 0.0;
    std::vector<double> cross_angles;  // angle(X, Y)
    double expected_angle = 0.0;
    double max_discrepancy = 0.0;
    bool pass = false;
};

/// Computes X = (Delta_A ^ Delta_B)^perp ^ Delta_A and its twin Y
/// numerically and compares them with the explicit spanning vectors
/// (disjoint pairs: m_l*e_k - m_k*e_l type; shared index:
/// m_k*(e_i+e_j) - (m_i+m_j)*e_k type). Also checks angle(X, Y).
DecompositionReport appendix_decomposition(const BilliardSystem& sys, const PairIndex& a,
                                           const PairIndex& b);

}  // namespace nbilliard
