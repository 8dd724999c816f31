#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbilliard/collision_subspaces.hpp"

namespace nbilliard {

/// A named collision bound: formula inputs, the predicted ceiling, and the
/// empirical maximum observed (when a sampling check ran).
struct BoundReport {
    std::string name;
    std::map<std::string, double> inputs;
    double predicted = 0.0;  // integer-valued unless overflowed
    bool overflow = false;
    std::optional<long> empirical_max;
    std::optional<long> witness_count;
    std::optional<bool> applicable;
    bool consistent = true;  // empirical_max absent or <= predicted
};

/// ceil(pi / alpha) collisions inside a wedge of angle alpha.
long wedge_bound(double alpha);

/// Collision ceiling for three point masses with the shared mass in the
/// middle slot: wedge_bound of the closed-form angle.
long three_mass_bound(double m_i, double m_j, double m_k);

/// Ceiling valid for the whole three-particle system: the binding wedge is
/// the pair of walls sharing the lightest particle, so take the max over
/// the three shared-index slot assignments.
long three_mass_system_bound(double m1, double m2, double m3);

/// three_mass_bound(alpha, 1, beta) tabulated over a (0, hi]^2 grid of mass
/// ratios. flag marks cells whose angle reached pi/2 (does not occur for
/// positive masses; kept for the emitted schema).
struct MassRatioGrid {
    double alpha_hi = 10.0, beta_hi = 10.0;
    double step = 0.05;
    int na = 0, nb = 0;
    std::vector<long> cells;  // row-major over (alpha index, beta index)
    std::vector<char> flags;

    double alpha(int ia) const { return step * (ia + 1); }
    double beta(int ib) const { return step * (ib + 1); }
    long cell(int ia, int ib) const { return cells[static_cast<size_t>(ia) * nb + ib]; }
    char flag(int ia, int ib) const { return flags[static_cast<size_t>(ia) * nb + ib]; }
};

MassRatioGrid mass_ratio_grid(double alpha_hi, double beta_hi, double step);

/// A line meets at most N mutually orthogonal hyperplanes in R^N; checked
/// by sign-change counting on random lines plus the constructive witness.
BoundReport hyperplane_line_bound(int n, long trials, uint64_t seed);

/// A line meets at most N-d+1 mutually orthogonal codimension-d coordinate
/// subspaces; events are times where exactly d coordinates vanish.
BoundReport codim_line_bound(int n, int d, long trials, uint64_t seed);

/// Hard rods on a line: the C(N,2) bound under each of the three published
/// mass conditions, plus the (always applicable, astronomically loose)
/// exponential bound.
std::vector<BoundReport> hard_rod_bounds(int n, const MassVector& masses);

}  // namespace nbilliard
