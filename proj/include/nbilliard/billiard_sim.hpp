#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbilliard/jacobi.hpp"
#include "nbilliard/metric_linalg.hpp"
#include "nbilliard/rng.hpp"

namespace nbilliard {

struct CollisionEvent {
    double time = 0.0;
    std::string wall;
    Vector point;
    Vector v_minus;
    Vector v_plus;
};

enum class Termination { escaped, max_events, degenerate };

/// A piecewise-linear trajectory: straight segments joined at collision
/// events with strictly increasing times.
struct Trajectory {
    Vector start;
    Vector velocity;
    std::vector<CollisionEvent> events;
    Termination termination = Termination::escaped;

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(events.size());
        for (const auto& e : events) out.push_back(e.wall);
        return out;
    }
};

struct Wall {
    std::string label;
    Subspace space;
};

/// The collision locus: a union of linear subspaces acting as mirrors.
struct SubspaceArrangement {
    int ambient_dim = 0;
    Metric metric = Metric::euclidean(0);
    std::vector<Wall> walls;
};

/// Specular reflection: flip the component of v orthogonal to the wall.
/// Preserves the metric norm and the wall projection; involution. Throws if
/// v lies (numerically) inside the wall.
Vector reflect(const Vector& v_minus, const Subspace& wall);

struct Hit {
    double time = 0.0;
    int wall_index = -1;
    Vector point;
    bool degenerate = false;  // hit point lies on two or more walls
};

/// Earliest forward intersection of the ray with any wall (least-squares ray
/// test against each wall's orthogonal complement), or nullopt on escape.
std::optional<Hit> next_collision(const Vector& point, const Vector& velocity,
                                  const SubspaceArrangement& arr);

Trajectory run_trajectory(const Vector& start, const Vector& velocity,
                          const SubspaceArrangement& arr, int max_events);

/// Draws (start, velocity) for one trial.
using Sampler = std::function<std::pair<Vector, Vector>(Rng&)>;

struct SearchParams {
    long trials = 1;
    uint64_t seed = 0;
    int max_events = 10;
    double radius = 1.0;
    std::vector<std::string> watch_pattern;  // counted as contiguous label runs
};

struct SearchResult {
    std::map<int, long> histogram;  // event count -> non-degenerate trials
    int max_count = 0;
    std::vector<std::vector<std::string>> max_sequences;  // unique, capped
    long degenerate = 0;
    long watch_hits = 0;
    uint64_t seed = 0;
};

/// Seeded Monte-Carlo search for maximal collision sequences. Per-trial
/// streams are derived from (seed, trial), so results do not depend on how
/// trials are partitioned.
SearchResult max_collision_search(const SubspaceArrangement& arr, const SearchParams& params,
                                  const Sampler& sampler = {});
SearchResult max_collision_search(const SubspaceArrangement& arr, long trials, uint64_t seed);

/// Uniform start on the sphere of `radius` (rejected off walls) with a
/// uniform unit velocity.
Sampler uniform_sampler(const SubspaceArrangement& arr, double radius = 1.0);

/// The three reduced collision planes in R^4 (Euclidean metric).
SubspaceArrangement reduced_arrangement(const JacobiMasses& jm);

/// Alternates ambient-uniform draws with draws inside a random-phase real
/// 2-plane slice {(e^{i phi} x, e^{i phi} y)}. The slices are invariant
/// under every reduced wall projection, so in-slice rays are genuine
/// trajectories of the full system and meet the codimension-2 walls
/// generically.
Sampler reduced_slice_sampler(double radius = 1.0);

}  // namespace nbilliard
