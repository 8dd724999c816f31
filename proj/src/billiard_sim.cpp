#include "nbilliard/billiard_sim.hpp"

#include <algorithm>
#include <cmath>

namespace nbilliard {

Vector reflect(const Vector& v_minus, const Subspace& wall) {
    const Vector tangential = wall.project(v_minus);
    const Vector ortho = v_minus - tangential;
    const double scale = std::max(1.0, wall.metric.to_euclidean(v_minus).norm());
    if (wall.metric.to_euclidean(ortho).norm() < 1e-10 * scale)
        throw std::invalid_argument("reflect: velocity is tangential to the wall");
    return tangential - ortho;
}

namespace {

struct WallFrame {
    Matrix basis_e;  // euclidean-frame orthonormal basis of the wall
};

double wall_residual(const WallFrame& w, const Vector& xe) {
    return (xe - w.basis_e * (w.basis_e.transpose() * xe)).norm();
}

}  // namespace

std::optional<Hit> next_collision(const Vector& point, const Vector& velocity,
                                  const SubspaceArrangement& arr) {
    const Metric& g = arr.metric;
    const Vector pe = g.to_euclidean(point);
    const Vector ve = g.to_euclidean(velocity);
    const double scale = std::max(1.0, pe.norm());
    const double tol = policy().hit_tol * scale;

    std::vector<WallFrame> frames;
    frames.reserve(arr.walls.size());
    for (const auto& w : arr.walls) frames.push_back({g.to_euclidean(w.space.basis)});

    double best_t = std::numeric_limits<double>::infinity();
    int best_wall = -1;
    for (size_t wi = 0; wi < arr.walls.size(); ++wi) {
        const Matrix& be = frames[wi].basis_e;
        const Vector rp = pe - be * (be.transpose() * pe);
        const Vector rv = ve - be * (be.transpose() * ve);
        const double rv2 = rv.squaredNorm();
        if (rv2 < 1e-24) continue;  // ray parallel to the wall
        const double t = -rp.dot(rv) / rv2;
        if (t <= policy().min_advance * scale || t >= best_t) continue;
        if ((rp + t * rv).norm() <= tol) {
            best_t = t;
            best_wall = static_cast<int>(wi);
        }
    }
    if (best_wall < 0) return std::nullopt;

    Hit hit;
    hit.time = best_t;
    hit.wall_index = best_wall;
    hit.point = point + best_t * velocity;

    const Vector he = g.to_euclidean(hit.point);
    int on_walls = 0;
    for (const auto& f : frames)
        if (wall_residual(f, he) <= tol) ++on_walls;
    hit.degenerate = on_walls >= 2;
    return hit;
}

Trajectory run_trajectory(const Vector& start, const Vector& velocity,
                          const SubspaceArrangement& arr, int max_events) {
    const Metric& g = arr.metric;
    for (const auto& w : arr.walls)
        if (w.space.distance(start) <= policy().hit_tol * std::max(1.0, start.norm()))
            throw std::invalid_argument("run_trajectory: start lies on a wall");

    Trajectory traj;
    traj.start = start;
    traj.velocity = velocity / std::sqrt(metric_inner(velocity, velocity, g));

    Vector point = start;
    Vector v = traj.velocity;
    double now = 0.0;
    traj.termination = Termination::escaped;
    while (static_cast<int>(traj.events.size()) < max_events) {
        const auto hit = next_collision(point, v, arr);
        if (!hit) break;
        if (hit->degenerate) {
            traj.termination = Termination::degenerate;
            break;
        }
        const std::string& label = arr.walls[static_cast<size_t>(hit->wall_index)].label;
        if (!traj.events.empty() && traj.events.back().wall == label)
            throw std::runtime_error("run_trajectory: immediate same-wall recollision");

        CollisionEvent ev;
        ev.time = now + hit->time;
        ev.wall = label;
        ev.point = hit->point;
        ev.v_minus = v;
        ev.v_plus = reflect(v, arr.walls[static_cast<size_t>(hit->wall_index)].space);
        now = ev.time;
        point = hit->point;
        v = ev.v_plus;
        traj.events.push_back(std::move(ev));
        if (static_cast<int>(traj.events.size()) == max_events)
            traj.termination = Termination::max_events;
    }
    return traj;
}

namespace {

std::pair<Vector, Vector> draw_uniform(Rng& rng, const SubspaceArrangement& arr, double radius) {
    Vector start;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        start = radius * rng.unit_sphere(arr.ambient_dim);
        bool off_walls = true;
        for (const auto& w : arr.walls)
            if (w.space.distance(start) <= 1e-7 * std::max(1.0, start.norm())) off_walls = false;
        if (off_walls) break;
    }
    return {start, rng.unit_sphere(arr.ambient_dim)};
}

bool contains_run(const std::vector<std::string>& labels, const std::vector<std::string>& pat) {
    if (pat.empty() || labels.size() < pat.size()) return false;
    for (size_t s = 0; s + pat.size() <= labels.size(); ++s) {
        bool match = true;
        for (size_t k = 0; k < pat.size(); ++k)
            if (labels[s + k] != pat[k]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

}  // namespace

Sampler uniform_sampler(const SubspaceArrangement& arr, double radius) {
    return [arr, radius](Rng& rng) { return draw_uniform(rng, arr, radius); };
}

SearchResult max_collision_search(const SubspaceArrangement& arr, const SearchParams& params,
                                  const Sampler& sampler) {
    if (params.trials < 1) throw std::invalid_argument("max_collision_search: trials must be >= 1");

    SearchResult res;
    res.seed = params.seed;
    for (long t = 0; t < params.trials; ++t) {
        Rng rng(params.seed, static_cast<uint64_t>(t));
        std::pair<Vector, Vector> draw =
            sampler ? sampler(rng) : draw_uniform(rng, arr, params.radius);

        Trajectory traj;
        try {
            traj = run_trajectory(draw.first, draw.second, arr, params.max_events);
        } catch (const std::invalid_argument&) {
            ++res.degenerate;  // sampled start on a wall
            continue;
        }
        if (traj.termination == Termination::degenerate) {
            ++res.degenerate;
            continue;
        }
        const int count = static_cast<int>(traj.events.size());
        ++res.histogram[count];
        if (count > res.max_count) {
            res.max_count = count;
            res.max_sequences.clear();
        }
        if (count == res.max_count && count > 0 && res.max_sequences.size() < 20) {
            auto labels = traj.labels();
            if (std::find(res.max_sequences.begin(), res.max_sequences.end(), labels) ==
                res.max_sequences.end())
                res.max_sequences.push_back(std::move(labels));
        }
        if (!params.watch_pattern.empty() && contains_run(traj.labels(), params.watch_pattern))
            ++res.watch_hits;
    }
    return res;
}

SearchResult max_collision_search(const SubspaceArrangement& arr, long trials, uint64_t seed) {
    SearchParams p;
    p.trials = trials;
    p.seed = seed;
    return max_collision_search(arr, p);
}

SubspaceArrangement reduced_arrangement(const JacobiMasses& jm) {
    SubspaceArrangement arr;
    arr.ambient_dim = 4;
    arr.metric = Metric::euclidean(4);
    for (const PairIndex& pair : {PairIndex(1, 2), PairIndex(2, 3), PairIndex(1, 3)})
        arr.walls.push_back({pair.label(), reduced_delta(pair, jm)});
    return arr;
}

Sampler reduced_slice_sampler(double radius) {
    return [radius](Rng& rng) -> std::pair<Vector, Vector> {
        const bool in_slice = (rng.next_u64() & 1ull) == 0;
        if (!in_slice) {
            Vector start = radius * rng.unit_sphere(4);
            return {start, rng.unit_sphere(4)};
        }
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const double c = std::cos(phi), s = std::sin(phi);
        Vector e1(4), e2(4);
        e1 << c, s, 0, 0;
        e2 << 0, 0, c, s;
        const double alpha = rng.uniform(0.0, 2.0 * M_PI);
        const double beta = rng.uniform(0.0, 2.0 * M_PI);
        Vector start = radius * (std::cos(alpha) * e1 + std::sin(alpha) * e2);
        Vector vel = std::cos(beta) * e1 + std::sin(beta) * e2;
        return {start, vel};
    };
}

}  // namespace nbilliard
