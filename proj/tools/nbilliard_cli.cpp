// nbilliard: command-line surface for the collision-angle library.
//
// Subcommands: angles, simulate, grid, verify-all. Every command echoes its
// full configuration (seed included) so runs are reproducible; identical
// configurations produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbilliard/billiard_sim.hpp"
#include "nbilliard/bounds.hpp"
#include "nbilliard/collision_subspaces.hpp"
#include "nbilliard/spherical.hpp"

using json = nlohmann::ordered_json;
using namespace nbilliard;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

std::string format_angle(double a) {
    std::ostringstream os;
    os.precision(12);
    os << a;
    return os.str();
}

/// Symbolic tag when the angle is within 1e-9 of pi*p/q for q <= 6.
std::string angle_tag(double a) {
    for (int q = 1; q <= 6; ++q)
        for (int p = 0; p <= q; ++p) {
            if (std::abs(a - M_PI * p / q) >= 1e-9) continue;
            if (p == 0) return "0";
            const int g = std::gcd(p, q);
            const int pr = p / g, qr = q / g;
            if (qr == 1) return pr == 1 ? "pi" : std::to_string(pr) + "pi";
            return (pr == 1 ? std::string("pi") : std::to_string(pr) + "pi") + "/" +
                   std::to_string(qr);
        }
    return "";
}

json angle_list(const std::vector<double>& angles) {
    json out = json::array();
    for (double a : angles) {
        json entry;
        entry["radians"] = format_angle(a);
        const std::string tag = angle_tag(a);
        if (!tag.empty()) entry["symbolic"] = tag;
        out.push_back(entry);
    }
    return out;
}

std::vector<double> parse_masses(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<PairIndex> parse_pairs(const std::string& csv) {
    std::vector<PairIndex> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 2 || !isdigit(item[0]) || !isdigit(item[1]))
            throw std::invalid_argument("pair must be two digits, e.g. 12");
        out.emplace_back(item[0] - '0', item[1] - '0');
    }
    return out;
}

/// Resolve a bare relative output name against NBILLIARD_OUT_DIR.
std::string resolve_output(const std::string& path) {
    const char* dir = std::getenv("NBILLIARD_OUT_DIR");
    if (!dir || path.empty() || path[0] == '/' || path == "-") return path;
    return std::string(dir) + "/" + path;
}

int emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream f(resolve_output(path), std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return kExitIo;
    }
    f << text;
    return f.good() ? kExitPass : kExitIo;
}

int cmd_angles(int n, int m, const std::string& masses_csv, const std::string& pairs_csv,
               const std::string& output) {
    const std::vector<double> masses = parse_masses(masses_csv);
    const std::vector<PairIndex> pairs = parse_pairs(pairs_csv);
    if (static_cast<int>(masses.size()) != n)
        throw CLI::ValidationError("--masses", "length must equal --n");
    if (pairs.size() != 2) throw CLI::ValidationError("--pairs", "need exactly two pairs");
    for (const auto& p : pairs)
        if (p.j > n) throw CLI::ValidationError("--pairs", "pair index exceeds --n");

    const BilliardSystem sys(n, m, MassVector(masses));
    const AngleTheoremReport rep = verify_angle_theorem(sys, pairs[0], pairs[1]);
    const DecompositionReport dec = appendix_decomposition(sys, pairs[0], pairs[1]);
    const bool pass = rep.pass && dec.pass;

    json out;
    out["config"] = {{"command", "angles"},
                     {"n", n},
                     {"m", m},
                     {"masses", masses},
                     {"pairs", pairs_csv}};
    out["expected"] = angle_list(rep.expected);
    out["computed"] = angle_list(rep.computed);
    out["max_discrepancy"] = rep.max_discrepancy;
    out["zero_count"] = rep.zero_count;
    out["expected_zero_count"] = rep.expected_zero_count;
    out["decomposition"] = {{"dim_x", dec.dim_x},
                            {"dim_y", dec.dim_y},
                            {"cross_angles", angle_list(dec.cross_angles)},
                            {"expected_angle", format_angle(dec.expected_angle)},
                            {"max_discrepancy", dec.max_discrepancy},
                            {"pass", dec.pass}};
    out["pass"] = pass;

    const int io = emit(output, out.dump(2) + "\n");
    if (io != kExitPass) return io;
    return pass ? kExitPass : kExitFail;
}

int cmd_simulate(const std::string& masses_csv, long trials, uint64_t seed, int max_events,
                 const std::string& output) {
    const std::vector<double> masses = parse_masses(masses_csv);
    if (masses.size() != 3) throw CLI::ValidationError("--masses", "need exactly three masses");

    const JacobiMasses jm(masses[0], masses[1], masses[2]);
    const SubspaceArrangement arr = reduced_arrangement(jm);

    SearchParams params;
    params.trials = trials;
    params.seed = seed;
    params.max_events = max_events;
    params.watch_pattern = {"(12)", "(23)", "(12)", "(13)"};
    const SearchResult res = max_collision_search(arr, params, reduced_slice_sampler());

    const long bound = three_mass_system_bound(masses[0], masses[1], masses[2]);
    const bool all_degenerate = res.degenerate == trials;
    const bool pass = !all_degenerate && res.max_count <= bound;

    json out;
    out["config"] = {{"command", "simulate"},
                     {"masses", masses},
                     {"trials", trials},
                     {"seed", seed},
                     {"max_events", max_events}};
    json hist = json::object();
    for (const auto& [count, freq] : res.histogram) hist[std::to_string(count)] = freq;
    out["histogram"] = hist;
    out["max_count"] = res.max_count;
    out["max_sequences"] = res.max_sequences;
    out["degenerate"] = res.degenerate;
    out["watch_pattern_hits"] = res.watch_hits;
    out["bound"] = bound;
    out["pass"] = pass;

    const int io = emit(output, out.dump(2) + "\n");
    if (io != kExitPass) return io;
    if (all_degenerate) {
        std::cerr << "error: every trial was degenerate\n";
        return kExitDegenerate;
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_grid(double step, double alpha_hi, double beta_hi, const std::string& output) {
    const MassRatioGrid grid = mass_ratio_grid(alpha_hi, beta_hi, step);

    json config = {{"command", "grid"},
                   {"step", step},
                   {"alpha_hi", alpha_hi},
                   {"beta_hi", beta_hi}};

    std::ostringstream os;
    os << "# config: " << config.dump() << "\n";
    os << "alpha,beta,bound,flag\n";
    char row[96];
    for (int ia = 0; ia < grid.na; ++ia)
        for (int ib = 0; ib < grid.nb; ++ib) {
            std::snprintf(row, sizeof(row), "%.6f,%.6f,%ld,%d\n", grid.alpha(ia), grid.beta(ib),
                          grid.cell(ia, ib), static_cast<int>(grid.flag(ia, ib)));
            os << row;
        }
    return emit(output, os.str());
}

// ---- verify-all ------------------------------------------------------------

struct Suite {
    std::string only;
    long trials;
    uint64_t seed;
    bool all_pass = true;

    bool wants(const std::string& module) const { return only.empty() || only == module; }

    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_pass = all_pass && ok;
    }
};

Subspace random_subspace(Rng& rng, int ambient, int dim) {
    Matrix cols(ambient, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < ambient; ++r) cols(r, c) = rng.normal();
    return orthonormalize(cols, Metric::euclidean(ambient));
}

void verify_metric_linalg(Suite& s) {
    Rng rng(s.seed, 101);
    bool duality = true;
    const int pairs = static_cast<int>(std::min<long>(s.trials, 50));
    for (int t = 0; t < pairs; ++t) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 8);
        const int p = 1 + static_cast<int>(rng.next_u64() % n);
        const int q = 1 + static_cast<int>(rng.next_u64() % n);
        duality = duality && check_angle_duality(random_subspace(rng, n, p),
                                                 random_subspace(rng, n, q)).pass;
    }
    s.check("metric-linalg/angle-duality", duality);

    bool oracle = true;
    for (int t = 0; t < 5; ++t) {
        const Subspace f = random_subspace(rng, 5, 2);
        const Subspace g = random_subspace(rng, 5, 2);
        const AngleVector svd = principal_angles(f, g);
        const AngleVector gr = principal_angles_oracle(f, g, 200);
        for (size_t k = 0; k < svd.size(); ++k)
            oracle = oracle && std::abs(svd[k] - gr[k]) < 2.0 * M_PI / 200;
    }
    s.check("metric-linalg/oracle-agreement", oracle);
}

void verify_collision_subspaces(Suite& s) {
    bool equal = true;
    for (int n : {3, 4})
        for (int m : {1, 2}) {
            const BilliardSystem sys(n, m, MassVector::unit(n));
            equal = equal && verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(2, 3)).pass;
            if (n >= 4)
                equal = equal && verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(3, 4)).pass;
        }
    s.check("collision-subspaces/angle-theorem-equal", equal);

    Rng rng(s.seed, 202);
    bool random_masses = true, decomposition = true;
    const int draws = static_cast<int>(std::min<long>(s.trials, 30));
    for (int t = 0; t < draws; ++t) {
        std::vector<double> masses(3);
        for (auto& mv : masses) mv = rng.log_uniform(0.1, 10.0);
        const BilliardSystem sys(3, 2, MassVector(masses));
        random_masses =
            random_masses && verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(2, 3)).pass;
        decomposition =
            decomposition && appendix_decomposition(sys, PairIndex(1, 2), PairIndex(2, 3)).pass;
    }
    s.check("collision-subspaces/angle-theorem-random", random_masses);
    s.check("collision-subspaces/appendix-decomposition", decomposition);
}

void verify_jacobi(Suite& s) {
    const JacobiMasses jm(1, 1, 1);
    bool angles = true;
    for (const auto& [a, b] : std::vector<std::pair<PairIndex, PairIndex>>{
             {{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}, {{2, 3}, {1, 3}}}) {
        const AngleVector av = principal_angles(reduced_delta(a, jm), reduced_delta(b, jm));
        for (size_t k = 0; k < av.size(); ++k)
            angles = angles && std::abs(av[k] - M_PI / 3.0) < 1e-10;
    }
    s.check("jacobi/reduced-angles-pi-3", angles);

    Rng rng(s.seed, 303);
    bool isometry = true;
    for (int t = 0; t < 20; ++t) {
        const JacobiMasses rm(rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0),
                              rng.log_uniform(0.1, 10.0));
        const Metric g = rm.system().metric();
        Vector x(6);
        for (int i = 0; i < 6; ++i) x[i] = rng.normal();
        // remove the mass-weighted translation part
        for (int axis = 0; axis < 2; ++axis) {
            const double cm = (rm.m1 * x[0 + axis] + rm.m2 * x[2 + axis] + rm.m3 * x[4 + axis]) /
                              (rm.m1 + rm.m2 + rm.m3);
            x[0 + axis] -= cm;
            x[2 + axis] -= cm;
            x[4 + axis] -= cm;
        }
        const Vector y = jacobi_matrix(rm) * x;
        isometry = isometry && std::abs(y.norm() - std::sqrt(metric_inner(x, x, g))) < 1e-10;
        isometry = isometry &&
                   verify_principal_vector_image(PairIndex(1, 2), PairIndex(2, 3), rm).pass;
    }
    s.check("jacobi/isometry-and-principal-images", isometry);
}

void verify_billiard_sim(Suite& s) {
    const JacobiMasses jm(1, 1, 1);
    const SubspaceArrangement arr = reduced_arrangement(jm);
    SearchParams params;
    params.trials = std::max<long>(s.trials, 2000);
    params.seed = s.seed;
    params.watch_pattern = {"(12)", "(23)", "(12)", "(13)"};
    const SearchResult res = max_collision_search(arr, params, reduced_slice_sampler());
    s.check("billiard-sim/equal-mass-max-3", res.max_count == 3);
    s.check("billiard-sim/no-watch-pattern", res.watch_hits == 0);

    Rng rng(s.seed, 404);
    bool bounded = true;
    for (int t = 0; t < 10; ++t) {
        const double m1 = rng.log_uniform(0.2, 5.0);
        const double m2 = rng.log_uniform(0.2, 5.0);
        const double m3 = rng.log_uniform(0.2, 5.0);
        const JacobiMasses rm(m1, m2, m3);
        SearchParams p;
        p.trials = std::max<long>(s.trials / 10, 500);
        p.seed = s.seed + static_cast<uint64_t>(t) + 1;
        p.max_events = 24;
        const SearchResult r =
            max_collision_search(reduced_arrangement(rm), p, reduced_slice_sampler());
        bounded = bounded && r.max_count <= three_mass_system_bound(m1, m2, m3);
    }
    s.check("billiard-sim/random-mass-bounded", bounded);
}

void verify_bounds(Suite& s) {
    bool lines = true;
    for (int n = 1; n <= 8; ++n) {
        lines = lines && hyperplane_line_bound(n, 200, s.seed).consistent;
        for (int d = 1; d <= n; ++d) lines = lines && codim_line_bound(n, d, 200, s.seed).consistent;
    }
    s.check("bounds/line-intersection-witnesses", lines);

    const MassRatioGrid grid = mass_ratio_grid(2.0, 2.0, 0.25);
    bool ok = true;
    for (int ia = 0; ia < grid.na && ok; ++ia)
        for (int ib = 0; ib < grid.nb && ok; ++ib)
            ok = grid.cell(ia, ib) >= 3 && grid.cell(ia, ib) == grid.cell(ib, ia) &&
                 grid.flag(ia, ib) == 0;
    s.check("bounds/grid-symmetry", ok);
}

void verify_spherical(Suite& s) {
    const FaceCount f322 = count_faces(tiling_322(), 200000, s.seed);
    const FaceCount f332 = count_faces(tiling_332(), 200000, s.seed);
    s.check("spherical/tiling-322-faces-12", f322.consistent && f322.faces_euler == 12);
    s.check("spherical/tiling-332-faces-24", f332.consistent && f332.faces_euler == 24);

    const long lt = std::max<long>(s.trials, 2000);
    const BoundReport l322 = line_intersection_count(tiling_322(), lt, s.seed);
    const BoundReport l332 = line_intersection_count(tiling_332(), lt, s.seed);
    const BoundReport l3 = three_planes_common_line_count(lt, s.seed);
    s.check("spherical/line-counts",
            l322.consistent && *l322.empirical_max == 4 && l332.consistent &&
                *l332.empirical_max == 6 && l3.consistent && *l3.empirical_max == 3);

    s.check("spherical/cone-impossibility",
            cone_feasibility({M_PI / 3, M_PI / 3, M_PI / 3}) == ConeVerdict::infeasible &&
                cone_feasibility({M_PI / 3, M_PI / 2, M_PI / 2}) == ConeVerdict::feasible);

    bool dihedral = true;
    const auto planes = tiling_332().normals;
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            const double expected =
                std::acos(std::clamp(std::abs(planes[i].dot(planes[j])), 0.0, 1.0));
            dihedral = dihedral &&
                       std::abs(dihedral_angle_via_tangents(planes[i], planes[j]) - expected) <
                           1e-10;
        }
    s.check("spherical/dihedral-tangent-agreement", dihedral);
}

int cmd_verify_all(const std::string& only, long trials, uint64_t seed) {
    Suite s{only, trials, seed};
    json config = {{"command", "verify-all"}, {"only", only}, {"trials", trials}, {"seed", seed}};
    std::cout << "# config: " << config.dump() << "\n";
    if (s.wants("metric-linalg")) verify_metric_linalg(s);
    if (s.wants("collision-subspaces")) verify_collision_subspaces(s);
    if (s.wants("jacobi")) verify_jacobi(s);
    if (s.wants("billiard-sim")) verify_billiard_sim(s);
    if (s.wants("bounds")) verify_bounds(s);
    if (s.wants("spherical")) verify_spherical(s);
    return s.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collision subspace angles, bounds, and billiard simulation"};
    app.require_subcommand(1);

    int n = 3, m = 2, max_events = 10;
    std::string masses = "1,1,1", pairs = "12,23", output;
    long trials = 100000;
    uint64_t seed = 0;
    double step = 0.05, alpha_hi = 10.0, beta_hi = 10.0;
    std::string only;

    auto* angles = app.add_subcommand("angles", "verify the two-subspace angle pattern");
    angles->add_option("--n", n, "number of particles")->check(CLI::Range(2, 32));
    angles->add_option("--m", m, "spatial dimension")->check(CLI::Range(1, 8));
    angles->add_option("--masses", masses, "comma-separated masses");
    angles->add_option("--pairs", pairs, "two collision pairs, e.g. 12,23");
    angles->add_option("--output", output, "output file (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo search in the reduced arrangement");
    simulate->add_option("--masses", masses, "three comma-separated masses");
    simulate->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "base RNG seed");
    simulate->add_option("--max-events", max_events, "per-trajectory event cap")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--output", output, "output file (default stdout)");

    auto* grid = app.add_subcommand("grid", "mass-ratio bound table as CSV");
    grid->add_option("--step", step, "grid step")->check(CLI::PositiveNumber);
    grid->add_option("--alpha-hi", alpha_hi, "alpha upper limit")->check(CLI::PositiveNumber);
    grid->add_option("--beta-hi", beta_hi, "beta upper limit")->check(CLI::PositiveNumber);
    grid->add_option("--output", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify-all", "run every module's invariant suite");
    verify->add_option("--only", only, "restrict to one module");
    verify->add_option("--trials", trials, "Monte-Carlo trial budget")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "base RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*angles) return cmd_angles(n, m, masses, pairs, output);
        if (*simulate) return cmd_simulate(masses, trials, seed, max_events, output);
        if (*grid) return cmd_grid(step, alpha_hi, beta_hi, output);
        return cmd_verify_all(only, trials, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
