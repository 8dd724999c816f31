#include "nbilliard/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "nbilliard/rng.hpp"

namespace nbilliard {

long wedge_bound(double alpha) {
    if (!(alpha > 0.0 && alpha <= M_PI))
        throw std::invalid_argument("wedge_bound: need 0 < alpha <= pi");
    const double r = M_PI / alpha;
    const double nearest = std::round(r);
    // pi/alpha lands exactly on an integer for the dihedral angles pi/q;
    // guard the ceiling against one-ulp overshoot
    if (std::abs(r - nearest) < 1e-9) return static_cast<long>(nearest);
    return static_cast<long>(std::ceil(r));
}

long three_mass_bound(double m_i, double m_j, double m_k) {
    return wedge_bound(closed_form_angle(m_i, m_j, m_k));
}

long three_mass_system_bound(double m1, double m2, double m3) {
    return std::max({three_mass_bound(m2, m1, m3), three_mass_bound(m1, m2, m3),
                     three_mass_bound(m1, m3, m2)});
}

MassRatioGrid mass_ratio_grid(double alpha_hi, double beta_hi, double step) {
    if (!(step > 0.0 && alpha_hi >= step && beta_hi >= step))
        throw std::invalid_argument("mass_ratio_grid: need 0 < step <= alpha_hi, beta_hi");
    MassRatioGrid grid;
    grid.alpha_hi = alpha_hi;
    grid.beta_hi = beta_hi;
    grid.step = step;
    grid.na = static_cast<int>(std::floor(alpha_hi / step + 1e-9));
    grid.nb = static_cast<int>(std::floor(beta_hi / step + 1e-9));
    grid.cells.resize(static_cast<size_t>(grid.na) * grid.nb);
    grid.flags.resize(grid.cells.size());
    for (int ia = 0; ia < grid.na; ++ia)
        for (int ib = 0; ib < grid.nb; ++ib) {
            const double angle = closed_form_angle(grid.alpha(ia), 1.0, grid.beta(ib));
            const size_t idx = static_cast<size_t>(ia) * grid.nb + ib;
            grid.cells[idx] = wedge_bound(angle);
            grid.flags[idx] = angle >= M_PI / 2.0 - 1e-12 ? 1 : 0;
        }
    return grid;
}

namespace {

constexpr double kTimeTol = 1e-9;
constexpr double kZeroTol = 1e-12;

/// Distinct times at which some coordinate of a(t) = a + t*u changes sign.
/// Returns -1 when the line is degenerate (a crossing too close to a wall
/// intersection, or a coordinate identically near zero).
long count_hyperplane_crossings(const Vector& a, const Vector& u) {
    std::vector<double> times;
    for (int i = 0; i < a.size(); ++i) {
        if (std::abs(u[i]) < kZeroTol) {
            if (std::abs(a[i]) < kZeroTol) return -1;  // lies inside a wall
            continue;
        }
        times.push_back(-a[i] / u[i]);
    }
    std::sort(times.begin(), times.end());
    for (size_t k = 1; k < times.size(); ++k)
        if (times[k] - times[k - 1] < kTimeTol) return -1;
    return static_cast<long>(times.size());
}

/// Events along a(t) = a + t*u where exactly d coordinates vanish at once.
long count_codim_events(const Vector& a, const Vector& u, int d) {
    long always_zero = 0;
    std::vector<double> times;
    for (int i = 0; i < a.size(); ++i) {
        if (std::abs(u[i]) < kZeroTol) {
            if (std::abs(a[i]) < kZeroTol) ++always_zero;
            continue;
        }
        times.push_back(-a[i] / u[i]);
    }
    std::sort(times.begin(), times.end());
    long events = 0;
    for (size_t k = 0; k < times.size();) {
        size_t e = k + 1;
        while (e < times.size() && times[e] - times[e - 1] < kTimeTol) ++e;
        if (static_cast<long>(e - k) + always_zero == d) ++events;
        k = e;
    }
    return events;
}

}  // namespace

BoundReport hyperplane_line_bound(int n, long trials, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("hyperplane_line_bound: need n >= 1");
    if (trials < 1) throw std::invalid_argument("hyperplane_line_bound: trials must be >= 1");

    BoundReport rep;
    rep.name = "hyperplane-line";
    rep.inputs = {{"n", static_cast<double>(n)},
                  {"trials", static_cast<double>(trials)},
                  {"seed", static_cast<double>(seed)}};
    rep.predicted = static_cast<double>(n);

    long best = 0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<uint64_t>(t));
        Vector a(n), u(n);
        for (int i = 0; i < n; ++i) a[i] = rng.normal();
        for (int i = 0; i < n; ++i) u[i] = rng.normal();
        const long c = count_hyperplane_crossings(a, u);
        best = std::max(best, c);
    }
    rep.empirical_max = best;

    // explicit maximizer: x_i(t) = i - t crosses wall i at t = i
    Vector wa(n), wu(n);
    for (int i = 0; i < n; ++i) {
        wa[i] = i + 1.0;
        wu[i] = -1.0;
    }
    rep.witness_count = count_hyperplane_crossings(wa, wu);
    rep.consistent = *rep.empirical_max <= static_cast<long>(rep.predicted) &&
                     *rep.witness_count == static_cast<long>(rep.predicted);
    return rep;
}

BoundReport codim_line_bound(int n, int d, long trials, uint64_t seed) {
    if (d < 1 || d > n) throw std::invalid_argument("codim_line_bound: need 1 <= d <= n");
    if (trials < 1) throw std::invalid_argument("codim_line_bound: trials must be >= 1");

    BoundReport rep;
    rep.name = "codim-line";
    rep.inputs = {{"n", static_cast<double>(n)},
                  {"d", static_cast<double>(d)},
                  {"trials", static_cast<double>(trials)},
                  {"seed", static_cast<double>(seed)}};
    rep.predicted = static_cast<double>(n - d + 1);

    long best = 0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<uint64_t>(t));
        Vector a = Vector::Zero(n), u = Vector::Zero(n);
        // alternate fully generic lines (no events at all when d > 1) with
        // lines confined to the d-event stratum: d-1 coordinates pinned to
        // zero, the rest generic
        const int pinned = (t % 2 == 0) ? 0 : d - 1;
        for (int i = pinned; i < n; ++i) a[i] = rng.normal();
        for (int i = pinned; i < n; ++i) u[i] = rng.normal();
        best = std::max(best, count_codim_events(a, u, d));
    }
    rep.empirical_max = best;

    // maximizer from the proof: first d-1 coordinates identically zero,
    // the remaining ones vanishing one at a time
    Vector wa = Vector::Zero(n), wu = Vector::Zero(n);
    for (int i = d - 1; i < n; ++i) {
        wa[i] = i + 1.0;
        wu[i] = -1.0;
    }
    rep.witness_count = count_codim_events(wa, wu, d);
    rep.consistent = *rep.empirical_max <= static_cast<long>(rep.predicted) &&
                     *rep.witness_count == static_cast<long>(rep.predicted);
    return rep;
}

std::vector<BoundReport> hard_rod_bounds(int n, const MassVector& masses) {
    if (n < 2) throw std::invalid_argument("hard_rod_bounds: need n >= 2");
    if (masses.size() != n)
        throw std::invalid_argument("hard_rod_bounds: masses length must equal n");

    bool equal = true;
    bool geometric = true;   // m_i^2 >= m_{i-1} * m_{i+1} at interior rods
    bool arithmetic = true;  // m_i >= (m_{i-1} + m_{i+1}) / 2 at interior rods
    double m_min = masses[0], m_max = masses[0];
    for (int i = 0; i < n; ++i) {
        equal = equal && masses[i] == masses[0];
        m_min = std::min(m_min, masses[i]);
        m_max = std::max(m_max, masses[i]);
    }
    for (int i = 1; i + 1 < n; ++i) {
        geometric = geometric && masses[i] * masses[i] >= masses[i - 1] * masses[i + 1];
        arithmetic = arithmetic && 2.0 * masses[i] >= masses[i - 1] + masses[i + 1];
    }

    const double binomial = static_cast<double>(n) * (n - 1) / 2.0;
    std::map<std::string, double> inputs = {{"n", static_cast<double>(n)},
                                            {"m_min", m_min},
                                            {"m_max", m_max}};

    std::vector<BoundReport> out;
    for (const auto& [name, ok] :
         {std::pair<const char*, bool>{"binomial-equal-mass", equal},
          {"binomial-geometric-mean", geometric},
          {"binomial-arithmetic-mean", arithmetic}}) {
        BoundReport r;
        r.name = name;
        r.inputs = inputs;
        r.predicted = binomial;
        r.applicable = ok;
        out.push_back(std::move(r));
    }

    BoundReport gal;
    gal.name = "exponential-universal";
    gal.inputs = inputs;
    gal.applicable = true;
    if (n == 2) {
        gal.predicted = 2.0;
    } else {
        const double base = 8.0 * n * n * (n - 2) * (m_max / m_min);
        gal.predicted = 2.0 * std::pow(base, n - 2);
        gal.overflow = !std::isfinite(gal.predicted);
    }
    out.push_back(std::move(gal));
    return out;
}

}  // namespace nbilliard
