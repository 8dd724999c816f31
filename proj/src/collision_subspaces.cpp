#include "nbilliard/collision_subspaces.hpp"

#include <algorithm>
#include <cmath>

namespace nbilliard {

Subspace build_delta(const BilliardSystem& sys, const PairIndex& pair) {
    const int n = sys.n_particles, m = sys.spatial_dim;
    if (pair.j > n) throw std::invalid_argument("build_delta: pair index out of range");

    Subspace s;
    s.ambient_dim = sys.ambient_dim();
    s.metric = sys.metric();
    s.basis = Matrix::Zero(s.ambient_dim, m * (n - 1));

    int col = 0;
    const double merged = 1.0 / std::sqrt(sys.masses[pair.i - 1] + sys.masses[pair.j - 1]);
    for (int a = 0; a < m; ++a) {
        // location index of the merged direction is the smaller pair index
        s.basis(sys.coord(pair.i, a), col) = merged;
        s.basis(sys.coord(pair.j, a), col) = merged;
        ++col;
        for (int k = 1; k <= n; ++k) {
            if (k == pair.i || k == pair.j) continue;
            s.basis(sys.coord(k, a), col) = 1.0 / std::sqrt(sys.masses[k - 1]);
            ++col;
        }
    }
    return s;
}

double closed_form_angle(double m_i, double m_j, double m_k) {
    if (!(m_i > 0.0 && m_j > 0.0 && m_k > 0.0))
        throw std::invalid_argument("closed_form_angle: masses must be positive");
    double c = std::sqrt(m_i * m_k / ((m_i + m_j) * (m_j + m_k)));
    c = std::min(c, 1.0);
    return std::acos(c);
}

namespace {

// -1 if the pairs are disjoint, else the shared particle index
int shared_index(const PairIndex& a, const PairIndex& b) {
    for (int x : {a.i, a.j})
        for (int y : {b.i, b.j})
            if (x == y) return x;
    return -1;
}

int other_index(const PairIndex& p, int shared) { return p.i == shared ? p.j : p.i; }

}  // namespace

AngleTheoremReport verify_angle_theorem(const BilliardSystem& sys, const PairIndex& a,
                                        const PairIndex& b) {
    if (a == b) throw std::invalid_argument("verify_angle_theorem: pairs must differ");
    const int d = sys.spatial_dim, n = sys.n_particles;

    double nonzero = M_PI / 2.0;
    const int s = shared_index(a, b);
    if (s > 0) {
        nonzero = closed_form_angle(sys.masses[other_index(a, s) - 1], sys.masses[s - 1],
                                    sys.masses[other_index(b, s) - 1]);
    }

    AngleTheoremReport rep;
    rep.expected.assign(static_cast<size_t>(d * (n - 2)), 0.0);
    rep.expected.insert(rep.expected.end(), static_cast<size_t>(d), nonzero);
    rep.expected_zero_count = d * (n - 2);

    const AngleVector av = principal_angles(build_delta(sys, a), build_delta(sys, b));
    rep.computed = av.angles;
    for (double ang : rep.computed)
        if (ang < policy().zero_angle_tol) ++rep.zero_count;

    if (rep.computed.size() == rep.expected.size()) {
        for (size_t k = 0; k < rep.computed.size(); ++k)
            rep.max_discrepancy =
                std::max(rep.max_discrepancy, std::abs(rep.computed[k] - rep.expected[k]));
        rep.pass = rep.max_discrepancy < 1e-9 && rep.zero_count == rep.expected_zero_count;
    }
    return rep;
}

DecompositionReport appendix_decomposition(const BilliardSystem& sys, const PairIndex& a,
                                           const PairIndex& b) {
    if (a == b) throw std::invalid_argument("appendix_decomposition: pairs must differ");
    const int d = sys.spatial_dim;
    const Metric g = sys.metric();

    const Subspace da = build_delta(sys, a);
    const Subspace db = build_delta(sys, b);
    const Subspace comp = orthogonal_complement(subspace_intersection(da, db));
    const Subspace x = subspace_intersection(comp, da);
    const Subspace y = subspace_intersection(comp, db);

    // explicit spanning directions in the particle factor
    const int s = shared_index(a, b);
    Vector xdir = Vector::Zero(sys.n_particles);
    Vector ydir = Vector::Zero(sys.n_particles);
    double expected;
    if (s < 0) {
        // disjoint: X gets the (k,l) difference, Y the (i,j) one
        xdir[b.i - 1] = sys.masses[b.j - 1];
        xdir[b.j - 1] = -sys.masses[b.i - 1];
        ydir[a.i - 1] = sys.masses[a.j - 1];
        ydir[a.j - 1] = -sys.masses[a.i - 1];
        expected = M_PI / 2.0;
    } else {
        const int i = other_index(a, s), k = other_index(b, s);
        const double mi = sys.masses[i - 1], ms = sys.masses[s - 1], mk = sys.masses[k - 1];
        xdir[i - 1] = mk;
        xdir[s - 1] = mk;
        xdir[k - 1] = -(mi + ms);
        ydir[s - 1] = mi;
        ydir[k - 1] = mi;
        ydir[i - 1] = -(ms + mk);
        expected = closed_form_angle(mi, ms, mk);
    }

    auto tensor_span = [&](const Vector& dir) {
        Matrix cols = Matrix::Zero(sys.ambient_dim(), d);
        for (int axis = 0; axis < d; ++axis)
            for (int k = 1; k <= sys.n_particles; ++k)
                cols(sys.coord(k, axis), axis) = dir[k - 1];
        return orthonormalize(cols, g);
    };
    const Subspace x_explicit = tensor_span(xdir);
    const Subspace y_explicit = tensor_span(ydir);

    DecompositionReport rep;
    rep.dim_x = x.dim();
    rep.dim_y = y.dim();
    rep.expected_angle = expected;
    auto max_angle = [](const AngleVector& av) {
        double m = 0.0;
        for (double v : av.angles) m = std::max(m, v);
        return m;
    };
    rep.span_discrepancy_x = max_angle(principal_angles(x, x_explicit));
    rep.span_discrepancy_y = max_angle(principal_angles(y, y_explicit));
    rep.cross_angles = principal_angles(x, y).angles;

    rep.max_discrepancy = std::max(rep.span_discrepancy_x, rep.span_discrepancy_y);
    for (double ang : rep.cross_angles)
        rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(ang - expected));
    rep.pass = rep.dim_x == d && rep.dim_y == d &&
               rep.cross_angles.size() == static_cast<size_t>(d) && rep.max_discrepancy < 1e-8;
    return rep;
}

}  // namespace nbilliard
