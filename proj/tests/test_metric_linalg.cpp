#include <doctest.h>

#include <cmath>

#include "nbilliard/metric_linalg.hpp"
#include "nbilliard/rng.hpp"

using namespace nbilliard;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

Subspace span(std::vector<Vector> cols, const Metric& g) { return orthonormalize(cols, g); }

Subspace random_subspace(Rng& rng, int ambient, int dim) {
    Matrix cols(ambient, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < ambient; ++r) cols(r, c) = rng.normal();
    return orthonormalize(cols, Metric::euclidean(ambient));
}

}  // namespace

TEST_CASE("metric_inner basics") {
    const Metric g = Metric::mass(MassVector({2.5, 4.0}), 1);
    Vector e1 = Vector::Zero(2);
    e1[0] = 1.0;
    CHECK(metric_inner(e1, e1, g) == doctest::Approx(2.5).epsilon(1e-14));

    const Metric eu = Metric::euclidean(2);
    CHECK(metric_inner(vec2(1, 0), vec2(0, 1), eu) == 0.0);

    const Vector unit = e1 / std::sqrt(2.5);
    CHECK(metric_inner(unit, unit, g) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(metric_inner(e1, Vector::Zero(3), g), std::invalid_argument);
}

TEST_CASE("orthonormalize") {
    const Metric eu = Metric::euclidean(2);

    SUBCASE("independent pair spans the plane") {
        const Subspace s = span({vec2(1, 0), vec2(1, 1)}, eu);
        CHECK(s.dim() == 2);
        CHECK(s.gram_defect() < 1e-12);
    }

    SUBCASE("dependent pair collapses") {
        Vector a(3), b(3);
        a << 1, 1, 0;
        b << 2, 2, 0;
        CHECK(span({a, b}, Metric::euclidean(3)).dim() == 1);
    }

    SUBCASE("merged direction under the mass metric") {
        const double m1 = 3.0, m2 = 5.0;
        const Metric g = Metric::mass(MassVector({m1, m2}), 1);
        const Subspace s = span({vec2(1, 1)}, g);
        REQUIRE(s.dim() == 1);
        const double expected = 1.0 / std::sqrt(m1 + m2);
        CHECK(std::abs(std::abs(s.basis(0, 0)) - expected) < 1e-14);
        CHECK(std::abs(s.basis(0, 0) - s.basis(1, 0)) < 1e-14);
    }

    SUBCASE("all-zero input is a dim-0 subspace") {
        CHECK(span({vec2(0, 0)}, eu).dim() == 0);
    }
}

TEST_CASE("principal_angles on simple pairs") {
    const Metric eu = Metric::euclidean(2);
    const Subspace x = span({vec2(1, 0)}, eu);
    const Subspace y = span({vec2(0, 1)}, eu);

    const AngleVector perp = principal_angles(x, y);
    REQUIRE(perp.size() == 1);
    CHECK(perp[0] == doctest::Approx(M_PI / 2).epsilon(1e-12));

    Rng rng(5);
    const Subspace f = random_subspace(rng, 7, 3);
    const AngleVector self = principal_angles(f, f);
    REQUIRE(self.size() == 3);
    for (size_t k = 0; k < self.size(); ++k) CHECK(self[k] < 1e-12);
}

TEST_CASE("principal_angles properties over random pairs") {
    Rng rng(99);
    for (int t = 0; t < 40; ++t) {
        const int n = 4 + static_cast<int>(rng.next_u64() % 9);  // ambient <= 12
        const int p = 1 + static_cast<int>(rng.next_u64() % 6);
        const int q = 1 + static_cast<int>(rng.next_u64() % 6);
        if (p > n || q > n) continue;
        const Subspace f = random_subspace(rng, n, p);
        const Subspace g = random_subspace(rng, n, q);

        const AngleVector fg = principal_angles(f, g);
        REQUIRE(fg.size() == static_cast<size_t>(std::min(f.dim(), g.dim())));
        for (size_t k = 0; k < fg.size(); ++k) {
            CHECK(fg[k] >= 0.0);
            CHECK(fg[k] <= M_PI / 2 + 1e-12);
            if (k > 0) CHECK(fg[k] >= fg[k - 1] - 1e-12);
        }

        const AngleVector gf = principal_angles(g, f);
        for (size_t k = 0; k < fg.size(); ++k) CHECK(std::abs(fg[k] - gf[k]) < 1e-10);

        CHECK(subspace_intersection(f, g).dim() ==
              static_cast<int>(std::count_if(fg.angles.begin(), fg.angles.end(),
                                             [](double a) { return a < 1e-8; })));
    }
}

TEST_CASE("principal vectors realize the angles") {
    Rng rng(31);
    const Subspace f = random_subspace(rng, 6, 2);
    const Subspace g = random_subspace(rng, 6, 3);
    const AngleVector av = principal_angles(f, g);
    for (size_t k = 0; k < av.size(); ++k) {
        const Vector u = av.principal_left.col(static_cast<Eigen::Index>(k));
        const Vector v = av.principal_right.col(static_cast<Eigen::Index>(k));
        CHECK(std::abs(u.norm() - 1.0) < 1e-10);
        CHECK(std::abs(v.norm() - 1.0) < 1e-10);
        CHECK(f.distance(u) < 1e-10);
        CHECK(g.distance(v) < 1e-10);
        CHECK(std::abs(std::abs(u.dot(v)) - std::cos(av[k])) < 1e-10);
    }
}

TEST_CASE("oracle agrees with the SVD route") {
    const Metric eu = Metric::euclidean(2);

    SUBCASE("two lines 30 degrees apart") {
        const Subspace a = span({vec2(1, 0)}, eu);
        const Subspace b = span({vec2(std::cos(M_PI / 6), std::sin(M_PI / 6))}, eu);
        const AngleVector av = principal_angles_oracle(a, b, 10000);
        REQUIRE(av.size() == 1);
        CHECK(std::abs(av[0] - M_PI / 6) < 1e-3);
    }

    SUBCASE("identical planes") {
        Rng rng(8);
        const Subspace f = random_subspace(rng, 4, 2);
        const AngleVector av = principal_angles_oracle(f, f, 400);
        REQUIRE(av.size() == 2);
        for (size_t k = 0; k < av.size(); ++k) CHECK(av[k] < 2 * M_PI / 400);
    }

    SUBCASE("random pairs within the resolution bound") {
        Rng rng(77);
        for (int t = 0; t < 6; ++t) {
            const Subspace f = random_subspace(rng, 5, 2);
            const Subspace g = random_subspace(rng, 5, 2);
            const int res = 300;
            const AngleVector svd = principal_angles(f, g);
            const AngleVector gr = principal_angles_oracle(f, g, res);
            REQUIRE(svd.size() == gr.size());
            for (size_t k = 0; k < svd.size(); ++k)
                CHECK(std::abs(svd[k] - gr[k]) < 2 * M_PI / res);
        }
    }

    SUBCASE("oversized dims are rejected") {
        Rng rng(3);
        const Subspace f = random_subspace(rng, 8, 4);
        CHECK_THROWS_AS(principal_angles_oracle(f, f, 10), std::invalid_argument);
    }
}

TEST_CASE("subspace_intersection") {
    const Metric e3 = Metric::euclidean(3);
    Vector a(3), b(3), c(3), d(3);
    a << 1, 0, 0;
    b << 0, 1, 0;
    c << 0, 0, 1;
    d << 1, 1, 1;
    const Subspace p1 = span({a, b}, e3);
    const Subspace p2 = span({b + c, d}, e3);
    CHECK(subspace_intersection(p1, p2).dim() == 1);

    const Metric e2 = Metric::euclidean(2);
    CHECK(subspace_intersection(span({vec2(1, 0)}, e2), span({vec2(0, 1)}, e2)).dim() == 0);
}

TEST_CASE("orthogonal_complement") {
    const Metric e2 = Metric::euclidean(2);
    const Subspace diag = span({vec2(1, 1)}, e2);
    const Subspace comp = orthogonal_complement(diag);
    REQUIRE(comp.dim() == 1);
    CHECK(std::abs(std::abs(comp.basis(0, 0)) - 1 / std::sqrt(2)) < 1e-12);
    CHECK(std::abs(comp.basis(0, 0) + comp.basis(1, 0)) < 1e-12);

    SUBCASE("mass-metric complement of the merged direction") {
        const double m1 = 2.0, m2 = 7.0;
        const Metric g = Metric::mass(MassVector({m1, m2}), 1);
        const Subspace merged = span({vec2(1, 1)}, g);
        const Subspace mc = orthogonal_complement(merged);
        REQUIRE(mc.dim() == 1);
        // direction (m2, -m1) normalized by sqrt(m1 m2 (m1+m2))
        const double scale = std::sqrt(m1 * m2 * (m1 + m2));
        const Vector expected = vec2(m2 / scale, -m1 / scale);
        CHECK(std::min((mc.basis.col(0) - expected).norm(),
                       (mc.basis.col(0) + expected).norm()) < 1e-12);
        CHECK(std::abs(metric_inner(mc.basis.col(0), merged.basis.col(0), g)) < 1e-12);
    }

    SUBCASE("complement involution re-spans the input") {
        Rng rng(17);
        for (int t = 0; t < 10; ++t) {
            const Subspace f = random_subspace(rng, 6, 1 + static_cast<int>(rng.next_u64() % 5));
            const Subspace ff = orthogonal_complement(orthogonal_complement(f));
            REQUIRE(ff.dim() == f.dim());
            const AngleVector av = principal_angles(f, ff);
            for (size_t k = 0; k < av.size(); ++k) CHECK(av[k] < 1e-9);
        }
    }

    SUBCASE("complement of the full space is empty") {
        const Subspace full = span({vec2(1, 0), vec2(0, 1)}, e2);
        CHECK(orthogonal_complement(full).dim() == 0);
    }
}

TEST_CASE("codimension-1 angle equals the normal-vector angle") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 6);
        const Subspace f = random_subspace(rng, n, n - 1);
        const Subspace g = random_subspace(rng, n, n - 1);
        const Vector nf = orthogonal_complement(f).basis.col(0);
        const Vector ng = orthogonal_complement(g).basis.col(0);
        const double expected = std::acos(std::clamp(std::abs(nf.dot(ng)), 0.0, 1.0));
        const AngleVector av = principal_angles(f, g);
        CHECK(std::abs(av.angles.back() - expected) < 1e-9);
    }
}

TEST_CASE("angle duality identities") {
    SUBCASE("worked pair with angles [pi/3, pi/2] in R^6") {
        const Metric e6 = Metric::euclidean(6);
        Matrix lb = Matrix::Zero(6, 2), mb = Matrix::Zero(6, 2);
        lb(0, 0) = 1;
        lb(1, 1) = 1;
        mb(0, 0) = std::cos(M_PI / 3);
        mb(2, 0) = std::sin(M_PI / 3);
        mb(3, 1) = 1;
        const Subspace l = orthonormalize(lb, e6);
        const Subspace m = orthonormalize(mb, e6);

        const AngleVector lm = principal_angles(l, m);
        REQUIRE(lm.size() == 2);
        CHECK(std::abs(lm[0] - M_PI / 3) < 1e-10);
        CHECK(std::abs(lm[1] - M_PI / 2) < 1e-10);

        const AngleVector comp =
            principal_angles(orthogonal_complement(l), orthogonal_complement(m));
        const std::vector<double> expected_comp{0.0, 0.0, M_PI / 3, M_PI / 2};
        REQUIRE(comp.size() == expected_comp.size());
        for (size_t k = 0; k < comp.size(); ++k)
            CHECK(std::abs(comp[k] - expected_comp[k]) < 1e-10);

        const AngleVector mixed = principal_angles(l, orthogonal_complement(m));
        REQUIRE(mixed.size() == 2);
        CHECK(mixed[0] < 1e-10);
        CHECK(std::abs(mixed[1] - M_PI / 6) < 1e-10);

        CHECK(check_angle_duality(l, m).pass);
    }

    SUBCASE("random pairs pass all four identities") {
        Rng rng(404);
        for (int t = 0; t < 30; ++t) {
            const int n = 3 + static_cast<int>(rng.next_u64() % 10);
            const int p = 1 + static_cast<int>(rng.next_u64() % n);
            const int q = 1 + static_cast<int>(rng.next_u64() % n);
            const DualityReport rep =
                check_angle_duality(random_subspace(rng, n, p), random_subspace(rng, n, q));
            CHECK(rep.pass);
        }
    }

    SUBCASE("identical subspaces have zero discrepancy") {
        Rng rng(2);
        const Subspace f = random_subspace(rng, 5, 2);
        const DualityReport rep = check_angle_duality(f, f);
        CHECK(rep.pass);
        CHECK(rep.max_discrepancy < 1e-9);
    }
}
