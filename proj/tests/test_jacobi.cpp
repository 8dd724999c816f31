#include <doctest.h>

#include <cmath>

#include "nbilliard/jacobi.hpp"
#include "nbilliard/rng.hpp"

using namespace nbilliard;

namespace {

Eigen::Vector2d pt(double x, double y = 0.0) { return {x, y}; }

}  // namespace

TEST_CASE("jacobi_project on the listed configurations") {
    const JacobiMasses jm(1, 1, 1);
    const double r6 = std::sqrt(6.0);

    SUBCASE("first listed image: (0, 1)") {
        const ReducedConfig rc = jacobi_project({pt(-1 / r6), pt(-1 / r6), pt(2 / r6)}, jm);
        CHECK(rc.v.norm() < 1e-12);
        CHECK((rc.w - pt(1, 0)).norm() < 1e-12);
    }

    SUBCASE("second listed image: (-sqrt(3)/2, 1/2)") {
        const ReducedConfig rc = jacobi_project({pt(-2 / r6), pt(1 / r6), pt(1 / r6)}, jm);
        CHECK((rc.v - pt(-std::sqrt(3.0) / 2, 0)).norm() < 1e-12);
        CHECK((rc.w - pt(0.5, 0)).norm() < 1e-12);
    }

    SUBCASE("triple collisions map to the origin") {
        const ReducedConfig rc = jacobi_project({pt(3, -2), pt(3, -2), pt(3, -2)}, jm);
        CHECK(rc.flat().norm() < 1e-12);
    }

    SUBCASE("translation invariance") {
        const JacobiMasses rm(1.5, 0.3, 4.0);
        const std::array<Eigen::Vector2d, 3> q{pt(0.2, 1.0), pt(-1.1, 0.4), pt(2.2, -0.7)};
        std::array<Eigen::Vector2d, 3> shifted = q;
        for (auto& p : shifted) p += pt(5, 7);
        CHECK((jacobi_project(q, rm).flat() - jacobi_project(shifted, rm).flat()).norm() < 1e-12);
    }

    SUBCASE("linearity") {
        const JacobiMasses rm(2, 1, 1);
        Rng rng(6);
        std::array<Eigen::Vector2d, 3> q, r, mix;
        for (int i = 0; i < 3; ++i) {
            q[i] = pt(rng.normal(), rng.normal());
            r[i] = pt(rng.normal(), rng.normal());
            mix[i] = 2.0 * q[i] - 0.5 * r[i];
        }
        const Vector lhs = jacobi_project(mix, rm).flat();
        const Vector rhs = 2.0 * jacobi_project(q, rm).flat() - 0.5 * jacobi_project(r, rm).flat();
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("reduced_delta planes for unit masses") {
    const JacobiMasses jm(1, 1, 1);

    SUBCASE("(1,2): the v = 0 plane") {
        const Subspace d = reduced_delta(PairIndex(1, 2), jm);
        REQUIRE(d.dim() == 2);
        Vector a(4), b(4);
        a << 0, 0, 1, 0;
        b << 0, 0, 0, 1;
        CHECK(d.distance(a) < 1e-12);
        CHECK(d.distance(b) < 1e-12);
    }

    SUBCASE("(2,3): the w = -v/sqrt(3) plane") {
        const Subspace d = reduced_delta(PairIndex(2, 3), jm);
        Vector a(4), b(4);
        a << std::sqrt(3.0) / 2, 0, -0.5, 0;
        b << 0, std::sqrt(3.0) / 2, 0, -0.5;
        CHECK(d.distance(a) < 1e-12);
        CHECK(d.distance(b) < 1e-12);
    }

    SUBCASE("all three reduced angle vectors are [pi/3, pi/3]") {
        for (const auto& [a, b] : std::vector<std::pair<PairIndex, PairIndex>>{
                 {{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}, {{2, 3}, {1, 3}}}) {
            const AngleVector av = principal_angles(reduced_delta(a, jm), reduced_delta(b, jm));
            REQUIRE(av.size() == 2);
            CHECK(std::abs(av[0] - M_PI / 3) < 1e-10);
            CHECK(std::abs(av[1] - M_PI / 3) < 1e-10);
        }
    }
}

TEST_CASE("reduced planes are complex lines over the collinear direction") {
    const JacobiMasses jm(0.8, 2.5, 1.7);
    for (const PairIndex& pair : {PairIndex(1, 2), PairIndex(2, 3), PairIndex(1, 3)}) {
        const Eigen::Vector2d dir = reduced_line_direction(pair, jm);
        const Subspace d = reduced_delta(pair, jm);
        Vector re(4), im(4);
        re << dir.x(), 0, dir.y(), 0;
        im << 0, dir.x(), 0, dir.y();
        CHECK(d.distance(re) < 1e-10);
        CHECK(d.distance(im) < 1e-10);
    }
}

TEST_CASE("kinetic-energy isometry on zero-center-of-mass configurations") {
    Rng rng(44);
    for (int t = 0; t < 30; ++t) {
        const JacobiMasses jm(rng.log_uniform(1e-1, 1e1), rng.log_uniform(1e-1, 1e1),
                              rng.log_uniform(1e-1, 1e1));
        const Metric g = jm.system().metric();
        Vector x(6);
        for (int i = 0; i < 6; ++i) x[i] = rng.normal();
        const double total = jm.m1 + jm.m2 + jm.m3;
        for (int axis = 0; axis < 2; ++axis) {
            const double cm =
                (jm.m1 * x[0 + axis] + jm.m2 * x[2 + axis] + jm.m3 * x[4 + axis]) / total;
            x[0 + axis] -= cm;
            x[2 + axis] -= cm;
            x[4 + axis] -= cm;
        }
        const Vector y = jacobi_matrix(jm) * x;
        CHECK(std::abs(y.norm() - std::sqrt(metric_inner(x, x, g))) < 1e-10);
    }
}

TEST_CASE("reduced angles match the closed form for random masses") {
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        const double m1 = rng.log_uniform(1e-1, 1e1);
        const double m2 = rng.log_uniform(1e-1, 1e1);
        const double m3 = rng.log_uniform(1e-1, 1e1);
        const JacobiMasses jm(m1, m2, m3);
        const AngleVector av =
            principal_angles(reduced_delta(PairIndex(1, 2), jm), reduced_delta(PairIndex(2, 3), jm));
        REQUIRE(av.size() == 2);
        const double expected = closed_form_angle(m1, m2, m3);
        CHECK(std::abs(av[0] - expected) < 1e-9);
        CHECK(std::abs(av[1] - expected) < 1e-9);
    }
}

TEST_CASE("verify_principal_vector_image") {
    CHECK(verify_principal_vector_image(PairIndex(1, 2), PairIndex(2, 3), JacobiMasses(1, 1, 1))
              .pass);

    Rng rng(46);
    for (int t = 0; t < 10; ++t) {
        const JacobiMasses jm(rng.log_uniform(0.2, 5.0), rng.log_uniform(0.2, 5.0),
                              rng.log_uniform(0.2, 5.0));
        for (const auto& [a, b] : std::vector<std::pair<PairIndex, PairIndex>>{
                 {{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}, {{2, 3}, {1, 3}}}) {
            const PrincipalImageReport rep = verify_principal_vector_image(a, b, jm);
            CHECK(rep.pass);
            CHECK(rep.checked == 2);
        }
    }
}

TEST_CASE("min_vector_angle stays inside [first principal angle, pi/2]") {
    const JacobiMasses jm(1, 1, 1);
    const VectorAngleRange r =
        min_vector_angle(PairIndex(1, 2), PairIndex(2, 3), jm, 100000, 2024);
    CHECK(r.min_angle >= M_PI / 3 - 1e-9);
    CHECK(r.min_angle <= M_PI / 3 + 0.05);
    CHECK(r.max_angle <= M_PI / 2 + 1e-12);
    CHECK(r.max_angle >= M_PI / 2 - 0.05);

    CHECK_THROWS_AS(min_vector_angle(PairIndex(1, 2), PairIndex(2, 3), jm, 0, 1),
                    std::invalid_argument);
}
