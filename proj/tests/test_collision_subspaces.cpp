#include <doctest.h>

#include <cmath>

#include "nbilliard/collision_subspaces.hpp"
#include "nbilliard/rng.hpp"

using namespace nbilliard;

TEST_CASE("build_delta bases") {
    SUBCASE("N=3 line, unit masses, pair (1,2)") {
        const BilliardSystem sys(3, 1, MassVector::unit(3));
        const Subspace d = build_delta(sys, PairIndex(1, 2));
        REQUIRE(d.dim() == 2);
        CHECK(d.gram_defect() < 1e-12);
        Vector merged(3), third(3);
        merged << 1 / std::sqrt(2), 1 / std::sqrt(2), 0;
        third << 0, 0, 1;
        CHECK(d.distance(merged) < 1e-12);
        CHECK(d.distance(third) < 1e-12);
    }

    SUBCASE("planar system has codimension 2") {
        const BilliardSystem sys(3, 2, MassVector::unit(3));
        CHECK(build_delta(sys, PairIndex(1, 2)).dim() == 4);
    }

    SUBCASE("mass-weighted merged vector is unit") {
        const BilliardSystem sys(3, 1, MassVector({1, 3, 5}));
        const Subspace d = build_delta(sys, PairIndex(1, 2));
        REQUIRE(d.dim() == 2);
        CHECK(d.gram_defect() < 1e-12);
        Vector merged(3);
        merged << 1 / std::sqrt(4.0), 1 / std::sqrt(4.0), 0;
        CHECK(d.distance(merged) < 1e-12);
    }

    SUBCASE("every basis vector is a q_i = q_j configuration") {
        const BilliardSystem sys(4, 3, MassVector({1, 2, 3, 4}));
        const Subspace d = build_delta(sys, PairIndex(2, 4));
        REQUIRE(d.dim() == 9);  // m(N-1)
        for (int c = 0; c < d.dim(); ++c)
            for (int axis = 0; axis < 3; ++axis)
                CHECK(std::abs(d.basis(sys.coord(2, axis), c) - d.basis(sys.coord(4, axis), c)) <
                      1e-12);
    }

    SUBCASE("out-of-range pair") {
        const BilliardSystem sys(3, 1, MassVector::unit(3));
        CHECK_THROWS_AS(build_delta(sys, PairIndex(1, 4)), std::invalid_argument);
    }
}

TEST_CASE("closed_form_angle") {
    CHECK(std::abs(closed_form_angle(1, 1, 1) - M_PI / 3) < 1e-14);
    CHECK(std::abs(closed_form_angle(7, 7, 7) - M_PI / 3) < 1e-14);
    CHECK(std::abs(closed_form_angle(1, 4, 1) - std::acos(0.2)) < 1e-14);
    CHECK(std::abs(closed_form_angle(2, 1, 3) - M_PI / 4) < 1e-14);

    SUBCASE("symmetric in the outer masses") {
        Rng rng(11);
        for (int t = 0; t < 50; ++t) {
            const double a = rng.log_uniform(1e-2, 1e2);
            const double b = rng.log_uniform(1e-2, 1e2);
            const double c = rng.log_uniform(1e-2, 1e2);
            CHECK(closed_form_angle(a, b, c) == closed_form_angle(c, b, a));
        }
    }

    SUBCASE("depends only on mass ratios") {
        Rng rng(12);
        for (double lambda : {1e-3, 1.0, 1e3}) {
            const double base = closed_form_angle(0.7, 2.1, 5.3);
            CHECK(std::abs(closed_form_angle(0.7 * lambda, 2.1 * lambda, 5.3 * lambda) - base) <
                  1e-12);
        }
        (void)rng;
    }

    SUBCASE("always strictly inside (0, pi/2)") {
        Rng rng(13);
        for (int t = 0; t < 100; ++t) {
            const double a = closed_form_angle(rng.log_uniform(1e-2, 1e2),
                                               rng.log_uniform(1e-2, 1e2),
                                               rng.log_uniform(1e-2, 1e2));
            CHECK(a > 0.0);
            CHECK(a < M_PI / 2);
        }
    }

    CHECK_THROWS_AS(closed_form_angle(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("verify_angle_theorem") {
    SUBCASE("disjoint pairs: zeros then pi/2") {
        const BilliardSystem sys(4, 1, MassVector::unit(4));
        const AngleTheoremReport rep = verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(3, 4));
        CHECK(rep.pass);
        REQUIRE(rep.computed.size() == 3);
        CHECK(rep.computed[0] < 1e-9);
        CHECK(rep.computed[1] < 1e-9);
        CHECK(std::abs(rep.computed[2] - M_PI / 2) < 1e-9);
    }

    SUBCASE("equal masses planar: [0,0,pi/3,pi/3]") {
        const BilliardSystem sys(3, 2, MassVector::unit(3));
        const AngleTheoremReport rep = verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(2, 3));
        CHECK(rep.pass);
        REQUIRE(rep.computed.size() == 4);
        CHECK(std::abs(rep.computed[2] - M_PI / 3) < 1e-9);
        CHECK(std::abs(rep.computed[3] - M_PI / 3) < 1e-9);
        CHECK(rep.zero_count == 2);
    }

    SUBCASE("shared index with masses (2,1,3)") {
        const BilliardSystem sys(3, 1, MassVector({2, 1, 3}));
        const AngleTheoremReport rep = verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(2, 3));
        CHECK(rep.pass);
        REQUIRE(rep.computed.size() == 2);
        CHECK(std::abs(rep.computed[1] - closed_form_angle(2, 1, 3)) < 1e-9);
    }

    SUBCASE("equal pairs are rejected") {
        const BilliardSystem sys(3, 1, MassVector::unit(3));
        CHECK_THROWS_AS(verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(1, 2)),
                        std::invalid_argument);
    }

    SUBCASE("random masses across sizes") {
        Rng rng(21);
        for (int t = 0; t < 25; ++t) {
            const int n = 3 + static_cast<int>(rng.next_u64() % 3);
            const int m = 1 + static_cast<int>(rng.next_u64() % 3);
            std::vector<double> masses(static_cast<size_t>(n));
            for (auto& mv : masses) mv = rng.log_uniform(1e-2, 1e2);
            const BilliardSystem sys(n, m, MassVector(masses));
            const AngleTheoremReport shared =
                verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(2, 3));
            CHECK(shared.pass);
            CHECK(shared.zero_count == m * (n - 2));
            if (n >= 4) {
                const AngleTheoremReport disjoint =
                    verify_angle_theorem(sys, PairIndex(1, 2), PairIndex(3, 4));
                CHECK(disjoint.pass);
                CHECK(disjoint.zero_count == m * (n - 2));
            }
        }
    }
}

TEST_CASE("appendix_decomposition") {
    SUBCASE("disjoint pairs: X and Y orthogonal") {
        const BilliardSystem sys(4, 1, MassVector::unit(4));
        const DecompositionReport rep =
            appendix_decomposition(sys, PairIndex(1, 2), PairIndex(3, 4));
        CHECK(rep.pass);
        CHECK(rep.dim_x == 1);
        CHECK(rep.dim_y == 1);
        REQUIRE(rep.cross_angles.size() == 1);
        CHECK(std::abs(rep.cross_angles[0] - M_PI / 2) < 1e-8);
    }

    SUBCASE("shared index, unit masses: the (e_i+e_j-2e_k)/sqrt(6) span") {
        const BilliardSystem sys(3, 1, MassVector::unit(3));
        const DecompositionReport rep =
            appendix_decomposition(sys, PairIndex(1, 2), PairIndex(2, 3));
        CHECK(rep.pass);
        CHECK(rep.span_discrepancy_x < 1e-8);
        CHECK(rep.span_discrepancy_y < 1e-8);
        CHECK(std::abs(rep.expected_angle - M_PI / 3) < 1e-12);
    }

    SUBCASE("heavy shared mass (1,1,4): angle acos(1/5), not a right angle") {
        // shared particle is index 2, so the middle formula slot takes mass 4
        const BilliardSystem sys(3, 1, MassVector({1, 4, 1}));
        const DecompositionReport rep =
            appendix_decomposition(sys, PairIndex(1, 2), PairIndex(2, 3));
        CHECK(rep.pass);
        REQUIRE(rep.cross_angles.size() == 1);
        CHECK(std::abs(rep.cross_angles[0] - std::acos(0.2)) < 1e-8);
    }

    SUBCASE("random masses, both index patterns") {
        Rng rng(34);
        for (int t = 0; t < 15; ++t) {
            std::vector<double> masses(4);
            for (auto& mv : masses) mv = rng.log_uniform(1e-1, 1e1);
            const BilliardSystem sys(4, 2, MassVector(masses));
            CHECK(appendix_decomposition(sys, PairIndex(1, 2), PairIndex(2, 3)).pass);
            CHECK(appendix_decomposition(sys, PairIndex(1, 2), PairIndex(3, 4)).pass);
        }
    }
}
