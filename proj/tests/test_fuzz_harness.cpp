#include <doctest.h>

#include <random>

#include "cdesc/generate.hpp"
#include "cdesc/invariants.hpp"

using namespace cdesc;

TEST_CASE("metrics of a sound instance pass every check") {
    ExponentConfig cfg = make_config(1, {{0}, {1}, {2}});
    CoefficientMatrix c = make_coefficients(1, Mat{{2, -3, 1}});
    InstanceMetrics m = collect_metrics(cfg, c);
    CHECK(m.feasible);
    CHECK(m.count == 2);
    CHECK(m.bound_new == 2);
    CHECK(check_metrics(m).empty());
}

TEST_CASE("tampered metrics are reported") {
    ExponentConfig cfg = make_config(1, {{0}, {1}, {2}});
    CoefficientMatrix c = make_coefficients(1, Mat{{2, -3, 1}});
    InstanceMetrics m = collect_metrics(cfg, c);

    InstanceMetrics bad = m;
    bad.bound_new = m.bound_new - 1; // a miscomputed bound must be caught
    auto violations = check_metrics(bad);
    CHECK_FALSE(violations.empty());

    InstanceMetrics bad2 = m;
    bad2.count = m.bound_new + 1;
    CHECK_FALSE(check_metrics(bad2).empty());

    InstanceMetrics bad3 = m;
    bad3.parity = 1 - m.parity;
    CHECK_FALSE(check_metrics(bad3).empty());
}

TEST_CASE("random generators respect their contracts") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 3;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        CHECK(is_circuit(cfg));
        for (const auto& p : cfg.points)
            for (long long x : p) {
                CHECK(x >= 0);
                CHECK(x <= 5);
            }
        CoefficientMatrix c = random_coefficients(rng, n);
        CHECK(rank(c.c) == static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < c.c.rows(); ++i)
            for (std::size_t j = 0; j < c.c.cols(); ++j) {
                CHECK(c.c.at(i, j) >= Rat(-9));
                CHECK(c.c.at(i, j) <= Rat(9));
            }
    }
}
