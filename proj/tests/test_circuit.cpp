#include <doctest.h>

#include <algorithm>
#include <random>

#include "cdesc/circuit.hpp"
#include "cdesc/generate.hpp"

using namespace cdesc;

namespace {

const ExponentConfig kSquare = make_config(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const ExponentConfig kA3 = make_config(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});
const ExponentConfig kSegment = make_config(1, {{0}, {1}, {2}});

std::vector<long long> b_values(const GaleVectorB& b) {
    std::vector<long long> out;
    for (const auto& x : b.b) out.push_back(x.convert_to<long long>());
    return out;
}

} // namespace

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(make_config(2, {{0, 0}, {1, 0}, {1, 1}}), error);
    CHECK_THROWS_AS(make_config(2, {{0, 0}, {0, 0}, {1, 1}, {0, 1}}), error);
    CHECK_THROWS_AS(make_config(2, {{0}, {1, 0}, {1, 1}, {0, 1}}), error);
}

TEST_CASE("lifted matrix assembly") {
    Mat a = build_matrix_A(kSquare);
    CHECK(a == Mat{{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    CHECK(build_matrix_A(kSegment) == Mat{{1, 1, 1}, {0, 1, 2}});
    CHECK(build_matrix_A(kA3) == Mat{{1, 1, 1, 1}, {0, 3, 0, 1}, {0, 0, 3, 1}});
}

TEST_CASE("gale vectors of the pinned configurations") {
    CHECK(b_values(gale_vector(kSquare)) == std::vector<long long>{1, -1, 1, -1});
    CHECK(b_values(gale_vector(kA3)) == std::vector<long long>{3, 3, 3, -9});
    CHECK(b_values(gale_vector(kSegment)) == std::vector<long long>{1, -2, 1});
}

TEST_CASE("circuit detection") {
    CHECK(is_circuit(kSquare));
    CHECK(is_circuit(kA3));
    CHECK_FALSE(is_circuit(make_config(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}})));
    // all points on a line: not even full-dimensional
    CHECK_THROWS_AS(gale_vector(make_config(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}})), error);
}

TEST_CASE("normalized volumes") {
    Volumes v = normalized_volumes(kSquare);
    CHECK(v.vol_z == 2);
    CHECK(v.index == 1);
    CHECK(v.vol_za == 2);
    v = normalized_volumes(kA3);
    CHECK(v.vol_z == 9);
    CHECK(v.index == 3);
    CHECK(v.vol_za == 3);
    v = normalized_volumes(kSegment);
    CHECK(v.vol_z == 2);
    CHECK(v.index == 1);
    CHECK(v.vol_za == 2);
}

TEST_CASE("A annihilates its gale vector and the entries sum to zero") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 4;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        GaleVectorB b = gale_vector(cfg);
        Mat a = build_matrix_A(cfg);
        Mat col(b.b.size(), 1);
        Int total = 0;
        for (std::size_t j = 0; j < b.b.size(); ++j) {
            col.at(j, 0) = b.b[j];
            total += b.b[j];
        }
        CHECK(total.is_zero());
        CHECK(a.mul(col).is_zero());
    }
}

TEST_CASE("permuting the points permutes the gale magnitudes") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + trial % 3;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        auto abs_multiset = [](const GaleVectorB& b) {
            std::vector<Int> out;
            for (const auto& x : b.b) out.push_back(boost::multiprecision::abs(x));
            std::sort(out.begin(), out.end());
            return out;
        };
        std::vector<Int> before = abs_multiset(gale_vector(cfg));
        std::vector<std::vector<long long>> pts = cfg.points;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<Int> after = abs_multiset(gale_vector(make_config(n, std::move(pts))));
        CHECK(before == after);
    }
}

TEST_CASE("vol_z matches the shoelace area in the plane") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        ExponentConfig cfg = random_circuit(rng, 2, 5);
        // 2 * area of the convex hull of the four points, exact
        auto cross = [&](int a, int o, int b) {
            long long ax = cfg.points[a][0] - cfg.points[o][0];
            long long ay = cfg.points[a][1] - cfg.points[o][1];
            long long bx = cfg.points[b][0] - cfg.points[o][0];
            long long by = cfg.points[b][1] - cfg.points[o][1];
            return ax * by - ay * bx;
        };
        // hull of 4 points: either a quadrilateral or a triangle
        std::vector<int> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return cfg.points[a] < cfg.points[b];
        });
        // monotone chain
        std::vector<int> hull;
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t start = hull.size();
            for (int i : idx) {
                while (hull.size() >= start + 2 &&
                       cross(hull[hull.size() - 1], hull[hull.size() - 2], i) <= 0)
                    hull.pop_back();
                hull.push_back(i);
            }
            hull.pop_back();
            std::reverse(idx.begin(), idx.end());
        }
        long long doubled_area = 0;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto& p = cfg.points[hull[i]];
            const auto& q = cfg.points[hull[(i + 1) % hull.size()]];
            doubled_area += p[0] * q[1] - q[0] * p[1];
        }
        if (doubled_area < 0) doubled_area = -doubled_area;
        CHECK(normalized_volumes(cfg).vol_z == Int(doubled_area));
    }
}
