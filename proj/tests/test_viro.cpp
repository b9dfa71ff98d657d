#include <doctest.h>

#include <numeric>
#include <random>

#include "cdesc/generate.hpp"
#include "cdesc/viro.hpp"

using namespace cdesc;

namespace {

const ExponentConfig kSquare = make_config(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const ExponentConfig kA1 = make_config(2, {{0, 0}, {1, 0}, {1, 2}, {0, 1}});
const ExponentConfig kA3 = make_config(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});

MuSequenceData normalized_mu(const GaleVectorB& b, const OrderingData& ord) {
    MuSequenceData mu = mu_sequence(b, ord);
    if (!mu.change_indices.empty() &&
        mu.mu[static_cast<std::size_t>(mu.change_indices[0])] < 0) {
        GaleVectorB neg;
        for (const auto& x : b.b) neg.b.push_back(-x);
        mu = mu_sequence(neg, ord);
    }
    return mu;
}

} // namespace

TEST_CASE("zonotope volume identity on the unit square") {
    auto r2 = zonotope_volume_check(kSquare, 2);
    CHECK(r2.volume == 1);
    CHECK(r2.mu_abs == 1);
    CHECK(r2.equal);
    auto r1 = zonotope_volume_check(kSquare, 1);
    CHECK(r1.volume == 0);
    CHECK(r1.mu_abs == 0);
    CHECK(r1.equal);
}

TEST_CASE("zonotope volume identity at ell = 0 for the triangle with inner point") {
    // reorder so the inner point comes last
    ExponentConfig cfg = make_config(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});
    auto r = zonotope_volume_check(cfg, 0);
    CHECK(r.volume == 3);
    CHECK(r.mu_abs == 3);
    CHECK(r.equal);
}

TEST_CASE("zonotope volume identity on random circuits") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        for (int ell = 0; ell <= n; ++ell) {
            auto r = zonotope_volume_check(cfg, ell);
            CHECK(r.equal);
        }
    }
}

TEST_CASE("height construction for m = 0") {
    GaleVectorB b = gale_vector(kSquare);
    MuSequenceData mu = normalized_mu(b, ordering_from_permutation({0, 1, 2, 3}));
    HeightData hd = build_heights(mu);
    REQUIRE(hd.h.size() == 1);
    CHECK(hd.h[0] == 0);
}

TEST_CASE("height construction for the swapped square ordering") {
    GaleVectorB b = gale_vector(kSquare);
    MuSequenceData mu = normalized_mu(b, ordering_from_permutation({0, 1, 3, 2}));
    REQUIRE(mu.sgnvar_mu == 1);
    HeightData hd = build_heights(mu);
    REQUIRE(hd.h.size() == 2);
    CHECK(hd.h[0] == 0);
    CHECK(hd.h[1] > 0);
    // the balance value -u_1 must separate h_1 from the (absent) h_2
    CHECK(Rat(hd.h[1]) < -hd.u[1]);
}

TEST_CASE("degenerate all-zero mu is rejected") {
    GaleVectorB b = gale_vector(kSquare); // (1, -1, 1, -1)
    OrderingData merged = ordering_from_classes({{0, 1}, {2, 3}}, 4);
    MuSequenceData mu = mu_sequence(b, merged);
    CHECK_THROWS_AS(build_heights(mu), error);
    CHECK_THROWS_AS(build_viro_system(kSquare, merged, Rat(1, 2)), error);
}

TEST_CASE("viro system of the swapped square ordering, traced by hand") {
    OrderingData ord = ordering_from_permutation({0, 1, 3, 2});
    ViroWitness w = build_viro_system(kSquare, ord, Rat(1, 2));
    CHECK(w.m == 1);
    CHECK(w.bound == 2);
    REQUIRE(w.heights.size() == 2);
    CHECK(w.heights[0] == 0);
    CHECK(w.heights[1] == 1);
    REQUIRE(w.alphas.size() == 3);
    CHECK(w.alphas[0] == 1);
    CHECK(w.alphas[1] == -2);
    CHECK(w.alphas[2] == 1);
    CHECK(w.j_end == std::vector<int>{0, 2});

    // interlacing chain: partial sums of |beta|
    Int t0 = w.alphas[0];
    Int t1 = -w.alphas[1];
    CHECK(t0 > 0);
    CHECK(t1 > t0);

    // C_t * P(t) = 0 exactly
    const std::size_t npts = 4;
    for (std::size_t i = 0; i < w.c_t.c.rows(); ++i)
        for (int col = 0; col < 2; ++col) {
            Rat acc(0);
            for (std::size_t j = 0; j < npts; ++j)
                acc += w.c_t.c.at(i, j) * w.p_rows[j][static_cast<std::size_t>(col)];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("mixed cells of the swapped square ordering") {
    OrderingData ord = ordering_from_permutation({0, 1, 3, 2});
    ViroWitness w = build_viro_system(kSquare, ord, Rat(1, 4));
    auto cells = enumerate_mixed_cells(w);
    REQUIRE(cells.size() == 2);
    for (const auto& cell : cells) {
        CHECK(cell.decorated);
        CHECK(cell.volume == 1); // |mu_{l_s}| = 1 for both cells
    }
    // s = 1 witness covector solves the lifted equations: traced z = (1,1)
    CHECK(cells[1].witness_z == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("t search on the swapped square ordering") {
    OrderingData ord = ordering_from_permutation({0, 1, 3, 2});
    T0Result res = estimate_t0(kSquare, ord, 2);
    CHECK(res.count == 2);
    CHECK(res.witness.t > 0);
    CHECK(res.witness.t < 1);
    CHECK(res.witness.cells.size() == 2);
}

TEST_CASE("m = 0 orderings certify a single cell immediately") {
    OrderingData ord = ordering_from_permutation({0, 1, 2, 3});
    T0Result res = estimate_t0(kSquare, ord, 1);
    CHECK(res.count == 1);
    CHECK(res.witness.t == Rat(1, 2));
    REQUIRE(res.witness.cells.size() == 1);
    CHECK(res.witness.cells[0].decorated);
    CHECK(res.witness.cells[0].volume == 1);
}

TEST_CASE("the steep quadrilateral attains three solutions") {
    auto [bound, ord] = best_ordering(gale_vector(kA1));
    REQUIRE(bound == 3);
    T0Result res = estimate_t0(kA1, ord, 3);
    CHECK(res.count == 3);
    REQUIRE(res.witness.cells.size() == 3);
    Int total = 0;
    for (const auto& cell : res.witness.cells) {
        CHECK(cell.decorated);
        CHECK(cell.volume == 1);
        total += cell.volume;
    }
    // m = n: the cell volumes exhaust the normalized volume
    CHECK(total == normalized_volumes(kA1).vol_z);
}

TEST_CASE("no ordering of the inner-point triangle decorates three cells") {
    GaleVectorB b = gale_vector(kA3);
    std::vector<int> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        OrderingData ord = ordering_from_permutation(perm);
        MuSequenceData mu = mu_sequence(b, ord);
        CHECK(mu.sgnvar_mu <= 1); // never more than 2 cells
        ViroWitness w = build_viro_system(kA3, ord, Rat(1, 2));
        auto cells = enumerate_mixed_cells(w);
        CHECK(cells.size() == static_cast<std::size_t>(mu.sgnvar_mu) + 1);
        CHECK(cells.size() <= 2);
        for (const auto& cell : cells) CHECK(cell.decorated);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("random witnesses certify the bound") {
    std::mt19937_64 rng(20240809);
    int built = 0;
    while (built < 20) {
        int n = 1 + static_cast<int>(rng() % 3);
        ExponentConfig cfg = random_circuit(rng, n, 3);
        GaleVectorB b = gale_vector(cfg);
        auto [bound, ord] = best_ordering(b);
        T0Result res;
        try {
            res = estimate_t0(cfg, ord, bound);
        } catch (const error& e) {
            if (e.code() == errc::degree_limit_exceeded) continue;
            throw;
        }
        CHECK(res.count == bound);
        CHECK(res.witness.cells.size() == static_cast<std::size_t>(bound));
        // per-cell volume certificate
        const auto& mu = res.witness.mu;
        for (std::size_t s = 0; s < res.witness.cells.size(); ++s) {
            Int expect = mu.mu[static_cast<std::size_t>(mu.change_indices[s])];
            if (expect < 0) expect = -expect;
            CHECK(res.witness.cells[s].volume == expect);
            CHECK(res.witness.cells[s].decorated);
        }
        // never more decorated cells than the global maximum
        CHECK(static_cast<long long>(res.witness.cells.size()) <= max_bound_over_orderings(b));
        // interlacing of the block sums: alpha_0 < -alpha_1 < alpha_0+alpha_2 < ...
        {
            const auto& alphas = res.witness.alphas;
            Int prev = 0;
            Int even_acc = 0, odd_acc = 0;
            for (std::size_t s = 0; s + 1 < alphas.size(); ++s) {
                Int term;
                if (s % 2 == 0) {
                    even_acc += alphas[s];
                    term = even_acc;
                } else {
                    odd_acc += alphas[s];
                    term = -odd_acc;
                }
                CHECK(term > prev);
                prev = term;
            }
        }
        // the constructed coefficient matrix realizes the block ordering
        GaleDualP pt = normalize(gale_dual_of_C(res.witness.c_t));
        OrderingData recomputed = compute_ordering(pt);
        CHECK(recomputed.classes.size() == res.witness.blocks.size());
        bool same = recomputed.classes == res.witness.blocks;
        bool reversed_same =
            std::vector<std::vector<int>>(recomputed.classes.rbegin(), recomputed.classes.rend()) ==
            res.witness.blocks;
        CHECK((same || reversed_same));
        long long recomputed_bound = descartes_bound(res.witness.b, recomputed);
        CHECK(recomputed_bound == res.witness.bound);
        ++built;
    }
}

TEST_CASE("caller-supplied heights are verified before use") {
    OrderingData ord = ordering_from_permutation({0, 1, 3, 2});
    GaleVectorB b = gale_vector(kSquare);
    HeightData good = build_heights(normalized_mu(b, ord));
    ViroWitness w = build_viro_system(kSquare, ord, good, Rat(1, 4));
    CHECK(w.heights == good.h);
    CHECK(enumerate_mixed_cells(w).size() == 2);

    HeightData bad = good;
    bad.h[1] = 100; // breaks h_1 < -u_1
    CHECK_THROWS_AS(build_viro_system(kSquare, ord, bad, Rat(1, 4)), error);
}
