#include <doctest.h>

#include <random>

#include "cdesc/descartes.hpp"
#include "cdesc/generate.hpp"

using namespace cdesc;

namespace {

std::vector<Int> iv(std::initializer_list<long long> xs) {
    std::vector<Int> out;
    for (long long x : xs) out.push_back(Int(x));
    return out;
}

GaleVectorB gv(std::initializer_list<long long> xs) { return GaleVectorB{iv(xs)}; }

const ExponentConfig kSquare = make_config(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const ExponentConfig kA1 = make_config(2, {{0, 0}, {1, 0}, {1, 2}, {0, 1}});
const ExponentConfig kA3 = make_config(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});

} // namespace

TEST_CASE("sign variation") {
    CHECK(sign_variation(iv({1, -1, 1, -1})) == 3);
    CHECK(sign_variation(iv({1, 0, -1})) == 1);
    CHECK(sign_variation(iv({1, 0, 1, 0})) == 0);
    CHECK(sign_variation(iv({})) == 0);
    CHECK(sign_variation(iv({0, 0})) == 0);
}

TEST_CASE("sign variation is stable under reversal and negation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> seq = random_zero_sum_sequence(rng, 2 + trial % 6, 5);
        std::vector<Int> rev(seq.rbegin(), seq.rend());
        std::vector<Int> negated;
        for (const auto& x : seq) negated.push_back(-x);
        CHECK(sign_variation(seq) == sign_variation(rev));
        CHECK(sign_variation(seq) == sign_variation(negated));
    }
}

TEST_CASE("indices of sign changes") {
    CHECK(indices_of_sign_changes(iv({1, -1, 1, -1})) == std::vector<int>{0, 1, 2, 3});
    CHECK(indices_of_sign_changes(iv({0, 2, 0, -3})) == std::vector<int>{1, 3});
    CHECK(indices_of_sign_changes(iv({5, 5, 5})) == std::vector<int>{0});
    CHECK_THROWS_AS(indices_of_sign_changes(iv({0, 0, 0})), error);
}

TEST_CASE("ordering of the n=1 example is the identity") {
    CoefficientMatrix c = make_coefficients(1, Mat{{2, -3, 1}});
    GaleDualP pn = normalize(gale_dual_of_C(c));
    OrderingData ord = compute_ordering(pn);
    REQUIRE(ord.classes.size() == 3);
    CHECK(ord.sigma == std::vector<int>{0, 1, 2});
    CHECK(ord.sigma_bar == std::vector<int>{0, 1, 2});
}

TEST_CASE("collinear rows share a class") {
    CoefficientMatrix c = make_coefficients(2, Mat{{1, 2, 0, 5}, {0, 0, 1, 7}});
    GaleDualP p = gale_dual_of_C(c);
    if (feasibility(p)) {
        OrderingData ord = compute_ordering(normalize(p));
        bool together = false;
        for (const auto& k : ord.classes)
            if (std::find(k.begin(), k.end(), 0) != k.end() &&
                std::find(k.begin(), k.end(), 1) != k.end())
                together = true;
        CHECK(together);
    }
}

TEST_CASE("uniform coefficient matrices split every index apart") {
    // pinned uniform C on the unit square whose ordering is the identity
    CoefficientMatrix c = make_coefficients(2, Mat{{1, -2, 1, 0}, {2, -3, 0, 1}});
    GaleDualP pn = normalize(gale_dual_of_C(c));
    OrderingData ord = compute_ordering(pn);
    CHECK(ord.classes.size() == 4); // k = n + 2 for uniform C
    CHECK(ord.sigma == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("mu sequences of the unit square") {
    GaleVectorB b = gale_vector(kSquare);
    MuSequenceData identity = mu_sequence(b, ordering_from_permutation({0, 1, 2, 3}));
    CHECK(identity.lambda == iv({1, -1, 1, -1}));
    CHECK(identity.mu == iv({1, 0, 1, 0}));
    CHECK(identity.sgnvar_mu == 0);
    CHECK(identity.sgnvar_lambda == 3);

    MuSequenceData swapped = mu_sequence(b, ordering_from_permutation({0, 1, 3, 2}));
    CHECK(swapped.mu == iv({1, 0, -1, 0}));
    CHECK(swapped.sgnvar_mu == 1);
    CHECK(swapped.change_indices == std::vector<int>{0, 2});
}

TEST_CASE("mu sequence of the n=1 parabola support") {
    GaleVectorB b = gv({1, -2, 1});
    MuSequenceData mu = mu_sequence(b, ordering_from_permutation({0, 1, 2}));
    CHECK(mu.lambda == iv({1, -2, 1}));
    CHECK(mu.mu == iv({1, -1, 0}));
    CHECK(descartes_bound(b, ordering_from_permutation({0, 1, 2})) == 2);
}

TEST_CASE("descartes bound on pinned orderings") {
    GaleVectorB b = gale_vector(kSquare);
    CHECK(descartes_bound(b, ordering_from_permutation({0, 1, 2, 3})) == 1);
    CHECK(descartes_bound(b, ordering_from_permutation({0, 1, 3, 2})) == 2);
}

TEST_CASE("maximum bound over orderings") {
    CHECK(max_bound_over_orderings(gale_vector(kA3)) == 2);
    CHECK(max_bound_over_orderings(gale_vector(kSquare)) == 2);
    CHECK(max_bound_over_orderings(gale_vector(kA1)) == 3);
    auto [bound, ord] = best_ordering(gale_vector(kA1));
    CHECK(bound == 3);
    CHECK(descartes_bound(gale_vector(kA1), ord) == 3);
}

TEST_CASE("old bound vs new bound") {
    GaleVectorB b = gale_vector(kSquare);
    OrderingData identity = ordering_from_permutation({0, 1, 2, 3});
    CHECK(old_bound(b, identity) == 3); // max(sgnvar lambda = 3, vol = 2)
    GaleVectorB seg = gv({1, -2, 1});
    CHECK(old_bound(seg, ordering_from_permutation({0, 1, 2})) == 2);
}

TEST_CASE("sequence inequalities on pinned sequences") {
    auto r1 = sequence_inequalities(iv({1, -1, 1, -1}));
    CHECK(r1.ok_refines);
    CHECK(r1.ok_mod2);
    CHECK(r1.ok_volume);
    auto r2 = sequence_inequalities(iv({1, -2, 1}));
    CHECK(r2.ok_refines);
    CHECK(r2.ok_mod2);
    CHECK(r2.ok_volume);
    auto r3 = sequence_inequalities(iv({3, 3, 3, -9}));
    CHECK(r3.ok_refines);
    CHECK(r3.ok_mod2);
    CHECK(r3.ok_volume);
    CHECK_THROWS_AS(sequence_inequalities(iv({0, 0})), error);
    CHECK_THROWS_AS(sequence_inequalities(iv({1, 1})), error);
}

TEST_CASE("parity certificate") {
    GaleVectorB b = gale_vector(kSquare);
    ParityCertificate pc = parity_certificate(b, ordering_from_permutation({0, 1, 2, 3}));
    CHECK(pc.applies);
    CHECK(pc.parity == 1);
    CHECK(pc.positive_certified); // sgnvar(mu) = 0 is even

    // merged classes with vanishing boundary sums: certificate does not apply
    GaleVectorB b2 = gv({1, -1, 2, -2});
    OrderingData merged = ordering_from_classes({{0, 1}, {2}, {3}}, 4);
    ParityCertificate pc2 = parity_certificate(b2, merged);
    CHECK_FALSE(pc2.applies);
}

TEST_CASE("reversal leaves the bound unchanged") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + trial % 4;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        GaleVectorB b = gale_vector(cfg);
        std::vector<int> perm(static_cast<std::size_t>(n) + 2);
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        OrderingData ord = ordering_from_permutation(perm);
        CHECK(descartes_bound(b, ord) == descartes_bound(b, reversed(ord)));
    }
}

TEST_CASE("representatives do not matter, only the classes") {
    GaleVectorB b = gv({2, -1, 1, -2});
    OrderingData a = ordering_from_classes({{0, 2}, {1}, {3}}, 4);
    OrderingData bb = a;
    bb.sigma_bar = {2, 1, 3}; // different representative for the first class
    CHECK(mu_sequence(b, a).mu == mu_sequence(b, bb).mu);
}

TEST_CASE("random sequences satisfy the three inequalities") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> lambda = random_zero_sum_sequence(rng, 2 + trial % 7, 9);
        auto r = sequence_inequalities(lambda);
        CHECK(r.ok_refines);
        CHECK(r.ok_mod2);
        CHECK(r.ok_volume);
    }
}

TEST_CASE("max bound never exceeds the volume bound or n+1") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4;
        ExponentConfig cfg = random_circuit(rng, n, 5);
        GaleVectorB b = gale_vector(cfg);
        long long mb = max_bound_over_orderings(b);
        CHECK(Int(mb) <= normalized_volumes(b).vol_za);
        CHECK(mb <= n + 1);
    }
}
