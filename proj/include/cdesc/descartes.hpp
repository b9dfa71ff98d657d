#pragma once

#include <vector>

#include "cdesc/circuit.hpp"
#include "cdesc/galedual.hpp"

namespace cdesc {

// An ordering of the monomial indices: collinearity classes of the Gale
// dual rows listed in angular order, the induced permutation sigma, one
// representative per class (sigma_bar), and the orientation sign.
struct OrderingData {
    std::vector<std::vector<int>> classes; // each sorted ascending
    std::vector<int> sigma;                // concatenation of classes
    std::vector<int> sigma_bar;            // first index of each class
    int epsilon = 1;
};

// Makes an OrderingData out of explicit classes (validated partition).
OrderingData ordering_from_classes(std::vector<std::vector<int>> classes, int universe);
OrderingData ordering_from_permutation(const std::vector<int>& perm); // singleton classes
OrderingData reversed(const OrderingData& ord);

// lambda: per-class sums of the Gale coefficients, mu: prefix sums.
// change_indices are the sign-change indices of mu (empty if mu == 0).
struct MuSequenceData {
    std::vector<Int> lambda;
    std::vector<Int> mu;
    int sgnvar_lambda = 0;
    int sgnvar_mu = 0;
    std::vector<int> change_indices;
};

int sign_variation(const std::vector<Rat>& seq);
int sign_variation(const std::vector<Int>& seq);

// Recursive minimal indices marking the sign changes of a sequence: the
// first nonzero entry, then repeatedly the first entry of opposite sign.
std::vector<int> indices_of_sign_changes(const std::vector<Int>& seq);

// Canonical ordering of a feasible normalized Gale dual: classes by
// exact collinearity, sorted counterclockwise, epsilon = +1. The other
// canonical choice is reversed(ord).
OrderingData compute_ordering(const GaleDualP& p);

MuSequenceData mu_sequence(const GaleVectorB& b, const OrderingData& ord);

// Flips to the reversed orientation when that makes the first nonzero
// lambda entry positive; otherwise returns ord unchanged.
OrderingData orient_for_lambda(const OrderingData& ord, const GaleVectorB& b);

long long descartes_bound(const GaleVectorB& b, const OrderingData& ord);

// max over all orderings of 1 + sgnvar(mu); brute force over distinct
// value sequences (permutations within equal coefficients and inside a
// collinearity class cannot change mu).
long long max_bound_over_orderings(const GaleVectorB& b);
// Same maximum, together with a deterministic singleton-class ordering
// attaining it.
std::pair<long long, OrderingData> best_ordering(const GaleVectorB& b);

long long old_bound(const GaleVectorB& b, const OrderingData& ord);

struct SequenceInequalities {
    bool ok_refines = false;  // 1 + sgnvar(mu) <= sgnvar(lambda)
    bool ok_mod2 = false;     // congruence mod 2
    bool ok_volume = false;   // 1 + sgnvar(mu) <= sum of positive terms
};

SequenceInequalities sequence_inequalities(const std::vector<Int>& lambda);

struct ParityCertificate {
    bool applies = false;      // lambda_0 != 0 and lambda_{k-1} != 0
    int parity = 0;            // (1 + sgnvar(mu)) mod 2
    bool positive_certified = false; // sgnvar(mu) even forces a positive solution
};

ParityCertificate parity_certificate(const GaleVectorB& b, const OrderingData& ord);

} // namespace cdesc
