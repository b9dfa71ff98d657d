#pragma once

#include <random>

#include "cdesc/circuit.hpp"
#include "cdesc/galedual.hpp"

namespace cdesc {

// Random circuit with coordinates in [0, coord_max]; rejection sampling
// until the configuration is a genuine circuit.
ExponentConfig random_circuit(std::mt19937_64& rng, int n, int coord_max);

// Random rank-n coefficient matrix with entries p/q, p in [-9, 9],
// q in {1, 2, 3}.
CoefficientMatrix random_coefficients(std::mt19937_64& rng, int n);

// Random nonzero integer sequence of the given length summing to zero.
std::vector<Int> random_zero_sum_sequence(std::mt19937_64& rng, int length, int magnitude);

} // namespace cdesc
