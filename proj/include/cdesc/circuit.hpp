#pragma once

#include <vector>

#include "cdesc/exact.hpp"

namespace cdesc {

// Exponent configuration: n + 2 distinct lattice points in Z^n whose
// convex hull is n-dimensional. Point order matters: all downstream
// sequences are indexed by it.
struct ExponentConfig {
    int n = 0;
    std::vector<std::vector<long long>> points;
};

// Validates counts, dimensions and distinctness (full-dimensionality is
// checked where it is actually needed, in gale_vector).
ExponentConfig make_config(int n, std::vector<std::vector<long long>> points);

// Integer vector spanning the kernel of the lifted matrix A; entries are
// the signed complementary minors, so no rescaling is ever applied.
struct GaleVectorB {
    std::vector<Int> b;
};

// The (n+1) x (n+2) matrix with a row of ones on top of the point
// coordinates, one column per point.
Mat build_matrix_A(const ExponentConfig& cfg);

GaleVectorB gale_vector(const ExponentConfig& cfg);

bool is_circuit(const ExponentConfig& cfg);
bool is_circuit(const GaleVectorB& b);

struct Volumes {
    Int vol_z;   // normalized volume w.r.t. the ambient lattice
    Int index;   // index of the sublattice spanned by the configuration
    Int vol_za;  // vol_z / index
};

Volumes normalized_volumes(const ExponentConfig& cfg);
Volumes normalized_volumes(const GaleVectorB& b);

} // namespace cdesc
