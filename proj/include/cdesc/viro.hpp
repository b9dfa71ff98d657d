#pragma once

#include <array>

#include "cdesc/descartes.hpp"
#include "cdesc/oracle.hpp"

namespace cdesc {

// Cross-check of the segment Minkowski-sum volume identity: the
// parallelotope spanned by edges from a_0 (j <= ell) and from a_{n+1}
// (j > ell) has Euclidean volume |b_0 + ... + b_ell|.
struct ZonotopeCheck {
    Int volume;
    Int mu_abs;
    bool equal;
};

ZonotopeCheck zonotope_volume_check(const ExponentConfig& cfg, int ell);

// Integer lifting heights hhat_0 = 0 < hhat_1 < ... < hhat_m together
// with the per-edge balance values u_s. Construction is greedy: each
// new height is the smallest integer exceeding -u_s (bumped by a
// doubling increment if verification of the strict inequalities ever
// fails), and everything is re-verified exactly afterwards.
struct HeightData {
    std::vector<Int> h;
    std::vector<Rat> u;
};

// mu must have its first nonzero entry positive.
HeightData build_heights(const MuSequenceData& mu);

struct MixedCell {
    int s = 0;
    // n segments, one per equation; vertices are original point indices.
    std::vector<std::array<int, 2>> summands;
    Int volume;
    bool decorated = false;
    std::vector<Rat> witness_z; // certifying covector, reordered coordinates
};

// Everything the construction produces for one ordering and one value
// of the degeneration parameter. Indices inside refer to the reordered,
// translated configuration; perm maps positions back to the caller's
// point numbering. The lower-hull geometry behind the height conditions
// is never materialized; the defining equalities and inequalities are
// checked directly instead.
struct ViroWitness {
    int m = 0;
    std::vector<int> perm;
    ExponentConfig reordered;            // a_{n+1} translated to the origin
    GaleVectorB b;                       // recomputed, sign-normalized
    MuSequenceData mu;
    std::vector<std::vector<int>> blocks; // M_0 .. M_{m+1}, reordered indices
    std::vector<Int> alphas;              // block sums of b
    std::vector<Int> heights;             // hhat_s
    std::vector<Rat> u;                   // u_s
    std::vector<int> j_end;               // j_s = last index of M_0 u ... u M_s
    std::vector<Int> point_heights;       // h_j per reordered point
    Rat t;
    CoefficientMatrix c_t;
    std::vector<std::array<Rat, 2>> p_rows; // Gale dual rows of c_t by construction
    long long bound = 0;                    // m + 1
    std::vector<MixedCell> cells;
};

ViroWitness build_viro_system(const ExponentConfig& cfg, const OrderingData& ord, const Rat& t);
// Same, but with caller-supplied heights; they are re-verified exactly
// against the ordering's balance conditions before use.
ViroWitness build_viro_system(const ExponentConfig& cfg, const OrderingData& ord,
                              const HeightData& heights, const Rat& t);

// Builds and certifies the m+1 mixed cells of the witness: solves the
// cell equations exactly, re-checks the dropped equation and the strict
// lifting inequalities, evaluates the decoration sign test and the edge
// volume. Throws cell_verification_failed on any inconsistency.
std::vector<MixedCell> enumerate_mixed_cells(const ViroWitness& w);

struct T0Result {
    ViroWitness witness; // cells filled in, at the returned t
    long long count = 0;
};

// Halving search over t = 1/2, 1/4, ...: accepts the largest t whose
// exact count matches the target for three consecutive halvings.
T0Result estimate_t0(const ExponentConfig& cfg, const OrderingData& ord, long long target,
                     const OracleOptions& opts = {}, int max_halvings = 60);

} // namespace cdesc
