#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdesc/circuit.hpp"

namespace cdesc {

enum class PlanarKind {
    two,         // at most two positive solutions for any coefficients
    three,       // three positive solutions attainable
    boundary,    // some Gale coefficient vanishes: not a circuit
    exceptional, // product positive but the balanced (-1,-1,1,1) class
};

struct PlanarClass {
    std::array<Rat, 4> b;               // input Gale vector
    int max_positive = 2;               // 2 or 3 (meaningless for boundary)
    bool exceptional = false;
    std::array<Rat, 4> fundamental_rep; // sorted, last entry 1
    PlanarKind kind = PlanarKind::two;
};

// Scale (sign included) so the largest entry becomes 1, then sort
// ascending; the result lies in the fundamental region.
std::array<Rat, 4> fundamental_representative(const std::array<Rat, 4>& b);

PlanarClass classify_from_gale(const std::array<Rat, 4>& b);

// cfg must be a planar circuit (n = 2).
PlanarClass classify_planar(const ExponentConfig& cfg);

struct RegionSample {
    Rat b1, b2;
    PlanarKind kind;
};

// Pointwise classification over a rational grid in the (b1, b2) chart
// with b3 = 1 and b0 = -1 - b1 - b2.
std::vector<RegionSample> sample_region(int grid, const Rat& b1_min, const Rat& b1_max,
                                        const Rat& b2_min, const Rat& b2_max);

std::string region_csv(const std::vector<RegionSample>& samples);

const char* planar_kind_name(PlanarKind k);

} // namespace cdesc
