#pragma once

#include "cdesc/circuit.hpp"
#include "cdesc/descartes.hpp"
#include "cdesc/galedual.hpp"
#include "cdesc/poly.hpp"

namespace cdesc {

struct OracleOptions {
    // Hard cap on the degree of the expanded univariate reduction; the
    // degree equals the normalized volume, so this bounds the work.
    int max_degree = 512;
};

// Univariate reduction of the system: plus/minus are the products of
// the positive-power and negative-power linear forms, f their
// difference. f_int is a primitive integer polynomial that is a
// positive rational multiple of f (what the root counting runs on).
struct GaleFunction {
    poly::QPoly plus;
    poly::QPoly minus;
    poly::QPoly f;
    poly::IPoly f_int;
    PositivityInterval interval;
};

struct RootInterval {
    Rat lo, hi;       // lo == hi: exact rational root
    int multiplicity = 1;
};

struct CountResult {
    long long count = 0;
    bool infinite = false;
    std::vector<RootInterval> roots;
};

GaleFunction build_gale_function(const GaleVectorB& b, const GaleDualP& p,
                                 const OracleOptions& opts = {});

// Exact number of positive solutions, counted with multiplicity:
// square-free decomposition plus a Sturm count per factor over the open
// positivity interval.
CountResult count_positive_solutions(const CoefficientMatrix& c, const ExponentConfig& cfg,
                                     const OracleOptions& opts = {});

// True iff the reduction is identically satisfied, i.e. the solution
// set is infinite.
bool detect_infinite(const CoefficientMatrix& c, const ExponentConfig& cfg,
                     const OracleOptions& opts = {});

// Counting core shared with the Viro pipeline: counts roots of an
// already-built reduction.
CountResult count_from_gale_function(const GaleFunction& gf);

} // namespace cdesc
