#pragma once

#include <string>
#include <vector>

#include "cdesc/oracle.hpp"

namespace cdesc {

// Everything the soundness checks compare. Collected in one struct so
// the checker can be exercised on tampered values in tests.
struct InstanceMetrics {
    bool feasible = false;
    bool infinite = false;
    long long count = 0;
    long long bound_new = 0;
    long long bound_new_reversed = 0;
    long long bound_old = 0;
    Int vol_za;
    int sgnvar_lambda = 0;
    int sgnvar_mu = 0;
    bool parity_applies = false;
    int parity = 0;
    SequenceInequalities seq;
};

InstanceMetrics collect_metrics(const ExponentConfig& cfg, const CoefficientMatrix& c,
                                const OracleOptions& opts = {});

// Returns the list of violated invariants (empty when sound).
std::vector<std::string> check_metrics(const InstanceMetrics& m);

} // namespace cdesc
