#include "cdesc/invariants.hpp"

namespace cdesc {

InstanceMetrics collect_metrics(const ExponentConfig& cfg, const CoefficientMatrix& c,
                                const OracleOptions& opts) {
    InstanceMetrics m;
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b)) throw error(errc::not_a_circuit, "configuration is not a circuit");
    GaleDualP p = gale_dual_of_C(c);
    m.vol_za = normalized_volumes(b).vol_za;
    m.feasible = feasibility(p);
    CountResult res = count_positive_solutions(c, cfg, opts);
    m.count = res.count;
    m.infinite = res.infinite;
    if (!m.feasible) return m;

    GaleDualP pn = normalize(p);
    OrderingData ord = orient_for_lambda(compute_ordering(pn), b);
    MuSequenceData mu = mu_sequence(b, ord);
    m.sgnvar_lambda = mu.sgnvar_lambda;
    m.sgnvar_mu = mu.sgnvar_mu;
    m.bound_new = descartes_bound(b, ord);
    m.bound_new_reversed = descartes_bound(b, reversed(ord));
    m.bound_old = old_bound(b, ord);
    ParityCertificate pc = parity_certificate(b, ord);
    m.parity_applies = pc.applies;
    m.parity = pc.parity;
    m.seq = sequence_inequalities(mu.lambda);
    return m;
}

std::vector<std::string> check_metrics(const InstanceMetrics& m) {
    std::vector<std::string> out;
    if (!m.feasible) {
        if (m.count != 0) out.push_back("infeasible instance reported a nonzero count");
        return out;
    }
    if (m.infinite) return out; // nothing further to compare
    if (m.count > m.bound_new)
        out.push_back("count " + std::to_string(m.count) + " exceeds the sharp bound " +
                      std::to_string(m.bound_new));
    if (m.bound_new != m.bound_new_reversed)
        out.push_back("bound changes under ordering reversal");
    if (1 + m.sgnvar_mu > m.sgnvar_lambda)
        out.push_back("1 + sgnvar(mu) exceeds sgnvar(lambda)");
    if (!m.seq.ok_refines || !m.seq.ok_mod2 || !m.seq.ok_volume)
        out.push_back("sequence inequalities fail for lambda");
    if (Int(m.count) > m.vol_za)
        out.push_back("count exceeds the normalized volume");
    if (m.bound_new > m.bound_old)
        out.push_back("sharp bound exceeds the coarse bound");
    if (m.parity_applies && (m.count % 2 + 2) % 2 != m.parity)
        out.push_back("count parity disagrees with the certificate");
    return out;
}

} // namespace cdesc
