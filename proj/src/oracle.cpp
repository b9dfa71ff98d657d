#include "cdesc/oracle.hpp"

#include <algorithm>

namespace cdesc {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

// Clears a rational linear form a0 + a1*y to a primitive integer one;
// the returned scalar d > 0 satisfies (c0 + c1*y) = d * (a0 + a1*y).
struct ClearedLinear {
    Int c0, c1;
    Rat d;
};

ClearedLinear clear_linear(const Rat& a0, const Rat& a1) {
    Int l = rat_den(a0) / int_gcd(rat_den(a0), rat_den(a1)) * rat_den(a1);
    Int n0 = rat_num(a0 * Rat(l));
    Int n1 = rat_num(a1 * Rat(l));
    Int g = int_gcd(n0, n1);
    if (g.is_zero()) g = 1;
    return ClearedLinear{n0 / g, n1 / g, Rat(l) / Rat(g)};
}

} // namespace

GaleFunction build_gale_function(const GaleVectorB& b, const GaleDualP& p, const OracleOptions& opts) {
    GaleFunction gf;
    gf.interval = positivity_interval(p);

    Int vol_z = 0;
    for (const auto& x : b.b)
        if (x > 0) vol_z += x;
    if (vol_z > opts.max_degree)
        throw error(errc::degree_limit_exceeded,
                    "reduction degree " + vol_z.str() + " exceeds the configured cap");

    poly::IPoly plus_int{Int(1)}, minus_int{Int(1)};
    Rat d_plus(1), d_minus(1);
    for (std::size_t j = 0; j < b.b.size(); ++j) {
        const Int& bj = b.b[j];
        if (bj.is_zero()) continue;
        ClearedLinear lin = clear_linear(p.rows[j][0], p.rows[j][1]);
        unsigned long e = boost::multiprecision::abs(bj).convert_to<unsigned long>();
        poly::IPoly pw = poly::linear_power(lin.c0, lin.c1, e);
        if (bj > 0) {
            plus_int = poly::mul(plus_int, pw);
            for (unsigned long i = 0; i < e; ++i) d_plus /= lin.d;
        } else {
            minus_int = poly::mul(minus_int, pw);
            for (unsigned long i = 0; i < e; ++i) d_minus /= lin.d;
        }
    }
    // plus = d_plus * plus_int, minus = d_minus * minus_int exactly
    gf.plus = poly::to_qpoly(plus_int, d_plus);
    gf.minus = poly::to_qpoly(minus_int, d_minus);
    gf.f.assign(std::max(gf.plus.size(), gf.minus.size()), Rat(0));
    for (std::size_t i = 0; i < gf.f.size(); ++i) {
        if (i < gf.plus.size()) gf.f[i] += gf.plus[i];
        if (i < gf.minus.size()) gf.f[i] -= gf.minus[i];
    }
    while (!gf.f.empty() && gf.f.back().is_zero()) gf.f.pop_back();

    // Integer multiple of f without rebuilding from the rational form:
    // scale the two integer products to the common denominator.
    Rat ratio = d_plus / d_minus; // positive
    poly::IPoly scaled_plus = poly::scale(plus_int, rat_num(ratio));
    poly::IPoly scaled_minus = poly::scale(minus_int, rat_den(ratio));
    gf.f_int = poly::primitive_part(poly::sub(scaled_plus, scaled_minus));
    return gf;
}

CountResult count_from_gale_function(const GaleFunction& gf) {
    // On the open interval every linear form is positive, so minus > 0
    // there and the roots of f = plus - minus coincide, multiplicities
    // included, with the solutions of plus/minus = 1. Counting roots of
    // the polynomial difference is therefore exact for the original
    // product equation.
    CountResult out;
    if (gf.interval.empty) return out;
    if (poly::is_zero(gf.f_int)) {
        out.infinite = true;
        return out;
    }
    std::optional<Rat> lo = gf.interval.lower;
    std::optional<Rat> hi = gf.interval.upper;

    auto factors = poly::squarefree_decomposition(gf.f_int);
    for (std::size_t mult = 1; mult < factors.size(); ++mult) {
        const poly::IPoly& fac = factors[mult];
        if (poly::degree(fac) < 1) continue;
        auto isolated = poly::isolate_roots(fac, lo, hi);
        out.count += static_cast<long long>(isolated.size()) * static_cast<long long>(mult);
        for (const auto& iso : isolated)
            out.roots.push_back({iso.lo, iso.hi, static_cast<int>(mult)});
    }

    // Refine isolating intervals until they are pairwise disjoint, so the
    // report lists the roots unambiguously in increasing order.
    auto refine = [&](RootInterval& r, const poly::IPoly& fac) {
        if (r.lo == r.hi) return;
        Rat mid = (r.lo + r.hi) / 2;
        int sm = poly::sign_at(fac, mid);
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        int sa = poly::sign_at(fac, r.lo);
        if (sa != 0 && sa != sm)
            r.hi = mid;
        else
            r.lo = mid;
    };
    // Map each root interval back to its factor for refinement.
    std::vector<const poly::IPoly*> root_factor;
    {
        std::size_t idx = 0;
        for (std::size_t mult = 1; mult < factors.size(); ++mult) {
            const poly::IPoly& fac = factors[mult];
            if (poly::degree(fac) < 1) continue;
            while (idx < out.roots.size() && out.roots[idx].multiplicity == static_cast<int>(mult)) {
                root_factor.push_back(&fac);
                ++idx;
            }
        }
    }
    bool overlap = true;
    int guard = 0;
    while (overlap && guard++ < 4096) {
        overlap = false;
        for (std::size_t i = 0; i < out.roots.size(); ++i)
            for (std::size_t j = i + 1; j < out.roots.size(); ++j) {
                RootInterval& a = out.roots[i];
                RootInterval& b = out.roots[j];
                bool disjoint = a.hi < b.lo || b.hi < a.lo ||
                                (a.hi == b.lo && (a.lo != a.hi || b.lo != b.hi)) ||
                                (b.hi == a.lo && (a.lo != a.hi || b.lo != b.hi));
                if (!disjoint) {
                    refine(a, *root_factor[i]);
                    refine(b, *root_factor[j]);
                    overlap = true;
                }
            }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    return out;
}

CountResult count_positive_solutions(const CoefficientMatrix& c, const ExponentConfig& cfg,
                                     const OracleOptions& opts) {
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b))
        throw error(errc::not_a_circuit, "configuration is not a circuit");
    GaleDualP p = gale_dual_of_C(c);
    if (!feasibility(p)) return CountResult{}; // no positive solutions at all
    GaleDualP pn = normalize(p);
    GaleFunction gf = build_gale_function(b, pn, opts);
    return count_from_gale_function(gf);
}

bool detect_infinite(const CoefficientMatrix& c, const ExponentConfig& cfg, const OracleOptions& opts) {
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b))
        throw error(errc::not_a_circuit, "configuration is not a circuit");
    GaleDualP p = gale_dual_of_C(c);
    if (!feasibility(p)) return false;
    GaleDualP pn = normalize(p);
    GaleFunction gf = build_gale_function(b, pn, opts);
    return poly::is_zero(gf.f_int) && !gf.interval.empty;
}

} // namespace cdesc
