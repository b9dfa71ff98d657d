#pragma once

#include <optional>
#include <vector>

#include "cdesc/exact.hpp"

namespace cdesc::poly {

// Dense univariate polynomial with integer coefficients, low degree
// first. The zero polynomial is the empty vector; every other value is
// kept trimmed (nonzero leading coefficient).
using IPoly = std::vector<Int>;
// Same layout over the rationals, used where exact rational
// coefficients are part of the contract.
using QPoly = std::vector<Rat>;

void trim(IPoly& p);
int degree(const IPoly& p); // -1 for the zero polynomial
bool is_zero(const IPoly& p);

IPoly add(const IPoly& a, const IPoly& b);
IPoly sub(const IPoly& a, const IPoly& b);
IPoly neg(IPoly a);
IPoly mul(const IPoly& a, const IPoly& b);
IPoly scale(const IPoly& a, const Int& c);
IPoly derivative(const IPoly& a);

// (c0 + c1*y)^e by the binomial theorem.
IPoly linear_power(const Int& c0, const Int& c1, unsigned long e);

Int content(const IPoly& p);              // gcd of coefficients, >= 0
IPoly primitive_part(const IPoly& p);     // p / content(p); sign kept

// Exact quotient; throws if b does not divide a over the rationals with
// an integer result.
IPoly exact_div(const IPoly& a, const IPoly& b);

// gcd by subresultant pseudo-remainder sequence (coefficient growth
// stays polynomial, no per-step content gcds); result primitive with
// positive leading coefficient (or zero).
IPoly gcd(IPoly a, IPoly b);

// Square-free decomposition p ~ prod f_i^i (Yun). Index 1 in the result
// holds the multiplicity-1 part, and so on; entries may be constant 1.
std::vector<IPoly> squarefree_decomposition(const IPoly& p);

// Sign of p at the rational point y = num/den (den > 0), exactly.
int sign_at(const IPoly& p, const Rat& y);
Rat eval(const QPoly& p, const Rat& y);

// Divide out an exact rational root (throws if y is not a root).
IPoly deflate_root(const IPoly& p, const Rat& y);

// Sturm sequence of a polynomial. Stored as subresultant polynomials
// (small coefficients) plus a per-member sign: sign[i] * polys[i] is a
// positive multiple of the classical chain member, which is all the
// sign-variation counts need.
struct SturmChain {
    std::vector<IPoly> polys;
    std::vector<int> sign;
};

SturmChain sturm_chain(const IPoly& p);

// Sign variations of the chain at a finite point or at -inf/+inf
// (std::nullopt endpoints mean the infinite end).
int sign_variations_at(const SturmChain& chain, const Rat& y);
int sign_variations_at_neg_inf(const SturmChain& chain);
int sign_variations_at_pos_inf(const SturmChain& chain);

// Number of distinct real roots of a squarefree p in the open interval
// (lo, hi); nullopt = unbounded end. Endpoint roots are excluded: the
// implementation deflates them before counting.
long long count_roots_open(const IPoly& p, std::optional<Rat> lo, std::optional<Rat> hi);

struct Isolated {
    Rat lo, hi;    // lo == hi means the root is the exact rational lo
    bool exact;
};

// Isolating intervals (pairwise disjoint, sorted) for the distinct roots
// of a squarefree p inside the open interval (lo, hi).
std::vector<Isolated> isolate_roots(const IPoly& p, std::optional<Rat> lo, std::optional<Rat> hi);

// Upper bound B such that all real roots of p lie in (-B, B).
Rat root_bound(const IPoly& p);

QPoly to_qpoly(const IPoly& p, const Rat& scalar);
IPoly q_clear_denominators(const QPoly& p); // primitive integer multiple, sign kept

} // namespace cdesc::poly
