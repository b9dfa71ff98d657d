#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cdesc/exact.hpp"

namespace cdesc {

// Coefficient matrix of the system: n x (n+2) rationals of rank n.
struct CoefficientMatrix {
    int n = 0;
    Mat c;
};

CoefficientMatrix make_coefficients(int n, Mat c);

// Gale dual of the coefficient matrix: one row per monomial, two
// columns. After normalize() every row has positive first coordinate,
// so the linear forms p_j(y) = rows[j][0] + rows[j][1]*y are positive
// at y = 0.
struct GaleDualP {
    std::vector<std::array<Rat, 2>> rows;
    bool normalized = false;
};

// Open interval on which all the p_j are positive. Unset bounds mean
// the interval is unbounded on that side.
struct PositivityInterval {
    std::optional<Rat> lower;
    std::optional<Rat> upper;
    bool empty = false;
};

GaleDualP gale_dual_of_C(const CoefficientMatrix& c);

// True iff some v has <P_j, v> > 0 for every row: all direction vectors
// fit strictly inside an open half plane. Exact 2D angular-gap test.
bool feasibility(const GaleDualP& p);

// Right-multiplies by an invertible rational 2x2 matrix taking an
// interior feasible direction to (1, 0).
GaleDualP normalize(const GaleDualP& p);

PositivityInterval positivity_interval(const GaleDualP& p);

// Linear forms evaluated at a point, p_j(y).
Rat p_value(const GaleDualP& p, std::size_t j, const Rat& y);

inline Rat det2(const std::array<Rat, 2>& a, const std::array<Rat, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

} // namespace cdesc
