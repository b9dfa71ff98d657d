#include "cdesc/galedual.hpp"

#include <algorithm>

namespace cdesc {

namespace {

struct Dir {
    Int x, y; // primitive integer direction
};

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

// Primitive integer direction of a nonzero rational vector.
Dir direction_of(const std::array<Rat, 2>& v) {
    Int dx = rat_num(v[0]) * rat_den(v[1]);
    Int dy = rat_num(v[1]) * rat_den(v[0]);
    Int g = int_gcd(dx, dy);
    return Dir{dx / g, dy / g};
}

Int cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }
Int dot(const Dir& a, const Dir& b) { return a.x * b.x + a.y * b.y; }

// Angular order over the full circle: directions with angle in [0, pi)
// first, then [pi, 2pi); ties within a half plane resolved by the cross
// product.
bool angle_less(const Dir& a, const Dir& b) {
    auto half = [](const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::vector<Dir> distinct_directions(const GaleDualP& p) {
    std::vector<Dir> dirs;
    for (std::size_t j = 0; j < p.rows.size(); ++j) {
        const auto& row = p.rows[j];
        if (row[0].is_zero() && row[1].is_zero())
            throw error(errc::zero_gale_row, "Gale dual row " + std::to_string(j) + " is zero");
        dirs.push_back(direction_of(row));
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const Dir& a, const Dir& b) {
                               return cross(a, b).is_zero() && dot(a, b) > 0;
                           }),
               dirs.end());
    return dirs;
}

// Finds the pair of consecutive (sorted) directions whose cyclic gap
// exceeds pi, if any. The occupied arc then runs from the gap's end to
// its start.
std::optional<std::pair<Dir, Dir>> occupied_arc(const std::vector<Dir>& dirs) {
    if (dirs.size() == 1) return std::make_pair(dirs[0], dirs[0]);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const Dir& u = dirs[i];
        const Dir& w = dirs[(i + 1) % dirs.size()];
        // gap from u counterclockwise to w is > pi iff cross < 0
        if (cross(u, w) < 0) return std::make_pair(w, u); // arc start, arc end
    }
    return std::nullopt;
}

} // namespace

CoefficientMatrix make_coefficients(int n, Mat c) {
    if (n < 1) throw error(errc::invalid_input, "dimension must be positive");
    if (c.rows() != static_cast<std::size_t>(n) || c.cols() != static_cast<std::size_t>(n) + 2)
        throw error(errc::invalid_input, "coefficient matrix must be n x (n+2)");
    return CoefficientMatrix{n, std::move(c)};
}

GaleDualP gale_dual_of_C(const CoefficientMatrix& c) {
    if (rank(c.c) != static_cast<std::size_t>(c.n))
        throw error(errc::rank_deficient, "coefficient matrix must have rank n");
    Mat k = kernel_basis(c.c);
    // rank n on n+2 columns leaves exactly a 2-dimensional kernel
    GaleDualP p;
    p.rows.resize(k.rows());
    for (std::size_t j = 0; j < k.rows(); ++j) p.rows[j] = {k.at(j, 0), k.at(j, 1)};
    return p;
}

bool feasibility(const GaleDualP& p) {
    auto dirs = distinct_directions(p);
    return occupied_arc(dirs).has_value();
}

GaleDualP normalize(const GaleDualP& p) {
    auto dirs = distinct_directions(p);
    auto arc = occupied_arc(dirs);
    if (!arc) throw error(errc::infeasible, "rows do not fit in an open half plane");
    const Dir& start = arc->first;
    const Dir& end = arc->second;

    Dir v;
    if (cross(start, end).is_zero()) {
        v = start; // single ray
    } else {
        // Boundary rays of the feasible cone: the rotation of each arc
        // extreme that points across the arc. Their sum is interior.
        Dir r_end{-end.y, end.x};
        if (dot(start, r_end) < 0) r_end = Dir{end.y, -end.x};
        Dir r_start{-start.y, start.x};
        if (dot(end, r_start) < 0) r_start = Dir{start.y, -start.x};
        v = Dir{r_start.x + r_end.x, r_start.y + r_end.y};
        Int g = int_gcd(v.x, v.y);
        v.x /= g;
        v.y /= g;
    }

    // columns of M: v and its 90 degree rotation
    GaleDualP out;
    out.rows.resize(p.rows.size());
    for (std::size_t j = 0; j < p.rows.size(); ++j) {
        const auto& r = p.rows[j];
        out.rows[j] = {r[0] * Rat(v.x) + r[1] * Rat(v.y), r[0] * Rat(-v.y) + r[1] * Rat(v.x)};
        if (!(out.rows[j][0] > 0))
            throw error(errc::infeasible, "normalization failed to clear a row");
    }
    out.normalized = true;
    return out;
}

PositivityInterval positivity_interval(const GaleDualP& p) {
    PositivityInterval out;
    for (const auto& r : p.rows) {
        const Rat& a = r[0];
        const Rat& s = r[1];
        if (s.is_zero()) {
            if (!(a > 0)) {
                out.empty = true;
                return out;
            }
            continue;
        }
        Rat bound = -a / s;
        if (s > 0) {
            if (!out.lower || bound > *out.lower) out.lower = bound;
        } else {
            if (!out.upper || bound < *out.upper) out.upper = bound;
        }
    }
    if (out.lower && out.upper && !(*out.lower < *out.upper)) out.empty = true;
    return out;
}

Rat p_value(const GaleDualP& p, std::size_t j, const Rat& y) {
    return p.rows[j][0] + p.rows[j][1] * y;
}

} // namespace cdesc
