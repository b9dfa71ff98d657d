#include "cdesc/viro.hpp"

#include <algorithm>

namespace cdesc {

namespace {

Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

Rat rat_pow(const Rat& t, const Int& e) {
    unsigned ue = e.convert_to<unsigned>();
    Int num = boost::multiprecision::pow(rat_num(t), ue);
    Int den = boost::multiprecision::pow(rat_den(t), ue);
    return Rat(num) / Rat(den);
}

// Solves a square rational system; empty result if singular.
std::optional<std::vector<Rat>> solve_square(Mat a, std::vector<Rat> rhs) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            std::swap(rhs[pivot], rhs[k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / a.at(i, i);
    return out;
}

std::vector<Int> block_alphas(const MuSequenceData& mu) {
    const auto& idx = mu.change_indices;
    std::vector<Int> alphas;
    alphas.reserve(idx.size() + 1);
    Int prev = 0;
    for (int l : idx) {
        alphas.push_back(mu.mu[static_cast<std::size_t>(l)] - prev);
        prev = mu.mu[static_cast<std::size_t>(l)];
    }
    alphas.push_back(-prev); // final block restores the zero sum
    return alphas;
}

bool verify_heights(const std::vector<Int>& h, const std::vector<Rat>& u) {
    const std::size_t m = h.size() - 1;
    if (!h[0].is_zero() || !u[0].is_zero()) return false;
    for (std::size_t r = 1; r <= m; ++r)
        if (!(h[r] > h[r - 1]) || !(h[r] > 0)) return false;
    for (std::size_t s = 1; s <= m; ++s) {
        Rat mu_s = -u[s];
        if (!(Rat(h[s]) < mu_s)) return false;
        if (s < m && !(mu_s < Rat(h[s + 1]))) return false;
    }
    return true;
}

} // namespace

ZonotopeCheck zonotope_volume_check(const ExponentConfig& cfg, int ell) {
    const int n = cfg.n;
    if (ell < 0 || ell > n)
        throw error(errc::invalid_input, "ell out of range");
    GaleVectorB b = gale_vector(cfg);
    Mat edges(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const auto& anchor = (j <= ell) ? cfg.points[0] : cfg.points[static_cast<std::size_t>(n) + 1];
        for (int i = 0; i < n; ++i)
            edges.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i)) =
                Int(cfg.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
                    anchor[static_cast<std::size_t>(i)]);
    }
    ZonotopeCheck out;
    out.volume = boost::multiprecision::abs(rat_num(determinant(edges)));
    Int acc = 0;
    for (int j = 0; j <= ell; ++j) acc += b.b[static_cast<std::size_t>(j)];
    out.mu_abs = boost::multiprecision::abs(acc);
    out.equal = (out.volume == out.mu_abs);
    return out;
}

HeightData build_heights(const MuSequenceData& mu) {
    if (mu.change_indices.empty())
        throw error(errc::degenerate_sequence, "mu is identically zero");
    const std::size_t m = mu.change_indices.size() - 1;
    std::vector<Int> beta(m + 1);
    for (std::size_t s = 0; s <= m; ++s)
        beta[s] = mu.mu[static_cast<std::size_t>(mu.change_indices[s])];
    if (!(beta[0] > 0))
        throw error(errc::invalid_input, "build_heights expects the first nonzero mu entry positive");
    std::vector<Int> alphas = block_alphas(mu);

    for (Int delta = 1; delta <= 32; delta *= 2) {
        HeightData hd;
        hd.h.assign(m + 1, Int(0));
        hd.u.assign(m + 1, Rat(0));
        Rat weighted = 0; // sum of alpha_r * h_r over r <= s
        for (std::size_t s = 0; s + 1 <= m; ++s) {
            hd.h[s + 1] = rat_floor(-hd.u[s]) + delta;
            weighted += Rat(alphas[s + 1]) * Rat(hd.h[s + 1]);
            hd.u[s + 1] = -weighted / Rat(beta[s + 1]);
        }
        if (verify_heights(hd.h, hd.u)) return hd;
    }
    throw error(errc::height_construction_failed, "no admissible height sequence found");
}

namespace {

ViroWitness build_viro_system_impl(const ExponentConfig& cfg, const OrderingData& ord, const Rat& t,
                                   const HeightData* given);

} // namespace

ViroWitness build_viro_system(const ExponentConfig& cfg, const OrderingData& ord, const Rat& t) {
    return build_viro_system_impl(cfg, ord, t, nullptr);
}

ViroWitness build_viro_system(const ExponentConfig& cfg, const OrderingData& ord,
                              const HeightData& heights, const Rat& t) {
    return build_viro_system_impl(cfg, ord, t, &heights);
}

namespace {

ViroWitness build_viro_system_impl(const ExponentConfig& cfg, const OrderingData& ord, const Rat& t,
                                   const HeightData* given) {
    if (!(t > 0 && t < 1))
        throw error(errc::invalid_input, "t must lie strictly between 0 and 1");
    const int n = cfg.n;
    const std::size_t npts = static_cast<std::size_t>(n) + 2;
    if (ord.sigma.size() != npts)
        throw error(errc::invalid_input, "ordering does not match configuration size");

    ViroWitness w;
    w.t = t;
    w.perm = ord.sigma;

    // Reorder so each class is a consecutive block, then translate the
    // last point to the origin.
    std::vector<std::vector<long long>> pts(npts);
    const auto& last = cfg.points[static_cast<std::size_t>(w.perm[npts - 1])];
    for (std::size_t i = 0; i < npts; ++i) {
        pts[i] = cfg.points[static_cast<std::size_t>(w.perm[i])];
        for (int d = 0; d < n; ++d)
            pts[i][static_cast<std::size_t>(d)] -= last[static_cast<std::size_t>(d)];
    }
    w.reordered = make_config(n, std::move(pts));

    w.b = gale_vector(w.reordered);
    if (!is_circuit(w.b))
        throw error(errc::not_a_circuit, "configuration is not a circuit");

    // Classes as consecutive index blocks in the new numbering.
    std::vector<std::vector<int>> blocks;
    {
        int next = 0;
        for (const auto& k : ord.classes) {
            std::vector<int> blk(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) blk[i] = next++;
            blocks.push_back(std::move(blk));
        }
    }
    OrderingData consecutive = ordering_from_classes(blocks, static_cast<int>(npts));
    w.mu = mu_sequence(w.b, consecutive);
    bool mu_zero = std::all_of(w.mu.mu.begin(), w.mu.mu.end(), [](const Int& x) { return x.is_zero(); });
    if (mu_zero)
        throw error(errc::degenerate_sequence,
                    "mu vanishes identically for this ordering; no attaining system exists beyond the trivial bound");
    // Gale duals are defined up to sign: flip so the first nonzero mu
    // entry is positive.
    if (w.mu.mu[static_cast<std::size_t>(w.mu.change_indices[0])] < 0) {
        for (auto& x : w.b.b) x = -x;
        w.mu = mu_sequence(w.b, consecutive);
    }
    w.m = w.mu.sgnvar_mu;
    w.bound = w.m + 1;

    // Blocks M_0 .. M_{m+1} as point-index sets, and the j_s markers.
    const auto& change = w.mu.change_indices;
    std::vector<int> class_end(consecutive.classes.size());
    {
        int acc = -1;
        for (std::size_t l = 0; l < consecutive.classes.size(); ++l) {
            acc += static_cast<int>(consecutive.classes[l].size());
            class_end[l] = acc;
        }
    }
    auto push_block = [&](int class_from, int class_to) {
        std::vector<int> blk;
        int from = class_from == 0 ? 0 : class_end[static_cast<std::size_t>(class_from - 1)] + 1;
        int to = class_end[static_cast<std::size_t>(class_to)];
        for (int j = from; j <= to; ++j) blk.push_back(j);
        w.blocks.push_back(std::move(blk));
    };
    push_block(0, change[0]);
    for (std::size_t s = 1; s < change.size(); ++s) push_block(change[s - 1] + 1, change[s]);
    push_block(change.back() + 1, static_cast<int>(consecutive.classes.size()) - 1);
    for (std::size_t s = 0; s + 1 < w.blocks.size(); ++s) w.j_end.push_back(w.blocks[s].back());

    w.alphas.clear();
    for (const auto& blk : w.blocks) {
        Int a = 0;
        for (int j : blk) a += w.b.b[static_cast<std::size_t>(j)];
        w.alphas.push_back(a);
    }

    HeightData hd;
    if (given) {
        if (given->h.size() != static_cast<std::size_t>(w.m) + 1 ||
            given->u.size() != static_cast<std::size_t>(w.m) + 1 || !verify_heights(given->h, given->u))
            throw error(errc::height_construction_failed, "supplied heights fail the balance conditions");
        hd = *given;
    } else {
        hd = build_heights(w.mu);
    }
    w.heights = hd.h;
    w.u = hd.u;

    w.point_heights.assign(npts, Int(0));
    for (std::size_t s = 0; s < w.blocks.size(); ++s)
        for (int j : w.blocks[s])
            w.point_heights[static_cast<std::size_t>(j)] = (s <= static_cast<std::size_t>(w.m)) ? w.heights[s] : Int(0);

    // Coefficient matrix of the attaining system: one equation per point
    // j = 1..n, each a binomial or trinomial anchored at a_0 and a_{n+1}.
    const int j0 = w.j_end.front();
    const int jm = w.j_end.back();
    Mat c(static_cast<std::size_t>(n), npts);
    for (int j = 1; j <= n; ++j) {
        std::size_t row = static_cast<std::size_t>(j - 1);
        c.at(row, static_cast<std::size_t>(j)) = 1;
        if (j <= j0) {
            c.at(row, 0) = -1;
        } else if (j <= jm) {
            c.at(row, 0) = -rat_pow(t, w.point_heights[static_cast<std::size_t>(j)]);
            c.at(row, npts - 1) = -1;
        } else {
            c.at(row, npts - 1) = -1;
        }
    }
    w.c_t = make_coefficients(n, std::move(c));

    // The companion Gale dual rows, block-constant by construction.
    w.p_rows.assign(npts, {Rat(0), Rat(0)});
    for (std::size_t s = 0; s < w.blocks.size(); ++s) {
        std::array<Rat, 2> row;
        if (s == 0)
            row = {Rat(0), Rat(1)}; // t^{hhat_0} = 1
        else if (s == w.blocks.size() - 1)
            row = {Rat(1), Rat(0)};
        else
            row = {Rat(1), rat_pow(t, w.heights[s])};
        for (int j : w.blocks[s]) w.p_rows[static_cast<std::size_t>(j)] = row;
    }
    return w;
}

} // namespace

std::vector<MixedCell> enumerate_mixed_cells(const ViroWitness& w) {
    const int n = w.reordered.n;
    const std::size_t npts = static_cast<std::size_t>(n) + 2;
    const int j0 = w.j_end.front();
    const int jm = w.j_end.back();
    std::vector<MixedCell> cells;

    for (int s = 0; s <= w.m; ++s) {
        MixedCell cell;
        cell.s = s;
        const int js = w.j_end[static_cast<std::size_t>(s)];

        Mat edges(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            int anchor = (j <= js) ? 0 : static_cast<int>(npts) - 1;
            cell.summands.push_back({w.perm[static_cast<std::size_t>(anchor)],
                                     w.perm[static_cast<std::size_t>(j)]});
            for (int d = 0; d < n; ++d)
                edges.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(d)) =
                    Int(w.reordered.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] -
                        w.reordered.points[static_cast<std::size_t>(anchor)][static_cast<std::size_t>(d)]);
        }
        cell.volume = boost::multiprecision::abs(rat_num(determinant(edges)));

        // decoration: the two coefficients of each equation on its
        // segment must have opposite signs
        cell.decorated = true;
        for (int j = 1; j <= n; ++j) {
            int anchor = (j <= js) ? 0 : static_cast<int>(npts) - 1;
            const Rat& c1 = w.c_t.c.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(anchor));
            const Rat& c2 = w.c_t.c.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j));
            if (!(c1 * c2 < 0)) cell.decorated = false;
        }

        // certifying covector
        if (s == 0) {
            cell.witness_z.assign(static_cast<std::size_t>(n), Rat(0));
            if (!w.u[0].is_zero())
                throw error(errc::cell_verification_failed, "u_0 must vanish");
            for (int r = 1; r <= w.m; ++r)
                if (!(w.heights[static_cast<std::size_t>(r)] > 0))
                    throw error(errc::cell_verification_failed, "nonpositive height");
        } else {
            const Rat& u = w.u[static_cast<std::size_t>(s)];
            auto rhs_of = [&](int j) -> Rat {
                if (j <= j0) return u;
                if (j <= js) return u + Rat(w.point_heights[static_cast<std::size_t>(j)]);
                return Rat(0);
            };
            const int dropped = j0 + 1;
            Mat a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            std::vector<Rat> rhs;
            std::size_t row = 0;
            for (int j = 0; j <= n; ++j) {
                if (j == dropped) continue;
                for (int d = 0; d < n; ++d)
                    a.at(row, static_cast<std::size_t>(d)) =
                        Int(w.reordered.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)]);
                rhs.push_back(rhs_of(j));
                ++row;
            }
            auto z = solve_square(a, rhs);
            if (!z)
                throw error(errc::cell_verification_failed, "cell system is singular");
            // dropped equation must hold automatically
            Rat lhs(0);
            for (int d = 0; d < n; ++d)
                lhs += (*z)[static_cast<std::size_t>(d)] *
                       Rat(w.reordered.points[static_cast<std::size_t>(dropped)][static_cast<std::size_t>(d)]);
            if (lhs != rhs_of(dropped))
                throw error(errc::cell_verification_failed, "dropped cell equation fails");
            // strict lifting inequalities
            for (int j = j0 + 1; j <= js; ++j)
                if (!(u + Rat(w.point_heights[static_cast<std::size_t>(j)]) < 0))
                    throw error(errc::cell_verification_failed, "lifting inequality (inside) fails");
            for (int j = js + 1; j <= jm; ++j)
                if (!(u + Rat(w.point_heights[static_cast<std::size_t>(j)]) > 0))
                    throw error(errc::cell_verification_failed, "lifting inequality (outside) fails");
            cell.witness_z = *z;
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

T0Result estimate_t0(const ExponentConfig& cfg, const OrderingData& ord, long long target,
                     const OracleOptions& opts, int max_halvings) {
    Rat t(1, 2);
    int streak = 0;
    Rat first_of_streak;
    std::string last_counts;
    for (int step = 0; step < max_halvings; ++step) {
        ViroWitness w = build_viro_system(cfg, ord, t);
        CountResult res = count_positive_solutions(w.c_t, w.reordered, opts);
        last_counts += (step ? ", " : "") + std::to_string(res.count);
        if (!res.infinite && res.count == target) {
            if (streak == 0) first_of_streak = t;
            ++streak;
            if (streak == 3) {
                ViroWitness best = build_viro_system(cfg, ord, first_of_streak);
                best.cells = enumerate_mixed_cells(best);
                return T0Result{std::move(best), target};
            }
        } else {
            streak = 0;
        }
        t /= 2;
    }
    throw error(errc::t0_not_found,
                "no stable t found after " + std::to_string(max_halvings) +
                    " halvings (target " + std::to_string(target) + ", counts: " + last_counts + ")");
}

} // namespace cdesc
