#include "cdesc/descartes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cdesc {

namespace {

template <class T>
int sign_variation_impl(const std::vector<T>& seq) {
    int count = 0, last = 0;
    for (const auto& x : seq) {
        int s = sign_of(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace

int sign_variation(const std::vector<Rat>& seq) { return sign_variation_impl(seq); }
int sign_variation(const std::vector<Int>& seq) { return sign_variation_impl(seq); }

std::vector<int> indices_of_sign_changes(const std::vector<Int>& seq) {
    std::vector<int> out;
    int first = -1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!seq[i].is_zero()) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) throw error(errc::degenerate_sequence, "all-zero sequence");
    out.push_back(first);
    int last_sign = sign_of(seq[static_cast<std::size_t>(first)]);
    for (std::size_t i = static_cast<std::size_t>(first) + 1; i < seq.size(); ++i) {
        int s = sign_of(seq[i]);
        if (s != 0 && s != last_sign) {
            out.push_back(static_cast<int>(i));
            last_sign = s;
        }
    }
    return out;
}

OrderingData ordering_from_classes(std::vector<std::vector<int>> classes, int universe) {
    std::set<int> seen;
    std::size_t total = 0;
    for (auto& k : classes) {
        if (k.empty()) throw error(errc::invalid_input, "empty ordering class");
        std::sort(k.begin(), k.end());
        for (int j : k) {
            if (j < 0 || j >= universe) throw error(errc::invalid_input, "ordering index out of range");
            seen.insert(j);
        }
        total += k.size();
    }
    if (seen.size() != total || total != static_cast<std::size_t>(universe))
        throw error(errc::invalid_input, "ordering classes must partition the index set");
    OrderingData ord;
    ord.classes = std::move(classes);
    for (const auto& k : ord.classes) {
        ord.sigma_bar.push_back(k.front());
        ord.sigma.insert(ord.sigma.end(), k.begin(), k.end());
    }
    ord.epsilon = 1;
    return ord;
}

OrderingData ordering_from_permutation(const std::vector<int>& perm) {
    std::vector<std::vector<int>> classes;
    classes.reserve(perm.size());
    for (int j : perm) classes.push_back({j});
    return ordering_from_classes(std::move(classes), static_cast<int>(perm.size()));
}

OrderingData reversed(const OrderingData& ord) {
    OrderingData out;
    out.classes.assign(ord.classes.rbegin(), ord.classes.rend());
    for (const auto& k : out.classes) {
        out.sigma_bar.push_back(k.front());
        out.sigma.insert(out.sigma.end(), k.begin(), k.end());
    }
    out.epsilon = -ord.epsilon;
    return out;
}

OrderingData compute_ordering(const GaleDualP& p) {
    if (!p.normalized)
        throw error(errc::invalid_input, "compute_ordering expects a normalized Gale dual");
    const std::size_t m = p.rows.size();
    // Group by collinearity. Within the open half plane x > 0, rows are
    // collinear exactly when positively proportional, so slopes key the
    // classes.
    std::map<Rat, std::vector<int>> by_slope;
    for (std::size_t j = 0; j < m; ++j) {
        const auto& r = p.rows[j];
        if (r[0].is_zero() && r[1].is_zero())
            throw error(errc::zero_gale_row, "Gale dual row is zero");
        by_slope[r[1] / r[0]].push_back(static_cast<int>(j));
    }
    std::vector<std::vector<int>> classes;
    classes.reserve(by_slope.size());
    for (auto& [slope, members] : by_slope) classes.push_back(std::move(members));
    return ordering_from_classes(std::move(classes), static_cast<int>(m));
}

MuSequenceData mu_sequence(const GaleVectorB& b, const OrderingData& ord) {
    MuSequenceData out;
    Int acc = 0;
    for (const auto& k : ord.classes) {
        Int lam = 0;
        for (int j : k) lam += b.b[static_cast<std::size_t>(j)];
        acc += lam;
        out.lambda.push_back(lam);
        out.mu.push_back(acc);
    }
    out.sgnvar_lambda = sign_variation(out.lambda);
    out.sgnvar_mu = sign_variation(out.mu);
    bool mu_zero = std::all_of(out.mu.begin(), out.mu.end(), [](const Int& x) { return x.is_zero(); });
    if (!mu_zero) out.change_indices = indices_of_sign_changes(out.mu);
    return out;
}

OrderingData orient_for_lambda(const OrderingData& ord, const GaleVectorB& b) {
    MuSequenceData mu = mu_sequence(b, ord);
    for (const auto& lam : mu.lambda) {
        if (lam.is_zero()) continue;
        return lam > 0 ? ord : reversed(ord);
    }
    return ord;
}

long long descartes_bound(const GaleVectorB& b, const OrderingData& ord) {
    return 1 + mu_sequence(b, ord).sgnvar_mu;
}

namespace {

int max_sgnvar_of_prefix_sums(std::vector<Int> values) {
    std::sort(values.begin(), values.end());
    int best = 0;
    do {
        Int acc = 0;
        int count = 0, last = 0;
        for (const auto& v : values) {
            acc += v;
            int s = sign_of(acc);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        best = std::max(best, count);
    } while (std::next_permutation(values.begin(), values.end()));
    return best;
}

} // namespace

long long max_bound_over_orderings(const GaleVectorB& b) {
    return 1 + max_sgnvar_of_prefix_sums(b.b);
}

std::pair<long long, OrderingData> best_ordering(const GaleVectorB& b) {
    std::vector<Int> values = b.b;
    std::sort(values.begin(), values.end());
    int best = -1;
    std::vector<Int> best_values;
    do {
        Int acc = 0;
        int count = 0, last = 0;
        for (const auto& v : values) {
            acc += v;
            int s = sign_of(acc);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        if (count > best) {
            best = count;
            best_values = values;
        }
    } while (std::next_permutation(values.begin(), values.end()));

    // Map the winning value sequence back to indices: smallest unused
    // index carrying each value, so the result is deterministic.
    std::vector<bool> used(b.b.size(), false);
    std::vector<int> perm;
    for (const auto& v : best_values)
        for (std::size_t j = 0; j < b.b.size(); ++j)
            if (!used[j] && b.b[j] == v) {
                used[j] = true;
                perm.push_back(static_cast<int>(j));
                break;
            }
    return {1 + best, ordering_from_permutation(perm)};
}

long long old_bound(const GaleVectorB& b, const OrderingData& ord) {
    MuSequenceData mu = mu_sequence(b, ord);
    Volumes v = normalized_volumes(b);
    Int vol = v.vol_za;
    Int sv(mu.sgnvar_lambda);
    Int m = std::max(sv, vol);
    return m.convert_to<long long>();
}

SequenceInequalities sequence_inequalities(const std::vector<Int>& lambda) {
    bool all_zero = std::all_of(lambda.begin(), lambda.end(), [](const Int& x) { return x.is_zero(); });
    if (lambda.empty() || all_zero)
        throw error(errc::degenerate_sequence, "lambda must be a nonzero sequence");
    Int total = std::accumulate(lambda.begin(), lambda.end(), Int(0));
    if (!total.is_zero())
        throw error(errc::degenerate_sequence, "lambda must sum to zero");
    std::vector<Int> mu;
    mu.reserve(lambda.size());
    Int acc = 0;
    Int positive_sum = 0;
    for (const auto& x : lambda) {
        acc += x;
        mu.push_back(acc);
        if (x > 0) positive_sum += x;
    }
    int svl = sign_variation(lambda);
    int svm = sign_variation(mu);
    SequenceInequalities out;
    out.ok_refines = (1 + svm) <= svl;
    out.ok_mod2 = ((svl - (1 + svm)) % 2) == 0;
    out.ok_volume = Int(1 + svm) <= positive_sum;
    return out;
}

ParityCertificate parity_certificate(const GaleVectorB& b, const OrderingData& ord) {
    MuSequenceData mu = mu_sequence(b, ord);
    ParityCertificate out;
    out.applies = !mu.lambda.front().is_zero() && !mu.lambda.back().is_zero();
    out.parity = (1 + mu.sgnvar_mu) % 2;
    out.positive_certified = (mu.sgnvar_mu % 2) == 0;
    return out;
}

} // namespace cdesc
