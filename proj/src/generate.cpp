#include "cdesc/generate.hpp"

#include <set>

namespace cdesc {

ExponentConfig random_circuit(std::mt19937_64& rng, int n, int coord_max) {
    std::uniform_int_distribution<long long> coord(0, coord_max);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::set<std::vector<long long>> pts;
        while (pts.size() < static_cast<std::size_t>(n) + 2) {
            std::vector<long long> p(static_cast<std::size_t>(n));
            for (auto& x : p) x = coord(rng);
            pts.insert(std::move(p));
        }
        ExponentConfig cfg{n, std::vector<std::vector<long long>>(pts.begin(), pts.end())};
        try {
            if (is_circuit(cfg)) return cfg;
        } catch (const error&) {
            // not full-dimensional; resample
        }
    }
    throw error(errc::invalid_input, "failed to sample a circuit");
}

CoefficientMatrix random_coefficients(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 2);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(num(rng), den(rng));
        if (rank(m) == static_cast<std::size_t>(n)) return make_coefficients(n, std::move(m));
    }
    throw error(errc::invalid_input, "failed to sample a rank-n coefficient matrix");
}

std::vector<Int> random_zero_sum_sequence(std::mt19937_64& rng, int length, int magnitude) {
    std::uniform_int_distribution<int> val(-magnitude, magnitude);
    while (true) {
        std::vector<Int> seq(static_cast<std::size_t>(length));
        Int total = 0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            seq[i] = val(rng);
            total += seq[i];
        }
        seq.back() = -total;
        bool nonzero = false;
        for (const auto& x : seq)
            if (!x.is_zero()) nonzero = true;
        if (nonzero) return seq;
    }
}

} // namespace cdesc
