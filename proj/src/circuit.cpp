#include "cdesc/circuit.hpp"

#include <set>

namespace cdesc {

ExponentConfig make_config(int n, std::vector<std::vector<long long>> points) {
    if (n < 1) throw error(errc::invalid_input, "dimension must be positive");
    if (points.size() != static_cast<std::size_t>(n) + 2)
        throw error(errc::invalid_input, "a configuration needs exactly n+2 points");
    for (const auto& p : points)
        if (p.size() != static_cast<std::size_t>(n))
            throw error(errc::invalid_input, "point dimension mismatch");
    std::set<std::vector<long long>> seen(points.begin(), points.end());
    if (seen.size() != points.size())
        throw error(errc::invalid_input, "configuration points must be distinct");
    return ExponentConfig{n, std::move(points)};
}

Mat build_matrix_A(const ExponentConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    Mat a(n + 1, n + 2);
    for (std::size_t j = 0; j < n + 2; ++j) {
        a.at(0, j) = 1;
        for (std::size_t i = 0; i < n; ++i) a.at(i + 1, j) = Int(cfg.points[j][i]);
    }
    return a;
}

GaleVectorB gale_vector(const ExponentConfig& cfg) {
    Mat a = build_matrix_A(cfg);
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    GaleVectorB out;
    out.b.resize(n + 2);
    bool all_zero = true;
    for (std::size_t j = 0; j < n + 2; ++j) {
        Mat minor(n + 1, n + 1);
        for (std::size_t c = 0, cc = 0; c < n + 2; ++c) {
            if (c == j) continue;
            for (std::size_t r = 0; r <= n; ++r) minor.at(r, cc) = a.at(r, c);
            ++cc;
        }
        Rat d = determinant(minor);
        out.b[j] = (j % 2 == 0) ? rat_num(d) : -rat_num(d);
        if (!out.b[j].is_zero()) all_zero = false;
    }
    if (all_zero)
        throw error(errc::not_full_dimensional, "configuration does not span dimension n");
    return out;
}

bool is_circuit(const GaleVectorB& b) {
    for (const auto& x : b.b)
        if (x.is_zero()) return false;
    return true;
}

bool is_circuit(const ExponentConfig& cfg) { return is_circuit(gale_vector(cfg)); }

Volumes normalized_volumes(const GaleVectorB& b) {
    Volumes v{0, 0, 0};
    for (const auto& x : b.b) {
        if (x > 0) v.vol_z += x;
        Int ax = x < 0 ? Int(-x) : x;
        v.index = boost::multiprecision::gcd(v.index, ax);
    }
    if (v.index.is_zero())
        throw error(errc::not_full_dimensional, "zero Gale vector");
    v.vol_za = v.vol_z / v.index;
    return v;
}

Volumes normalized_volumes(const ExponentConfig& cfg) {
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b))
        throw error(errc::not_a_circuit, "normalized volumes require a circuit");
    return normalized_volumes(b);
}

} // namespace cdesc
