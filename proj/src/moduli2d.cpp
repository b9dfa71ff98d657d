#include "cdesc/moduli2d.hpp"

#include <algorithm>
#include <sstream>

namespace cdesc {

std::array<Rat, 4> fundamental_representative(const std::array<Rat, 4>& b) {
    Rat max_abs(0), max_val = b[0];
    for (const auto& x : b) {
        Rat a = x < 0 ? Rat(-x) : x;
        if (a > max_abs) max_abs = a;
        if (x > max_val) max_val = x;
    }
    if (max_abs.is_zero())
        throw error(errc::invalid_input, "zero Gale vector");
    // Gale vectors are defined up to a (possibly negative) scaling; pick
    // the sign that puts the largest entry at +1.
    Rat scale = (max_val == max_abs) ? Rat(1) / max_abs : Rat(-1) / max_abs;
    std::array<Rat, 4> rep;
    for (std::size_t i = 0; i < 4; ++i) rep[i] = b[i] * scale;
    std::sort(rep.begin(), rep.end());
    return rep;
}

PlanarClass classify_from_gale(const std::array<Rat, 4>& b) {
    PlanarClass out;
    out.b = b;
    for (const auto& x : b)
        if (x.is_zero()) {
            out.kind = PlanarKind::boundary;
            return out;
        }
    out.fundamental_rep = fundamental_representative(b);
    const std::array<Rat, 4> balanced{Rat(-1), Rat(-1), Rat(1), Rat(1)};
    out.exceptional = (out.fundamental_rep == balanced);
    Rat product = b[0] * b[1] * b[2] * b[3];
    if (product > 0 && !out.exceptional) {
        out.max_positive = 3;
        out.kind = PlanarKind::three;
    } else {
        out.max_positive = 2;
        out.kind = out.exceptional ? PlanarKind::exceptional : PlanarKind::two;
    }
    return out;
}

PlanarClass classify_planar(const ExponentConfig& cfg) {
    if (cfg.n != 2)
        throw error(errc::invalid_input, "planar classification needs n = 2");
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b))
        throw error(errc::not_a_circuit, "configuration is not a circuit");
    return classify_from_gale({Rat(b.b[0]), Rat(b.b[1]), Rat(b.b[2]), Rat(b.b[3])});
}

std::vector<RegionSample> sample_region(int grid, const Rat& b1_min, const Rat& b1_max,
                                        const Rat& b2_min, const Rat& b2_max) {
    if (grid < 2) throw error(errc::invalid_input, "grid resolution must be at least 2");
    std::vector<RegionSample> out;
    out.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
    Rat step1 = (b1_max - b1_min) / Rat(grid - 1);
    Rat step2 = (b2_max - b2_min) / Rat(grid - 1);
    for (int i = 0; i < grid; ++i) {
        Rat b1 = b1_min + step1 * Rat(i);
        for (int j = 0; j < grid; ++j) {
            Rat b2 = b2_min + step2 * Rat(j);
            Rat b0 = Rat(-1) - b1 - b2;
            PlanarClass cls = classify_from_gale({b0, b1, b2, Rat(1)});
            out.push_back({b1, b2, cls.kind});
        }
    }
    return out;
}

const char* planar_kind_name(PlanarKind k) {
    switch (k) {
        case PlanarKind::two: return "2";
        case PlanarKind::three: return "3";
        case PlanarKind::boundary: return "boundary";
        case PlanarKind::exceptional: return "exceptional";
    }
    return "?";
}

std::string region_csv(const std::vector<RegionSample>& samples) {
    std::ostringstream os;
    os << "b1,b2,class\n";
    for (const auto& s : samples) {
        os << rat_num(s.b1);
        if (rat_den(s.b1) != 1) os << '/' << rat_den(s.b1);
        os << ',';
        os << rat_num(s.b2);
        if (rat_den(s.b2) != 1) os << '/' << rat_den(s.b2);
        os << ',' << planar_kind_name(s.kind) << '\n';
    }
    return os.str();
}

} // namespace cdesc
