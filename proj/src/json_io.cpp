#include "cdesc/json_io.hpp"

namespace cdesc {

std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&]() { return error(errc::invalid_input, "malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den.is_zero()) throw bad();
        return Rat(num) / Rat(den);
    } catch (const std::exception&) {
        throw bad();
    }
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw error(errc::invalid_input, "rationals must be strings \"p/q\" or integers");
}

namespace {

ExponentConfig config_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("points"))
        throw error(errc::invalid_input, "configuration needs fields 'n' and 'points'");
    int n = j.at("n").get<int>();
    std::vector<std::vector<long long>> pts;
    for (const auto& p : j.at("points")) pts.push_back(p.get<std::vector<long long>>());
    return make_config(n, std::move(pts));
}

json config_to_json(const ExponentConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["points"] = cfg.points;
    return j;
}

json int_vec_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json rows_to_json(const std::vector<std::array<Rat, 2>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({rat_to_string(r[0]), rat_to_string(r[1])});
    return out;
}

} // namespace

InstanceFile parse_instance(const json& j) {
    InstanceFile out;
    const json& cfg_json = j.contains("cfg") ? j.at("cfg") : j;
    out.cfg = config_from_json(cfg_json);
    if (j.contains("C")) {
        const json& cj = j.at("C");
        if (!cj.is_array() || cj.empty())
            throw error(errc::invalid_input, "'C' must be a non-empty array of rows");
        Mat m(cj.size(), cj.front().size());
        for (std::size_t i = 0; i < cj.size(); ++i) {
            if (cj[i].size() != m.cols())
                throw error(errc::invalid_input, "ragged coefficient matrix");
            for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = rat_from_json(cj[i][k]);
        }
        out.c = make_coefficients(out.cfg.n, std::move(m));
    }
    if (j.contains("ordering")) {
        const json& oj = j.at("ordering");
        int universe = out.cfg.n + 2;
        std::vector<std::vector<int>> classes;
        if (oj.is_array() && !oj.empty() && oj.front().is_array()) {
            for (const auto& k : oj) classes.push_back(k.get<std::vector<int>>());
        } else {
            for (const auto& j2 : oj.get<std::vector<int>>()) classes.push_back({j2});
        }
        out.ordering = ordering_from_classes(std::move(classes), universe);
    }
    return out;
}

InstanceFile parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text); // exception message carries the byte offset
    } catch (const json::parse_error& e) {
        throw error(errc::invalid_input, std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_instance(j);
    } catch (const json::exception& e) {
        throw error(errc::invalid_input, std::string("bad instance field: ") + e.what());
    }
}

json check_report(const ExponentConfig& cfg) {
    json out;
    out["cfg"] = config_to_json(cfg);
    GaleVectorB b = gale_vector(cfg);
    out["B"] = int_vec_to_json(b.b);
    bool circuit = is_circuit(b);
    out["is_circuit"] = circuit;
    if (circuit) {
        Volumes v = normalized_volumes(b);
        out["vol_z"] = v.vol_z.str();
        out["index"] = v.index.str();
        out["vol_za"] = v.vol_za.str();
    }
    return out;
}

json bound_report(const ExponentConfig& cfg, const CoefficientMatrix& c) {
    GaleVectorB b = gale_vector(cfg);
    if (!is_circuit(b)) throw error(errc::not_a_circuit, "configuration is not a circuit");
    GaleDualP p = gale_dual_of_C(c);
    json out;
    out["B"] = int_vec_to_json(b.b);
    Volumes v = normalized_volumes(b);
    out["bound_volume"] = v.vol_za.str();
    bool feasible = feasibility(p);
    out["feasible"] = feasible;
    if (!feasible) {
        out["bound_new"] = 0; // no positive vector in the kernel at all
        return out;
    }
    GaleDualP pn = normalize(p);
    OrderingData ord = orient_for_lambda(compute_ordering(pn), b);
    MuSequenceData mu = mu_sequence(b, ord);
    ParityCertificate pc = parity_certificate(b, ord);
    out["P"] = rows_to_json(pn.rows);
    out["k"] = ord.classes.size();
    out["classes"] = ord.classes;
    out["sigma"] = ord.sigma;
    out["epsilon"] = ord.epsilon;
    out["lambda"] = int_vec_to_json(mu.lambda);
    out["mu"] = int_vec_to_json(mu.mu);
    out["sgnvar_mu"] = mu.sgnvar_mu;
    out["sgnvar_lambda"] = mu.sgnvar_lambda;
    out["bound_new"] = descartes_bound(b, ord);
    out["bound_old"] = old_bound(b, ord);
    out["parity_applies"] = pc.applies;
    out["parity"] = pc.parity;
    out["positive_certified"] = pc.positive_certified;
    return out;
}

json count_report(const ExponentConfig& cfg, const CoefficientMatrix& c, const OracleOptions& opts) {
    CountResult res = count_positive_solutions(c, cfg, opts);
    json out;
    out["count"] = res.count;
    out["infinite"] = res.infinite;
    json roots = json::array();
    for (const auto& r : res.roots) {
        json e;
        e["lo"] = rat_to_string(r.lo);
        e["hi"] = rat_to_string(r.hi);
        e["multiplicity"] = r.multiplicity;
        roots.push_back(e);
    }
    out["roots"] = roots;
    return out;
}

json witness_report(const T0Result& result) {
    const ViroWitness& w = result.witness;
    json out;
    out["m"] = w.m;
    out["bound"] = w.bound;
    out["oracle_count"] = result.count;
    out["t"] = rat_to_string(w.t);
    out["sigma"] = w.perm;
    out["B"] = int_vec_to_json(w.b.b);
    out["mu"] = int_vec_to_json(w.mu.mu);
    out["alphas"] = int_vec_to_json(w.alphas);
    out["blocks"] = w.blocks;
    json hs = json::array();
    for (const auto& h : w.heights) hs.push_back(h.str());
    out["heights"] = hs;
    json cells = json::array();
    for (const auto& cell : w.cells) {
        json cj;
        cj["s"] = cell.s;
        cj["summands"] = cell.summands;
        cj["volume"] = cell.volume.str();
        cj["decorated"] = cell.decorated;
        json z = json::array();
        for (const auto& zi : cell.witness_z) z.push_back(rat_to_string(zi));
        cj["z"] = z;
        cells.push_back(cj);
    }
    out["cells"] = cells;
    json ct = json::array();
    for (std::size_t i = 0; i < w.c_t.c.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < w.c_t.c.cols(); ++j) row.push_back(rat_to_string(w.c_t.c.at(i, j)));
        ct.push_back(row);
    }
    out["C_t"] = ct;
    out["P_t"] = rows_to_json(w.p_rows);
    return out;
}

json classify_report(const ExponentConfig& cfg) {
    PlanarClass cls = classify_planar(cfg);
    json out;
    out["max_positive"] = cls.max_positive;
    out["exceptional"] = cls.exceptional;
    json rep = json::array();
    for (const auto& x : cls.fundamental_rep) rep.push_back(rat_to_string(x));
    out["fundamental_rep"] = rep;
    out["class"] = planar_kind_name(cls.kind);
    return out;
}

} // namespace cdesc
