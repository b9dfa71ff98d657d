#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdesc/invariants.hpp"
#include "cdesc/json_io.hpp"

namespace py = pybind11;

namespace {

cdesc::ExponentConfig config_of(const std::vector<std::vector<long long>>& points) {
    if (points.empty()) throw cdesc::error(cdesc::errc::invalid_input, "empty point list");
    int n = static_cast<int>(points.front().size());
    return cdesc::make_config(n, points);
}

cdesc::CoefficientMatrix coeffs_of(int n, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw cdesc::error(cdesc::errc::invalid_input, "empty coefficient matrix");
    cdesc::Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw cdesc::error(cdesc::errc::invalid_input, "ragged coefficient matrix");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = cdesc::rat_from_string(rows[i][j]);
    }
    return cdesc::make_coefficients(n, std::move(m));
}

cdesc::OrderingData ordering_of(const std::vector<std::vector<int>>& classes, int universe) {
    return cdesc::ordering_from_classes(classes, universe);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Descartes-type bounds and counts for circuit-supported sparse systems";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const cdesc::error& e) {
            std::string msg = std::string(cdesc::errc_name(e.code())) + ": " + e.what();
            PyErr_SetString(PyExc_ValueError, msg.c_str());
        }
    });

    m.def(
        "gale_vector",
        [](const std::vector<std::vector<long long>>& points) {
            cdesc::GaleVectorB b = cdesc::gale_vector(config_of(points));
            std::vector<std::string> out;
            for (const auto& x : b.b) out.push_back(x.str());
            return out;
        },
        py::arg("points"), "Signed-minor Gale vector of the configuration (as decimal strings).");

    m.def(
        "is_circuit",
        [](const std::vector<std::vector<long long>>& points) {
            return cdesc::is_circuit(config_of(points));
        },
        py::arg("points"));

    m.def(
        "normalized_volumes",
        [](const std::vector<std::vector<long long>>& points) {
            cdesc::Volumes v = cdesc::normalized_volumes(config_of(points));
            py::dict out;
            out["vol_z"] = v.vol_z.str();
            out["index"] = v.index.str();
            out["vol_za"] = v.vol_za.str();
            return out;
        },
        py::arg("points"));

    m.def(
        "max_bound",
        [](const std::vector<std::vector<long long>>& points) {
            return cdesc::max_bound_over_orderings(cdesc::gale_vector(config_of(points)));
        },
        py::arg("points"), "Sharp bound maximized over all orderings.");

    m.def(
        "check_json",
        [](const std::vector<std::vector<long long>>& points) {
            return cdesc::check_report(config_of(points)).dump();
        },
        py::arg("points"));

    m.def(
        "bound_json",
        [](const std::vector<std::vector<long long>>& points,
           const std::vector<std::vector<std::string>>& c) {
            cdesc::ExponentConfig cfg = config_of(points);
            return cdesc::bound_report(cfg, coeffs_of(cfg.n, c)).dump();
        },
        py::arg("points"), py::arg("coefficients"));

    m.def(
        "count_json",
        [](const std::vector<std::vector<long long>>& points,
           const std::vector<std::vector<std::string>>& c, int max_degree) {
            cdesc::ExponentConfig cfg = config_of(points);
            cdesc::OracleOptions opts;
            opts.max_degree = max_degree;
            return cdesc::count_report(cfg, coeffs_of(cfg.n, c), opts).dump();
        },
        py::arg("points"), py::arg("coefficients"), py::arg("max_degree") = 512);

    m.def(
        "sharpen_json",
        [](const std::vector<std::vector<long long>>& points,
           const std::optional<std::vector<std::vector<int>>>& ordering, int max_degree) {
            cdesc::ExponentConfig cfg = config_of(points);
            cdesc::GaleVectorB b = cdesc::gale_vector(cfg);
            if (!cdesc::is_circuit(b))
                throw cdesc::error(cdesc::errc::not_a_circuit, "configuration is not a circuit");
            cdesc::OracleOptions opts;
            opts.max_degree = max_degree;
            cdesc::OrderingData ord;
            long long target;
            if (ordering) {
                ord = ordering_of(*ordering, cfg.n + 2);
                target = cdesc::descartes_bound(b, ord);
            } else {
                auto best = cdesc::best_ordering(b);
                target = best.first;
                ord = best.second;
            }
            cdesc::T0Result res = cdesc::estimate_t0(cfg, ord, target, opts);
            return cdesc::witness_report(res).dump();
        },
        py::arg("points"), py::arg("ordering") = std::nullopt, py::arg("max_degree") = 512);

    m.def(
        "classify2d_json",
        [](const std::vector<std::vector<long long>>& points) {
            return cdesc::classify_report(config_of(points)).dump();
        },
        py::arg("points"));

    m.def(
        "region_csv",
        [](int grid, const std::string& b1_min, const std::string& b1_max,
           const std::string& b2_min, const std::string& b2_max) {
            auto samples = cdesc::sample_region(grid, cdesc::rat_from_string(b1_min),
                                                cdesc::rat_from_string(b1_max),
                                                cdesc::rat_from_string(b2_min),
                                                cdesc::rat_from_string(b2_max));
            return cdesc::region_csv(samples);
        },
        py::arg("grid") = 101, py::arg("b1_min") = "-3", py::arg("b1_max") = "3",
        py::arg("b2_min") = "-3", py::arg("b2_max") = "3");
}
