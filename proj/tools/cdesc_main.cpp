// Command line front end: exact Descartes-type bounds, exact positive
// solution counts, attaining-system construction and planar moduli
// classification for circuit-supported sparse systems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cdesc/generate.hpp"
#include "cdesc/invariants.hpp"
#include "cdesc/json_io.hpp"

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitNotCircuit = 3;
constexpr int kExitRankDeficient = 4;

int exit_code_for(const cdesc::error& e) {
    switch (e.code()) {
        case cdesc::errc::invalid_input:
        case cdesc::errc::dimension_mismatch:
            return kExitInvalidInput;
        case cdesc::errc::not_a_circuit:
        case cdesc::errc::not_full_dimensional:
            return kExitNotCircuit;
        case cdesc::errc::rank_deficient:
            return kExitRankDeficient;
        default:
            return 1;
    }
}

cdesc::InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cdesc::error(cdesc::errc::invalid_input, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return cdesc::parse_instance_text(ss.str());
}

cdesc::CoefficientMatrix require_c(const cdesc::InstanceFile& inst) {
    if (!inst.c)
        throw cdesc::error(cdesc::errc::invalid_input, "instance file has no coefficient matrix 'C'");
    return *inst.c;
}

int run_fuzz(unsigned long long seed, int trials, int n_max, const std::string& repro_path) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, n_max);
    int ran = 0, skipped = 0;
    for (int trial = 0; trial < trials; ++trial) {
        int n = pick_n(rng);
        cdesc::ExponentConfig cfg = cdesc::random_circuit(rng, n, 5);
        cdesc::CoefficientMatrix c = cdesc::random_coefficients(rng, n);
        cdesc::InstanceMetrics metrics;
        try {
            metrics = cdesc::collect_metrics(cfg, c);
        } catch (const cdesc::error& e) {
            ++skipped; // zero Gale row or degree cap; not a soundness issue
            continue;
        }
        ++ran;
        std::vector<std::string> violations = cdesc::check_metrics(metrics);
        if (!violations.empty()) {
            cdesc::json repro;
            repro["seed"] = seed;
            repro["trial"] = trial;
            repro["cfg"] = {{"n", cfg.n}, {"points", cfg.points}};
            cdesc::json rows = cdesc::json::array();
            for (std::size_t i = 0; i < c.c.rows(); ++i) {
                cdesc::json row = cdesc::json::array();
                for (std::size_t j = 0; j < c.c.cols(); ++j)
                    row.push_back(cdesc::rat_to_string(c.c.at(i, j)));
                rows.push_back(row);
            }
            repro["C"] = rows;
            repro["violations"] = violations;
            std::ofstream out(repro_path);
            out << repro.dump(2) << "\n";
            std::cerr << "invariant violation at trial " << trial << "; reproducer written to "
                      << repro_path << "\n";
            for (const auto& v : violations) std::cerr << "  " << v << "\n";
            return 1;
        }
    }
    cdesc::json summary;
    summary["trials"] = trials;
    summary["checked"] = ran;
    summary["skipped"] = skipped;
    summary["violations"] = 0;
    std::cout << summary.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positive-solution bounds and counts for circuit-supported sparse systems"};
    app.require_subcommand(1);

    std::string path;
    std::string ordering_arg;

    auto* cmd_check = app.add_subcommand("check", "validate a configuration and print its Gale data");
    cmd_check->add_option("instance", path, "instance JSON file")->required();

    auto* cmd_bound = app.add_subcommand("bound", "sharp sign-variation bound report");
    cmd_bound->add_option("instance", path, "instance JSON file (needs C)")->required();

    auto* cmd_count = app.add_subcommand("count", "exact positive solution count");
    cmd_count->add_option("instance", path, "instance JSON file (needs C)")->required();

    auto* cmd_sharpen = app.add_subcommand("sharpen", "construct a system attaining the bound");
    cmd_sharpen->add_option("instance", path, "instance JSON file")->required();

    auto* cmd_classify = app.add_subcommand("classify2d", "maximal positive count class of a planar circuit");
    cmd_classify->add_option("instance", path, "instance JSON file")->required();

    int grid = 101;
    std::vector<std::string> range{"-3", "3", "-3", "3"};
    std::string csv_out;
    auto* cmd_region = app.add_subcommand("region-sample", "classify a rational grid in the (b1,b2) chart");
    cmd_region->add_option("--grid", grid, "points per axis")->capture_default_str();
    cmd_region->add_option("--range", range, "b1min b1max b2min b2max")->expected(4);
    cmd_region->add_option("--out", csv_out, "write CSV here instead of stdout");

    unsigned long long seed = 0;
    int trials = 100;
    int n_max = 2;
    std::string repro_path = "fuzz_repro.json";
    auto* cmd_fuzz = app.add_subcommand("fuzz", "randomized soundness checks");
    cmd_fuzz->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd_fuzz->add_option("--trials", trials, "number of instances")->capture_default_str();
    cmd_fuzz->add_option("--n-max", n_max, "maximum dimension")->capture_default_str();
    cmd_fuzz->add_option("--repro", repro_path, "reproducer output path")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_check->parsed()) {
            cdesc::InstanceFile inst = load_instance(path);
            std::cout << cdesc::check_report(inst.cfg).dump(2) << "\n";
        } else if (cmd_bound->parsed()) {
            cdesc::InstanceFile inst = load_instance(path);
            std::cout << cdesc::bound_report(inst.cfg, require_c(inst)).dump(2) << "\n";
        } else if (cmd_count->parsed()) {
            cdesc::InstanceFile inst = load_instance(path);
            std::cout << cdesc::count_report(inst.cfg, require_c(inst)).dump(2) << "\n";
        } else if (cmd_sharpen->parsed()) {
            cdesc::InstanceFile inst = load_instance(path);
            cdesc::GaleVectorB b = cdesc::gale_vector(inst.cfg);
            if (!cdesc::is_circuit(b))
                throw cdesc::error(cdesc::errc::not_a_circuit, "configuration is not a circuit");
            cdesc::OrderingData ord;
            long long target;
            if (inst.ordering) {
                ord = *inst.ordering;
                target = cdesc::descartes_bound(b, ord);
            } else {
                auto best = cdesc::best_ordering(b);
                target = best.first;
                ord = best.second;
            }
            cdesc::T0Result result = cdesc::estimate_t0(inst.cfg, ord, target);
            std::cout << cdesc::witness_report(result).dump(2) << "\n";
        } else if (cmd_classify->parsed()) {
            cdesc::InstanceFile inst = load_instance(path);
            std::cout << cdesc::classify_report(inst.cfg).dump(2) << "\n";
        } else if (cmd_region->parsed()) {
            auto samples = cdesc::sample_region(grid, cdesc::rat_from_string(range[0]),
                                                cdesc::rat_from_string(range[1]),
                                                cdesc::rat_from_string(range[2]),
                                                cdesc::rat_from_string(range[3]));
            std::string csv = cdesc::region_csv(samples);
            if (csv_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(csv_out);
                out << csv;
            }
        } else if (cmd_fuzz->parsed()) {
            return run_fuzz(seed, trials, n_max, repro_path);
        }
    } catch (const cdesc::error& e) {
        std::cerr << "error (" << cdesc::errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
