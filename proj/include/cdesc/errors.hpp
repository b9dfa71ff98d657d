#pragma once

#include <stdexcept>
#include <string>

namespace cdesc {

// Failure categories surfaced through the library API and mapped to CLI
// exit codes. Everything that can go wrong for structural reasons (as
// opposed to programmer error) throws cdesc::error with one of these.
enum class errc {
    invalid_input,
    dimension_mismatch,
    not_full_dimensional,
    not_a_circuit,
    rank_deficient,
    infeasible,
    zero_gale_row,
    degenerate_sequence,
    degree_limit_exceeded,
    height_construction_failed,
    cell_verification_failed,
    t0_not_found,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_input: return "invalid_input";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::not_full_dimensional: return "not_full_dimensional";
        case errc::not_a_circuit: return "not_a_circuit";
        case errc::rank_deficient: return "rank_deficient";
        case errc::infeasible: return "infeasible";
        case errc::zero_gale_row: return "zero_gale_row";
        case errc::degenerate_sequence: return "degenerate_sequence";
        case errc::degree_limit_exceeded: return "degree_limit_exceeded";
        case errc::height_construction_failed: return "height_construction_failed";
        case errc::cell_verification_failed: return "cell_verification_failed";
        case errc::t0_not_found: return "t0_not_found";
    }
    return "unknown";
}

} // namespace cdesc
