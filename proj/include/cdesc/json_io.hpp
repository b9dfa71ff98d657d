#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "cdesc/circuit.hpp"
#include "cdesc/descartes.hpp"
#include "cdesc/galedual.hpp"
#include "cdesc/moduli2d.hpp"
#include "cdesc/oracle.hpp"
#include "cdesc/viro.hpp"

namespace cdesc {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (plain "p" for integers) so nothing
// is ever rounded.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
Rat rat_from_json(const json& j);

struct InstanceFile {
    ExponentConfig cfg;
    std::optional<CoefficientMatrix> c;
    std::optional<OrderingData> ordering;
};

InstanceFile parse_instance(const json& j);
InstanceFile parse_instance_text(const std::string& text);

json check_report(const ExponentConfig& cfg);
json bound_report(const ExponentConfig& cfg, const CoefficientMatrix& c);
json count_report(const ExponentConfig& cfg, const CoefficientMatrix& c,
                  const OracleOptions& opts = {});
json witness_report(const T0Result& result);
json classify_report(const ExponentConfig& cfg);

} // namespace cdesc
