#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thue/packing.hpp"
#include "thue/verifier.hpp"

namespace thue {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"radius": 1.0, "domain": {...}, "centers": [[x, y], ...]} with every
/// number written to 17 significant digits, so parsing is bit-exact.
std::string packing_to_json(const PackingConfiguration& config);

/// Throws FormatError on malformed input or a radius other than 1. A
/// missing margin defaults to 4 for boxes and 0 for tori.
PackingConfiguration packing_from_json(const std::string& text);

/// One "x,y" pair per line; blank lines, '#' comments and a non-numeric
/// header line are ignored.
PackingConfiguration packing_from_csv(const std::string& text, const Domain& domain);

nlohmann::json report_to_json(const Report& report);

/// Violation positions from a report JSON, in report order.
std::vector<Point> violation_points(const nlohmann::json& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Reads JSON, or CSV when the path ends in ".csv" (which then needs
/// `csv_domain`).
PackingConfiguration load_packing(const std::string& path, const std::optional<Domain>& csv_domain = std::nullopt);

}  // namespace thue
