#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace bohr {

inline constexpr const char* kToolVersion = "bohrlab 1.0.0";

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Outcome of one CLI command. The JSON form carries the top-level keys
/// command, params, results, seed, version; the CSV form is the command's
/// table. Identical parameters and seed give byte-identical output.
struct RunReport {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    CsvTable table;
    int exit_code = 0;
};

/// 17 significant digits; non-finite values print as nan/inf.
std::string format_number(double value);

/// RFC 4180 quoting: fields containing a comma, quote or line break are
/// quoted with embedded quotes doubled.
std::string csv_field(const std::string& field);

/// Two-space indented JSON with doubles printed to 17 significant digits.
std::string to_json(const RunReport& report);

/// Header row plus data rows, CRLF-free.
std::string to_csv(const RunReport& report);

}  // namespace bohr
