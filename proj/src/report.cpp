#include "bohr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bohr {

namespace {

void write_json(std::ostringstream& os, const nlohmann::ordered_json& value, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (value.type()) {
        case nlohmann::json::value_t::object: {
            if (value.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) {
                    os << ",\n";
                }
                first = false;
                os << pad << nlohmann::json(key).dump() << ": ";
                write_json(os, item, depth + 1);
            }
            os << "\n" << close_pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (value.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            bool first = true;
            for (const auto& item : value) {
                if (!first) {
                    os << ",\n";
                }
                first = false;
                os << pad;
                write_json(os, item, depth + 1);
            }
            os << "\n" << close_pad << "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double x = value.get<double>();
            if (std::isfinite(x)) {
                os << format_number(x);
            } else {
                os << "null";
            }
            return;
        }
        default:
            os << value.dump();
            return;
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string to_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    doc["params"] = report.params;
    doc["results"] = report.results;
    doc["seed"] = report.seed;
    doc["version"] = report.version;
    std::ostringstream os;
    write_json(os, doc, 0);
    os << "\n";
    return os.str();
}

std::string to_csv(const RunReport& report) {
    std::ostringstream os;
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << csv_field(row[i]);
        }
        os << '\n';
    };
    write_row(report.table.header);
    for (const auto& row : report.table.rows) {
        write_row(row);
    }
    return os.str();
}

}  // namespace bohr
