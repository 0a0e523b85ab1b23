#pragma once

// Serializable output document produced by the command-line tool: one
// command name, the parameters it ran with, equal-length named numeric
// columns, and a metadata block (tool version plus the numerical settings
// in effect).  JSON is the primary format; CSV is a flat export with the
// non-columnar fields as '#' comment lines.  All number formatting is
// locale-independent ('.' decimal separator always).

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "su11/physapp.hpp"

namespace su11 {

inline constexpr const char* kSchemaId = "su11-oscillator/1";
inline constexpr const char* kToolVersion = "1.0.0";

// Shortest round-trip decimal form, independent of the global locale.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct OutputDocument {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    nlohmann::json metadata = nlohmann::json::object();

    void add_column(std::string name, std::vector<double> values) {
        column_names.push_back(std::move(name));
        columns.push_back(std::move(values));
    }

    // Shape invariants: a named command, matching name/column counts, all
    // columns the same length, params and metadata objects, and a version
    // string in the metadata.
    void validate() const {
        if (command.empty())
            throw std::invalid_argument("OutputDocument: empty command");
        if (!params.is_object())
            throw std::invalid_argument("OutputDocument: params not an object");
        if (!metadata.is_object() || !metadata.contains("version") ||
            !metadata["version"].is_string())
            throw std::invalid_argument(
                "OutputDocument: metadata must carry a version string");
        if (column_names.size() != columns.size())
            throw std::invalid_argument(
                "OutputDocument: name/column count mismatch");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (column_names[i].empty())
                throw std::invalid_argument("OutputDocument: unnamed column");
            if (columns[i].size() != columns[0].size())
                throw std::invalid_argument(
                    "OutputDocument: column length mismatch");
        }
    }

    nlohmann::json to_json() const {
        validate();
        nlohmann::json j;
        j["schema"] = kSchemaId;
        j["command"] = command;
        j["params"] = params;
        j["columns"] = nlohmann::json::array();
        for (std::size_t i = 0; i < columns.size(); ++i)
            j["columns"].push_back(
                {{"name", column_names[i]}, {"values", columns[i]}});
        j["metadata"] = metadata;
        return j;
    }

    std::string to_csv() const {
        validate();
        std::string out;
        out += "# schema=";
        out += kSchemaId;
        out += "\n# command=" + command + "\n";
        auto scalar = [](const nlohmann::json& v) {
            return v.is_string() ? v.get<std::string>() : v.dump();
        };
        for (const auto& [key, value] : params.items())
            out += "# param " + key + "=" + scalar(value) + "\n";
        for (const auto& [key, value] : metadata.items()) {
            if (value.is_object()) {
                for (const auto& [sub, subval] : value.items())
                    out += "# meta " + key + "." + sub + "=" + scalar(subval) +
                           "\n";
            } else {
                out += "# meta " + key + "=" + scalar(value) + "\n";
            }
        }
        for (std::size_t i = 0; i < column_names.size(); ++i)
            out += (i ? "," : "") + column_names[i];
        out += "\n";
        const std::size_t rows = columns.empty() ? 0 : columns[0].size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < columns.size(); ++i)
                out += (i ? "," : "") + format_double(columns[i][r]);
            out += "\n";
        }
        return out;
    }

    // Parse and re-validate a serialized document; throws
    // std::invalid_argument on any schema violation.
    static OutputDocument from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("schema") ||
            !j["schema"].is_string() ||
            j["schema"].get<std::string>() != kSchemaId)
            throw std::invalid_argument("OutputDocument: wrong or missing schema id");
        for (const char* key : {"command", "params", "columns", "metadata"})
            if (!j.contains(key))
                throw std::invalid_argument(
                    std::string("OutputDocument: missing field ") + key);
        if (!j["command"].is_string() || !j["columns"].is_array())
            throw std::invalid_argument("OutputDocument: malformed fields");
        OutputDocument doc;
        doc.command = j["command"].get<std::string>();
        doc.params = j["params"];
        doc.metadata = j["metadata"];
        for (const auto& col : j["columns"]) {
            if (!col.is_object() || !col.contains("name") ||
                !col.contains("values") || !col["values"].is_array())
                throw std::invalid_argument("OutputDocument: malformed column");
            std::vector<double> values;
            values.reserve(col["values"].size());
            for (const auto& v : col["values"]) {
                if (!v.is_number())
                    throw std::invalid_argument(
                        "OutputDocument: non-numeric column entry");
                values.push_back(v.get<double>());
            }
            doc.add_column(col["name"].get<std::string>(), std::move(values));
        }
        doc.validate();
        return doc;
    }
};

// ADL hook: nlohmann::json j = report;
inline void to_json(nlohmann::json& j, const ThermoReport& r) {
    j = nlohmann::json{{"Z", r.Z},           {"F", r.F},
                       {"U", r.U},           {"dE2", r.dE2},
                       {"S_over_kB", r.S_over_kB}, {"beta_hw", r.beta_hw}};
}

}  // namespace su11
