#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace jcm {

/// Column-oriented time series as written by `run`.
struct Series {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::json params = nlohmann::json::object();  ///< JSON format only

    /// Index of a column; throws InvalidArgument if absent.
    std::size_t column_index(const std::string& name) const;
};

/// Numbers are printed with 17 significant digits so a re-read is exact.
std::string format_number(double v);

/// Header row, comma separated, LF line endings.
std::string to_csv(const Series& s);

/// {"columns": [...], "params": {...}, "rows": [[...], ...]}
std::string to_json(const Series& s);

Series parse_csv(const std::string& text);
Series parse_json(const std::string& text);

/// Reads by extension (.json, otherwise CSV). Throws IoError when the file
/// cannot be read, InvalidArgument when it is malformed.
Series read_series(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace jcm
