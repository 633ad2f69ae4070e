#include "core/series_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace jcm {

std::size_t Series::column_index(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw InvalidArgument(fmt::format("series has no column '{}'", name));
}

std::string format_number(double v)
{
    return fmt::format("{:.17g}", v);
}

std::string to_csv(const Series& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        if (i) out += ',';
        out += s.columns[i];
    }
    out += '\n';
    for (const auto& row : s.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Series& s)
{
    std::string out = "{\n  \"columns\": ";
    out += nlohmann::json(s.columns).dump();
    out += ",\n  \"params\": ";
    out += s.params.dump();
    out += ",\n  \"rows\": [";
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        out += r ? ",\n    [" : "\n    [";
        const auto& row = s.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ", ";
            out += format_number(row[i]);
        }
        out += ']';
    }
    out += s.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

namespace {

double parse_double(std::string_view field, std::size_t line)
{
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw InvalidArgument(
            fmt::format("malformed series file: bad number '{}' on line {}", field, line));
    return v;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

}  // namespace

Series parse_csv(const std::string& text)
{
    Series s;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        if (s.columns.empty()) {
            for (auto f : fields) {
                if (f.empty()) throw InvalidArgument("malformed series file: empty column name");
                s.columns.emplace_back(f);
            }
            continue;
        }
        if (fields.size() != s.columns.size())
            throw InvalidArgument(fmt::format(
                "malformed series file: line {} has {} fields, expected {}", line_no,
                fields.size(), s.columns.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields) row.push_back(parse_double(f, line_no));
        s.rows.push_back(std::move(row));
    }
    if (s.columns.empty()) throw InvalidArgument("malformed series file: missing header row");
    return s;
}

Series parse_json(const std::string& text)
{
    Series s;
    try {
        const auto j = nlohmann::json::parse(text);
        s.columns = j.at("columns").get<std::vector<std::string>>();
        if (j.contains("params")) s.params = j.at("params");
        for (const auto& row : j.at("rows")) {
            auto values = row.get<std::vector<double>>();
            if (values.size() != s.columns.size())
                throw InvalidArgument("malformed series file: row width does not match columns");
            s.rows.push_back(std::move(values));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(fmt::format("malformed series file: {}", e.what()));
    }
    return s;
}

Series read_series(const std::filesystem::path& path)
{
    const std::string text = read_text(path);
    return path.extension() == ".json" ? parse_json(text) : parse_csv(text);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    out.close();
    if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace jcm
