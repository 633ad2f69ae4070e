#pragma once

#include <filesystem>
#include <string>

#include "core/series_io.hpp"

namespace jcm {

/// Self-contained SVG line plot of one column against tau. The polyline is
/// drawn in data coordinates (tau, value) inside a transformed group, so
/// its points carry the plotted values directly. Throws InvalidArgument for
/// a missing column or a series without rows.
std::string render_svg(const Series& series, const std::string& column, const std::string& title);

void render_file(const std::filesystem::path& series_path, const std::string& column,
                 const std::filesystem::path& svg_path, const std::string& title);

}  // namespace jcm
