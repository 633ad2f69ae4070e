#include "core/svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace jcm {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string escape_xml(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string axis_label(const std::string& column)
{
    if (column == "S") return "S(λt)";
    if (column == "C") return "C(λt)";
    if (column == "W") return "W(λt)";
    if (column == "g2") return "g⁽²⁾(λt)";
    return column;
}

}  // namespace

std::string render_svg(const Series& series, const std::string& column, const std::string& title)
{
    const std::size_t xi = series.column_index("tau");
    const std::size_t yi = series.column_index(column);
    if (series.rows.empty()) throw InvalidArgument("no data rows");

    double x0 = series.rows.front()[xi], x1 = x0;
    double y0 = series.rows.front()[yi], y1 = y0;
    for (const auto& r : series.rows) {
        x0 = std::min(x0, r[xi]);
        x1 = std::max(x1, r[xi]);
        y0 = std::min(y0, r[yi]);
        y1 = std::max(y1, r[yi]);
    }
    if (x1 == x0) x1 = x0 + 1.0;
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    const double ylo = y0 - pad, yhi = y1 + pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double sx = plot_w / (x1 - x0);
    const double sy = plot_h / (yhi - ylo);

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
    out += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       kWidth / 2, escape_xml(title));
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        kLeft, kTop, plot_w, plot_h);

    // Ticks: five intervals on each axis.
    for (int k = 0; k <= 5; ++k) {
        const double tx = x0 + (x1 - x0) * k / 5.0;
        const double px = kLeft + (tx - x0) * sx;
        out += fmt::format(
            "<line x1=\"{0:.3f}\" y1=\"{1}\" x2=\"{0:.3f}\" y2=\"{2}\" stroke=\"black\"/>"
            "<text x=\"{0:.3f}\" y=\"{3}\" text-anchor=\"middle\">{4:.4g}</text>\n",
            px, kTop + plot_h, kTop + plot_h + 5, kTop + plot_h + 18, tx);
        const double ty = ylo + (yhi - ylo) * k / 5.0;
        const double py = kTop + plot_h - (ty - ylo) * sy;
        out += fmt::format(
            "<line x1=\"{0}\" y1=\"{1:.3f}\" x2=\"{2}\" y2=\"{1:.3f}\" stroke=\"black\"/>"
            "<text x=\"{3}\" y=\"{4:.3f}\" text-anchor=\"end\">{5:.4g}</text>\n",
            kLeft - 5, py, kLeft, kLeft - 8, py + 4, ty);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">λt</text>\n",
                       kLeft + plot_w / 2, kHeight - 12);
    out += fmt::format(
        "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">{1}</text>\n",
        kTop + plot_h / 2, escape_xml(axis_label(column)));

    // Data space -> pixels: x' = kLeft + (x - x0) sx, y' = kTop + plot_h - (y - ylo) sy.
    out += fmt::format(
        "<g transform=\"translate({:.6f} {:.6f}) scale({:.9g} {:.9g})\">\n",
        kLeft - x0 * sx, kTop + plot_h + ylo * sy, sx, -sy);
    out += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" "
           "vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < series.rows.size(); ++i) {
        if (i) out += ' ';
        out += fmt::format("{:.10g},{:.10g}", series.rows[i][xi], series.rows[i][yi]);
    }
    out += "\"/>\n</g>\n</svg>\n";
    return out;
}

void render_file(const std::filesystem::path& series_path, const std::string& column,
                 const std::filesystem::path& svg_path, const std::string& title)
{
    const Series s = read_series(series_path);
    write_text(svg_path, render_svg(s, column, title));
}

}  // namespace jcm
