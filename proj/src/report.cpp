#include "sbvp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace sbvp {

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open '" + path + "'");
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvWriter::row: wrong cell count");
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
    if (!out_) throw std::runtime_error("CsvWriter::row: write failed");
}

void CsvWriter::row_numeric(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double c : cells) s.push_back(num17(c));
    row(s);
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series) {
    constexpr int W = 760, H = 480, ML = 60, MR = 20, MT = 40, MB = 40;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) {
            if (std::isfinite(v)) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        }
        for (double v : s.y) {
            if (std::isfinite(v)) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
        }
    }
    if (!std::isfinite(xmin) || !std::isfinite(ymin)) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_svg_plot: cannot open '" + path + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"16\">" << title << "</text>\n"
        << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << W - ML - MR << "\" height=\""
        << H - MT - MB << "\" fill=\"none\" stroke=\"#888\"/>\n";
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };
    int legend_y = MT + 16;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << ML + 8 << "\" y=\"" << legend_y
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color << "\">"
            << s.label << "</text>\n";
        legend_y += 16;
    }
    out << "<text x=\"" << ML << "\" y=\"" << H - 8
        << "\" font-family=\"sans-serif\" font-size=\"11\">[" << num17(xmin) << ", " << num17(xmax)
        << "] x [" << num17(ymin) << ", " << num17(ymax) << "]</text>\n</svg>\n";
    if (!out) throw std::runtime_error("write_svg_plot: write failed");
}

}  // namespace sbvp
