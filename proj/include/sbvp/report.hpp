#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace sbvp {

/// Format a double with 17 significant digits so cross-run diffs are exact.
std::string num17(double x);

/// Minimal CSV writer: one header row, numeric cells via num17.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void row_numeric(const std::vector<double>& cells);

private:
    std::ofstream out_;
    std::size_t columns_;
};

/// Hand-emitted polyline SVG; plots are conveniences, CSVs are the record.
struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series);

}  // namespace sbvp
