#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace funceq::cli {

/// 17 significant digits, '.' decimal point, no grouping; locale independent.
std::string format_real(double v);

/// Comma-separated table with a header line; rows end with a single '\n'.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    CsvTable& row(const std::vector<std::string>& cells);
    std::string str() const;
    void write(const std::filesystem::path& path) const;

private:
    std::size_t columns_;
    std::string text_;
};

}  // namespace funceq::cli
