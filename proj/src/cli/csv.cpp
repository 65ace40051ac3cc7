#include "funceq/cli/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "funceq/errors.hpp"

namespace funceq::cli {

std::string format_real(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

namespace {

void append_line(std::string& text, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text += ',';
        text += cells[i];
    }
    text += '\n';
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
    append_line(text_, header);
}

CsvTable& CsvTable::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw ShapeError("csv row has " + std::to_string(cells.size()) + " cells, header has " +
                         std::to_string(columns_));
    }
    append_line(text_, cells);
    return *this;
}

std::string CsvTable::str() const {
    return text_;
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out << text_;
    if (!out.flush()) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

}  // namespace funceq::cli
