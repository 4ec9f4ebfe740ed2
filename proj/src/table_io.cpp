#include "saw/table_io.hpp"

#include "saw/errors.hpp"

#include <sstream>

namespace saw {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
    write_row(out, table.header);
    for (const auto& row : table.rows) write_row(out, row);
}

Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto cells = split_row(line);
        if (header) {
            table.header = std::move(cells);
            header = false;
        } else {
            if (cells.size() != table.header.size()) throw MalformedFileError("CSV row width differs from header");
            table.rows.push_back(std::move(cells));
        }
    }
    if (header) throw MalformedFileError("CSV has no header row");
    return table;
}

}  // namespace saw
