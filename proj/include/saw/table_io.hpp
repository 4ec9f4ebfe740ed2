#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace saw {

// Header row plus decimal rows; '.' separator, no quoting.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

void write_csv(std::ostream& out, const Table& table);
Table read_csv(std::istream& in);

}  // namespace saw
