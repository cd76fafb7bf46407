#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace mlbalance::csv {

struct Record {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

struct Document {
    Record header;
    std::vector<Record> rows;
};

/// Splits one line on commas. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_line(std::string_view line, std::size_t line_no);

/// Reads a header plus data rows. Blank lines and lines starting with '#' are skipped.
Document read(std::istream& in);

/// Quotes a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

} // namespace mlbalance::csv
