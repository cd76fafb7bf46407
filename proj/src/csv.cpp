#include "mlbalance/csv.hpp"

#include "mlbalance/error.hpp"

namespace mlbalance::csv {

std::vector<std::string> split_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(ch);
            }
        } else if (ch == '"' && current.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (quoted) {
        throw ParseError("unterminated quoted field", line_no);
    }
    fields.push_back(std::move(current));
    return fields;
}

Document read(std::istream& in) {
    Document doc;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
            line.erase(0, 3);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        Record rec{line_no, split_line(line, line_no)};
        if (!have_header) {
            doc.header = std::move(rec);
            have_header = true;
        } else {
            doc.rows.push_back(std::move(rec));
        }
    }
    if (!have_header) {
        throw EmptyInputError("missing header row");
    }
    return doc;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') {
            out += "\"\"";
        } else {
            out.push_back(ch);
        }
    }
    out.push_back('"');
    return out;
}

} // namespace mlbalance::csv
