#include "s2v/csv.hpp"

#include <fstream>

#include "s2v/error.hpp"
#include "s2v/util.hpp"

namespace s2v {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && trim(current).empty()) {
            quoted = true;
            current.clear();
        } else if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

int CsvTable::column(std::string_view name) const {
    std::string want = to_lower(name);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (to_lower(header[i]) == want) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::file_not_found, "cannot open file: " + path);

    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (!have_header) {
            table.header = split_csv_line(line);
            have_header = true;
        } else {
            table.rows.push_back(split_csv_line(line));
        }
    }
    if (!have_header) raise(errc::malformed_header, "empty csv file: " + path);
    return table;
}

}  // namespace s2v
