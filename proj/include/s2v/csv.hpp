#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace s2v {

/// Parsed CSV with the header row separated out. Fields are trimmed;
/// double-quoted fields may contain commas and doubled quotes.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Case-insensitive header lookup; -1 if absent.
    int column(std::string_view name) const;
};

CsvTable read_csv(const std::string& path);

/// Splits one CSV record, honoring double quotes. Exposed for tests.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field only when it needs quoting.
std::string csv_escape(std::string_view field);

}  // namespace s2v
