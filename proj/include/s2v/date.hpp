#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace s2v {

/// Calendar date. Ordering is chronological; to_string() is ISO-8601.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    std::string to_string() const;
};

/// Accepts YYYY-MM-DD or YYYY/MM/DD with basic range validation.
/// Anything else is a parse failure, not a guess.
std::optional<Date> parse_date(std::string_view s);

}  // namespace s2v
