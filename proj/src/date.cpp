#include "s2v/date.hpp"

#include <cstdio>

#include "s2v/util.hpp"

namespace s2v {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return d[m - 1];
}

}  // namespace

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> parse_date(std::string_view raw) {
    std::string s = trim(raw);
    if (s.size() != 10) return std::nullopt;
    char sep = s[4];
    if ((sep != '-' && sep != '/') || s[7] != sep) return std::nullopt;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return std::nullopt;

    auto num = [&](std::size_t off, std::size_t len) {
        int v = 0;
        for (std::size_t i = off; i < off + len; ++i) v = v * 10 + (s[i] - '0');
        return v;
    };
    Date d{num(0, 4), num(5, 2), num(8, 2)};
    if (d.year < 1000 || d.year > 9999) return std::nullopt;
    if (d.month < 1 || d.month > 12) return std::nullopt;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
    return d;
}

}  // namespace s2v
