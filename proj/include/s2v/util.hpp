#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace s2v {

std::string trim(std::string_view s);
std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);

/// Strict double parse over the whole (trimmed) token; rejects empty/partial.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

/// Shortest decimal form that round-trips back to the same double.
std::string format_double(double v);

/// FNV-1a 64-bit over raw bytes. Used as a deterministic content
/// fingerprint for manifests and corpus identity, not for security.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace s2v
