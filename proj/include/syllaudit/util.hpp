#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace syllaudit::util {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

bool is_word_char(char c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Fixed-point decimal rendering with round-half-even ties, e.g.
// format_fixed(2.0 / 3.0, 4) == "0.6667".
std::string format_fixed(double value, int places);

// RFC 4180 quoting; always encloses fields containing separators/quotes.
std::string csv_field(std::string_view s);

std::string iso8601_utc_now();

}  // namespace syllaudit::util
