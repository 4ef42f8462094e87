#include "syllaudit/util.hpp"

#include <cctype>
#include <cfenv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "syllaudit/errors.hpp"

namespace syllaudit::util {

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

bool is_word_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::PathNotFound, "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::PathNotFound, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string format_fixed(double value, int places) {
  double scale = std::pow(10.0, places);
  // nearbyint under the default FE_TONEAREST mode resolves ties to even.
  double scaled = std::nearbyint(value * scale);
  bool negative = std::signbit(scaled) && scaled != 0.0;
  long long units = static_cast<long long>(std::llabs(static_cast<long long>(scaled)));
  long long div = static_cast<long long>(scale);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%lld.%0*lld", negative ? "-" : "", units / div, places,
                units % div);
  return buf;
}

std::string csv_field(std::string_view s) {
  bool needs_quotes = s.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

std::string iso8601_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace syllaudit::util

namespace syllaudit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PathNotFound: return "PathNotFound";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::AuthError: return "AuthError";
    case ErrorCode::ReplayMiss: return "ReplayMiss";
    case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
    case ErrorCode::MixedRubrics: return "MixedRubrics";
    case ErrorCode::UnknownSyllabusId: return "UnknownSyllabusId";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace syllaudit
