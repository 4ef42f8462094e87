#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace syllaudit::corpus {

enum class InstitutionType { PWI, HSI, HBCU, OTHER };
enum class CarnegieClass { R1, R2, OTHER, UNKNOWN };
enum class CourseLevel { UNDERGRADUATE, GRADUATE };

const char* to_string(InstitutionType t);
const char* to_string(CarnegieClass c);
const char* to_string(CourseLevel l);

std::optional<InstitutionType> parse_institution_type(std::string_view s);
std::optional<CarnegieClass> parse_carnegie_class(std::string_view s);
std::optional<CourseLevel> parse_course_level(std::string_view s);

// Content sections every usable syllabus record must carry, in canonical order.
inline constexpr std::array<const char*, 5> kRequiredSections = {
    "course_description_or_objectives", "grading_policy", "required_resources",
    "expected_activities", "prerequisites"};

struct SyllabusRecord {
  std::string id;
  std::string institution_name;
  std::optional<InstitutionType> institution_type;  // nullopt: not stated in the file
  CarnegieClass carnegie_class = CarnegieClass::UNKNOWN;
  std::string course_name;
  std::string department;
  std::optional<CourseLevel> course_level;
  std::vector<std::string> instructors;
  std::string term;
  std::map<std::string, std::string> content;

  // Content keys in canonical order: the required sections first, extras alphabetically.
  std::vector<std::string> canonical_content_keys() const;
  // Canonical-order concatenation of content values, newline separated.
  std::string full_text() const;

  bool operator==(const SyllabusRecord&) const = default;
};

struct ValidationIssue {
  enum class Kind { ParseError, MissingRequiredSection, MissingMetadata, DuplicateId };
  Kind kind;
  std::string record_id;  // record id, or source filename when no id could be read
  std::string detail;     // section/field name, or a parser message

  bool operator==(const ValidationIssue&) const = default;
  bool operator<(const ValidationIssue& o) const;
};

std::string to_string(const ValidationIssue& issue);

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

struct CorpusIndex {
  std::vector<SyllabusRecord> records;  // valid records only, sorted by id
  std::vector<ValidationIssue> diagnostics;

  const SyllabusRecord* find(const std::string& id) const;
  bool operator==(const CorpusIndex&) const = default;
};

struct CorpusStats {
  std::size_t n_syllabi = 0;
  std::size_t n_institutions = 0;
  std::map<CourseLevel, std::size_t> by_level;
  std::map<InstitutionType, std::size_t> by_institution_type;
  std::map<CarnegieClass, std::size_t> by_carnegie;
  std::size_t n_cs_departments = 0;
};

struct FilterSpec {
  std::optional<CourseLevel> level;
  std::optional<InstitutionType> institution_type;
  std::optional<CarnegieClass> carnegie;
};

inline const std::set<std::string> kDefaultCsDepartments = {"computer science", "cs"};

/// Loads a directory of record files, a single record file, or an aggregate
/// file with a top-level "records" array. Records failing validation are kept
/// as diagnostics, not dropped. Throws PathNotFound, EmptyCorpus (nothing
/// parseable), DuplicateId.
CorpusIndex load_corpus(const std::filesystem::path& path);

/// Never throws; reports every missing/empty required section and metadata field.
ValidationReport validate_record(const SyllabusRecord& record);

CorpusStats corpus_stats(const CorpusIndex& corpus,
                         const std::set<std::string>& cs_departments = kDefaultCsDepartments);

CorpusIndex filter_corpus(const CorpusIndex& corpus, const FilterSpec& spec);

void save_corpus(const CorpusIndex& corpus, const std::filesystem::path& file);

nlohmann::ordered_json record_to_json(const SyllabusRecord& record);
SyllabusRecord record_from_json(const nlohmann::json& j);  // throws ParseError

/// Pretty-printed canonical JSON for prompt embedding; stable byte-for-byte.
std::string record_canonical_text(const SyllabusRecord& record);
std::string corpus_canonical_text(const CorpusIndex& corpus);

std::string render_validation_report(const CorpusIndex& corpus);

}  // namespace syllaudit::corpus
