#pragma once
// Text grammar for tables and the report serializers.
//
// One document:
//   # comment lines are ignored anywhere
//   n                          single integer header, 1 <= n <= 16
//   n rows of n integers       entries in [0, n)
//   J: j0 j1 ... j(n-1)        optional map line
//
// A stream holds several documents separated by one or more blank
// lines. Parse errors carry the 1-based offending line number.

#include <string>

#include "ciq/ci.hpp"
#include "ciq/search.hpp"

#include <json.hpp>

namespace ciq::io {

struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};
struct BadHeader : ParseError {
  using ParseError::ParseError;
};
struct BadRow : ParseError {
  using ParseError::ParseError;
};
struct BadJLine : ParseError {
  using ParseError::ParseError;
};
struct EntryOutOfRange : ParseError {
  using ParseError::ParseError;
};
struct TrailingContent : ParseError {
  using ParseError::ParseError;
};

struct TableDocument {
  CayleyTable table;
  std::optional<TotalMap> j;
  std::string source_name;

  // source_name is provenance, not content.
  friend bool operator==(const TableDocument& a, const TableDocument& b) {
    return a.table == b.table && a.j == b.j;
  }
};

// Parses exactly one document; anything besides comments and blank
// lines after it is a TrailingContent error.
TableDocument parse_table(const std::string& text,
                          const std::string& source_name = "");

// Parses a whole stream of blank-line-separated documents.
std::vector<TableDocument> parse_documents(const std::string& text,
                                           const std::string& source_name = "");

// Renders one document in the grammar above; parse_table(render_table(d))
// gives back an equal document.
std::string render_table(const TableDocument& doc);

enum class Format { kText, kJson };

// JSON object views of the reports, with the key order fixed by the
// schema. Serialization is deterministic: two identical reports render
// byte-identically.
nlohmann::ordered_json report_to_json(const CiReport& r);
nlohmann::ordered_json report_to_json(const TheoremReport& r);

std::string render_report(const CiReport& r, Format format);
std::string render_report(const TheoremReport& r, Format format);

// `order <n> mode <mode> pairs <count> classes <count>` — the line
// format used for enumeration summaries and the regression
// expectations file (data/expected_counts.txt).
std::string expectation_line(int order, SearchMode mode, std::int64_t pairs,
                             std::int64_t classes);

}  // namespace ciq::io
