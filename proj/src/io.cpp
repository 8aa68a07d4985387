#include "ciq/io.hpp"

#include <charconv>
#include <sstream>

namespace ciq::io {

namespace {

struct Line {
  std::string text;
  int number = 0;  // 1-based
};

// Keeps blank lines (document separators), drops comments.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw[0] == '#') continue;
    lines.push_back(Line{raw, number});
  }
  return lines;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& tok, int& value) {
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end;
}

// Parses one document starting at lines[pos]; advances pos past it.
TableDocument parse_one(const std::vector<Line>& lines, std::size_t& pos,
                        const std::string& source_name) {
  const auto line_no = [&](std::size_t i) {
    return i < lines.size() ? lines[i].number
                            : (lines.empty() ? 1 : lines.back().number + 1);
  };

  if (pos >= lines.size()) throw BadHeader("missing table header", line_no(pos));
  const auto header = tokens(lines[pos].text);
  int n = 0;
  if (header.size() != 1 || !parse_int(header[0], n)) {
    throw BadHeader("expected a single integer order", lines[pos].number);
  }
  if (n < 1 || n > kMaxOrder) {
    throw BadHeader("order must be in [1, " + std::to_string(kMaxOrder) + "]",
                    lines[pos].number);
  }
  ++pos;

  std::vector<element_t> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++pos) {
    if (pos >= lines.size() || is_blank(lines[pos].text)) {
      throw BadRow("expected " + std::to_string(n) + " table rows, got " +
                       std::to_string(row),
                   line_no(pos));
    }
    const auto row_tokens = tokens(lines[pos].text);
    if (row_tokens.size() != static_cast<std::size_t>(n)) {
      throw BadRow("expected " + std::to_string(n) + " entries in row, got " +
                       std::to_string(row_tokens.size()),
                   lines[pos].number);
    }
    for (const std::string& tok : row_tokens) {
      int v = 0;
      if (!parse_int(tok, v)) {
        throw BadRow("'" + tok + "' is not an integer", lines[pos].number);
      }
      if (v < 0 || v >= n) {
        throw EntryOutOfRange("entry " + tok + " is outside [0, " +
                                  std::to_string(n) + ")",
                              lines[pos].number);
      }
      cells.push_back(v);
    }
  }

  TableDocument doc;
  doc.table = CayleyTable{n, std::move(cells)};
  doc.source_name = source_name;

  if (pos < lines.size() && !is_blank(lines[pos].text)) {
    const auto jt = tokens(lines[pos].text);
    if (!jt.empty() && jt[0] == "J:") {
      if (jt.size() != static_cast<std::size_t>(n) + 1) {
        throw BadJLine("expected " + std::to_string(n) + " values after J:",
                       lines[pos].number);
      }
      TotalMap j;
      j.image.reserve(n);
      for (std::size_t i = 1; i < jt.size(); ++i) {
        int v = 0;
        if (!parse_int(jt[i], v)) {
          throw BadJLine("'" + jt[i] + "' is not an integer",
                         lines[pos].number);
        }
        if (v < 0 || v >= n) {
          throw EntryOutOfRange("J value " + jt[i] + " is outside [0, " +
                                    std::to_string(n) + ")",
                                lines[pos].number);
        }
        j.image.push_back(v);
      }
      doc.j = std::move(j);
      ++pos;
    }
  }
  return doc;
}

void skip_blanks(const std::vector<Line>& lines, std::size_t& pos) {
  while (pos < lines.size() && is_blank(lines[pos].text)) ++pos;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

nlohmann::json opt_map(const std::optional<TotalMap>& m) {
  if (!m) return nullptr;
  return m->image;
}

nlohmann::json table_rows(const CayleyTable& t) {
  auto rows = nlohmann::json::array();
  for (int x = 0; x < t.n; ++x) {
    rows.push_back(std::vector<element_t>(t.cells.begin() + x * t.n,
                                          t.cells.begin() + (x + 1) * t.n));
  }
  return rows;
}

std::string map_to_text(const TotalMap& m) {
  std::string out;
  for (int i = 0; i < m.order(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m(i));
  }
  return out;
}

}  // namespace

TableDocument parse_table(const std::string& text,
                          const std::string& source_name) {
  const auto lines = significant_lines(text);
  std::size_t pos = 0;
  skip_blanks(lines, pos);
  TableDocument doc = parse_one(lines, pos, source_name);
  skip_blanks(lines, pos);
  if (pos < lines.size()) {
    throw TrailingContent("unexpected content after the table",
                          lines[pos].number);
  }
  return doc;
}

std::vector<TableDocument> parse_documents(const std::string& text,
                                           const std::string& source_name) {
  const auto lines = significant_lines(text);
  std::vector<TableDocument> docs;
  std::size_t pos = 0;
  skip_blanks(lines, pos);
  while (pos < lines.size()) {
    docs.push_back(parse_one(lines, pos, source_name));
    if (pos < lines.size() && !is_blank(lines[pos].text)) {
      throw TrailingContent("expected a blank line between documents",
                            lines[pos].number);
    }
    skip_blanks(lines, pos);
  }
  return docs;
}

std::string render_table(const TableDocument& doc) {
  const CayleyTable& t = doc.table;
  std::string out = std::to_string(t.n) + "\n";
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (y) out += ' ';
      out += std::to_string(t.at(x, y));
    }
    out += '\n';
  }
  if (doc.j) out += "J: " + map_to_text(*doc.j) + "\n";
  return out;
}

nlohmann::ordered_json report_to_json(const CiReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["classification"] = to_string(r.classification);
  j["is_quasigroup"] = r.is_quasigroup;
  j["is_loop"] = r.is_quasigroup && r.loop_identity.has_value();
  j["jr"] = opt_map(r.jr);
  j["jl"] = opt_map(r.jl);
  j["jr_is_bijective"] = r.jr_is_bijective;
  j["jl_equals_jr_inverse"] = r.jl_equals_jr_inverse;
  j["loop_identity"] =
      r.loop_identity ? nlohmann::json(*r.loop_identity) : nullptr;
  j["x_times_jx_is_identity"] = r.x_times_jx_is_identity
                                    ? nlohmann::json(*r.x_times_jx_is_identity)
                                    : nullptr;
  j["j_is_automorphism"] =
      r.j_is_automorphism ? nlohmann::json(*r.j_is_automorphism) : nullptr;
  return j;
}

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["mode"] = to_string(r.mode);
  j["pair_count"] = r.pair_count;
  j["table_count"] = r.table_count;
  j["class_count"] = r.class_count ? nlohmann::json(*r.class_count) : nullptr;
  j["all_are_quasigroups"] = r.all_are_quasigroups;
  j["all_jr_bijective"] = r.all_jr_bijective;
  j["all_right_ci_with_jr_inverse"] = r.all_right_ci_with_jr_inverse;
  j["all_j_unique"] = r.all_j_unique;
  auto failures = nlohmann::ordered_json::array();
  for (const TheoremFailure& f : r.failures) {
    nlohmann::ordered_json entry;
    entry["table"] = table_rows(f.structure.table);
    entry["jr"] = f.structure.jr.image;
    entry["reason"] = f.reason;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string render_report(const CiReport& r, Format format) {
  if (format == Format::kJson) return report_to_json(r).dump(2) + "\n";
  std::string out;
  out += "order: " + std::to_string(r.order) + "\n";
  out += "classification: " + std::string(to_string(r.classification)) + "\n";
  out += "left quasigroup: " + std::string(yesno(r.is_left_quasigroup)) + "\n";
  out +=
      "right quasigroup: " + std::string(yesno(r.is_right_quasigroup)) + "\n";
  out += "quasigroup: " + std::string(yesno(r.is_quasigroup)) + "\n";
  out += "loop identity: " +
         (r.loop_identity ? std::to_string(*r.loop_identity)
                          : std::string("none")) +
         "\n";
  out += "jr: " + (r.jr ? map_to_text(*r.jr) : std::string("none")) + "\n";
  out += "jl: " + (r.jl ? map_to_text(*r.jl) : std::string("none")) + "\n";
  if (r.jr) {
    out += "jr bijective: " + std::string(yesno(r.jr_is_bijective)) + "\n";
    out += "jl equals jr^-1: " + std::string(yesno(r.jl_equals_jr_inverse)) +
           "\n";
  }
  if (r.x_times_jx_is_identity) {
    out += "x*jr(x) is the identity: " +
           std::string(yesno(*r.x_times_jx_is_identity)) + "\n";
  }
  if (r.j_is_automorphism) {
    out += "jr is an automorphism: " +
           std::string(yesno(*r.j_is_automorphism)) + "\n";
  }
  return out;
}

std::string render_report(const TheoremReport& r, Format format) {
  if (format == Format::kJson) return report_to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "order " << r.order << " mode " << to_string(r.mode) << " pairs "
      << r.pair_count << " tables " << r.table_count << " classes ";
  if (r.class_count) {
    out << *r.class_count;
  } else {
    out << "-";
  }
  out << " quasigroups " << yesno(r.all_are_quasigroups) << " jr-bijective "
      << yesno(r.all_jr_bijective) << " right-ci " << yesno(r.all_right_ci_with_jr_inverse)
      << " j-unique " << yesno(r.all_j_unique) << " failures "
      << r.failures.size() << " verified " << yesno(r.verified()) << " ("
      << r.elapsed.count() << " ms)\n";
  return out.str();
}

std::string expectation_line(int order, SearchMode mode, std::int64_t pairs,
                             std::int64_t classes) {
  std::ostringstream out;
  out << "order " << order << " mode " << to_string(mode) << " pairs " << pairs
      << " classes " << classes;
  return out.str();
}

}  // namespace ciq::io
