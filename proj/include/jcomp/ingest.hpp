#pragma once

// Delimited-text input: citation matrices and journal metadata.
//
// Citation CSV:
//     ,A,B
//     A,0,3
//     B,5,0
// Metadata CSV:
//     title,total_citations,impact_factor
//     SYDOWIA,355,0.213
//
// Comma delimiter, UTF-8, LF or CRLF. Quoted fields are not supported, so
// titles must not contain commas.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jcomp/citation_matrix.hpp"
#include "jcomp/config.hpp"
#include "jcomp/error.hpp"
#include "jcomp/text.hpp"

namespace jcomp {

struct JournalRecord {
  std::string title;
  Count total_citations = 0;
  std::optional<double> impact_factor;

  friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

// One subject in one year, ready for analysis. matrix is post-symmetrization
// and records[k] describes matrix.order[k].
struct SubjectSnapshot {
  std::string subject;
  std::string year_label;
  CitationMatrix matrix;
  std::vector<JournalRecord> records;

  std::size_t n() const noexcept { return matrix.size(); }

  std::vector<Count> total_citations() const {
    std::vector<Count> tc;
    tc.reserve(records.size());
    for (const auto& r : records) tc.push_back(r.total_citations);
    return tc;
  }
};

namespace detail {

inline Count parse_count(std::string_view cell, std::size_t line, std::string_view what) {
  const auto v = text::trim(cell);
  if (v.starts_with('-')) throw ParseError(line, "negative " + std::string(what) + " '" + std::string(v) + "'");
  Count out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(v) + "'");
  return out;
}

inline double parse_real(std::string_view cell, std::size_t line, std::string_view what) {
  const auto v = text::trim(cell);
  double out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc{} || ptr != end || !std::isfinite(out))
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(v) + "'");
  if (out < 0) throw ParseError(line, "negative " + std::string(what) + " '" + std::string(v) + "'");
  return out;
}

}  // namespace detail

inline CitationMatrix parse_citation_csv(std::string_view input) {
  const auto lines = text::lines(input);
  if (lines.empty()) throw ParseError(0, "citation matrix: empty input");

  const auto header = text::split(lines.front().content, ',');
  if (!text::trim(header.front()).empty())
    throw ParseError(lines.front().number, "header must start with an empty cell");
  CitationMatrix out;
  std::unordered_set<std::string> seen;
  for (std::size_t k = 1; k < header.size(); ++k) {
    const std::string title(text::trim(header[k]));
    if (title.empty()) throw ParseError(lines.front().number, "empty journal title in header");
    if (!seen.insert(text::fold(title)).second)
      throw ParseError(lines.front().number, "duplicate journal title '" + title + "'");
    out.order.push_back(title);
  }
  const std::size_t n = out.order.size();
  if (n == 0) throw ParseError(lines.front().number, "header lists no journals");
  if (lines.size() - 1 != n)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " data rows, found " +
                                              std::to_string(lines.size() - 1));

  out.counts = Matrix<Count>::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    const auto cells = text::split(line.content, ',');
    if (cells.size() != n + 1)
      throw ParseError(line.number, "expected " + std::to_string(n + 1) + " cells, found " +
                                        std::to_string(cells.size()));
    const auto title = text::trim(cells.front());
    if (title != out.order[i])
      throw ParseError(line.number, "row title '" + std::string(title) + "' does not match column title '" +
                                        out.order[i] + "'");
    for (std::size_t j = 0; j < n; ++j) out.counts(i, j) = detail::parse_count(cells[j + 1], line.number, "count");
  }
  return out;
}

// Canonical form: LF line endings, no padding, trailing newline.
inline std::string emit_citation_csv(const CitationMatrix& c) {
  c.validate();
  std::string out;
  for (const auto& title : c.order) out += "," + title;
  out += '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += c.order[i];
    for (std::size_t j = 0; j < c.size(); ++j) out += "," + std::to_string(c.counts(i, j));
    out += '\n';
  }
  return out;
}

// Zero TC is accepted here; snapshot assembly applies the zero-TC policy.
inline std::vector<JournalRecord> parse_journal_metadata(std::string_view input) {
  const auto lines = text::lines(input);
  if (lines.empty()) throw ParseError(0, "journal metadata: empty input");

  const auto header = text::split(lines.front().content, ',');
  if (header.size() != 3 || text::trim(header[0]) != "title" || text::trim(header[1]) != "total_citations" ||
      text::trim(header[2]) != "impact_factor")
    throw ParseError(lines.front().number, "header must be 'title,total_citations,impact_factor'");

  std::vector<JournalRecord> out;
  std::unordered_set<std::string> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto cells = text::split(line.content, ',');
    if (cells.size() < 2 || cells.size() > 3)
      throw ParseError(line.number, "expected 3 cells, found " + std::to_string(cells.size()));
    JournalRecord rec;
    rec.title = std::string(text::trim(cells[0]));
    if (rec.title.empty()) throw ParseError(line.number, "empty journal title");
    if (!seen.insert(text::fold(rec.title)).second)
      throw ParseError(line.number, "duplicate journal title '" + rec.title + "'");
    rec.total_citations = detail::parse_count(cells[1], line.number, "total_citations");
    if (cells.size() == 3 && !text::trim(cells[2]).empty())
      rec.impact_factor = detail::parse_real(cells[2], line.number, "impact_factor");
    out.push_back(std::move(rec));
  }
  return out;
}

inline CitationMatrix symmetrize(const CitationMatrix& c, Symmetrization mode) {
  if (!c.counts.is_square()) throw DimensionError("symmetrize: matrix is not square");
  switch (mode) {
    case Symmetrization::citing_only:
      return c;
    case Symmetrization::cited_only:
      return {c.order, c.counts.transposed()};
    case Symmetrization::sum: {
      CitationMatrix out = c;
      const std::size_t n = c.counts.rows();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.counts(i, j) = c.counts(i, j) + c.counts(j, i);
      return out;
    }
  }
  return c;
}

// Aligns metadata to the matrix order (case-insensitive title match),
// symmetrizes per cfg and applies the zero-TC policy.
inline SubjectSnapshot assemble_snapshot(const CitationMatrix& raw, const std::vector<JournalRecord>& metadata,
                                         std::string subject, std::string year_label, const AnalysisConfig& cfg = {}) {
  cfg.validate();
  raw.validate();

  std::unordered_map<std::string, std::size_t> by_title;
  for (std::size_t k = 0; k < metadata.size(); ++k) {
    if (!by_title.emplace(text::fold(metadata[k].title), k).second)
      throw ValidationError("duplicate metadata title '" + metadata[k].title + "'");
  }

  std::vector<std::string> missing_meta;
  std::vector<JournalRecord> aligned;
  std::unordered_set<std::size_t> used;
  for (const auto& title : raw.order) {
    const auto it = by_title.find(text::fold(title));
    if (it == by_title.end()) {
      missing_meta.push_back(title);
      continue;
    }
    used.insert(it->second);
    aligned.push_back(metadata[it->second]);
  }
  std::vector<std::string> missing_matrix;
  for (std::size_t k = 0; k < metadata.size(); ++k)
    if (!used.count(k)) missing_matrix.push_back(metadata[k].title);

  if (!missing_meta.empty() || !missing_matrix.empty()) {
    std::ostringstream os;
    os << "title mismatch between matrix and metadata";
    auto list = [&os](const char* label, const std::vector<std::string>& titles) {
      if (titles.empty()) return;
      os << "; " << label << ":";
      for (const auto& t : titles) os << " '" << t << "'";
    };
    list("missing from metadata", missing_meta);
    list("missing from matrix", missing_matrix);
    throw ValidationError(os.str());
  }

  if (cfg.zero_tc_policy == ZeroTcPolicy::reject) {
    for (const auto& rec : aligned)
      if (rec.total_citations == 0) throw ValidationError("journal '" + rec.title + "' has zero total citations");
  }

  return {std::move(subject), std::move(year_label), symmetrize(raw, cfg.symmetrization), std::move(aligned)};
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SubjectSnapshot load_subject_year(const std::filesystem::path& matrix_path,
                                         const std::filesystem::path& metadata_path, std::string subject,
                                         std::string year_label, const AnalysisConfig& cfg = {}) {
  auto with_file = [](const std::filesystem::path& p, auto&& parse) {
    try {
      return parse(read_text_file(p));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.detail(), p.string());
    }
  };
  const auto matrix = with_file(matrix_path, [](const std::string& s) { return parse_citation_csv(s); });
  const auto records = with_file(metadata_path, [](const std::string& s) { return parse_journal_metadata(s); });
  return assemble_snapshot(matrix, records, std::move(subject), std::move(year_label), cfg);
}

}  // namespace jcomp
