#pragma once

// Text renderers: Pajek .net networks, ranked reports, trend tables and the
// block-structured analysis dump. All output uses LF line endings and is a
// deterministic function of the input.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jcomp/analysis.hpp"
#include "jcomp/error.hpp"
#include "jcomp/text.hpp"

namespace jcomp {

enum class SizeMode { area_tc, raw_tc };

inline std::string_view to_string(SizeMode m) { return m == SizeMode::area_tc ? "area_tc" : "raw_tc"; }

inline std::optional<SizeMode> parse_size_mode(std::string_view s) {
  if (s == "area_tc") return SizeMode::area_tc;
  if (s == "raw_tc") return SizeMode::raw_tc;
  return std::nullopt;
}

struct PajekNetDocument {
  struct Vertex {
    std::size_t id;  // 1-based
    std::string label;
    double size;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;  // from < to
    double weight;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<std::string> comments;  // rendered as "% ..." lines
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const PajekNetDocument&, const PajekNetDocument&) = default;
};

namespace detail {

// Round to 6 decimals so that what is rendered is exactly what is stored.
inline double quantize6(double v) { return std::round(v * 1e6) / 1e6; }

inline std::string pajek_label(std::string_view title) {
  std::string out(title);
  std::replace(out.begin(), out.end(), '"', '\'');
  return out;
}

inline std::string optional_fixed(const std::optional<double>& v, int decimals) {
  return v ? text::fixed(*v, decimals) : std::string{};
}

inline std::string optional_rank(const std::optional<std::size_t>& r) {
  return r ? std::to_string(*r) : std::string{};
}

}  // namespace detail

// Vertices in snapshot order sized by TC; one undirected edge per pair with
// similarity above the threshold, weighted by that similarity.
inline PajekNetDocument build_pajek(const SubjectAnalysis& analysis, double edge_threshold = 0.0,
                                    SizeMode size_mode = SizeMode::area_tc) {
  if (!(edge_threshold >= 0.0 && edge_threshold <= 1.0))
    throw DomainError("edge threshold must lie in [0, 1]");
  const std::size_t n = analysis.n();
  const auto tc = analysis.snapshot.total_citations();
  const double max_tc = tc.empty() ? 0.0 : static_cast<double>(*std::max_element(tc.begin(), tc.end()));

  PajekNetDocument doc;
  doc.comments.push_back("size_mode=" + std::string(to_string(size_mode)) +
                         " threshold=" + text::fixed(edge_threshold, 6));
  doc.comments.push_back(analysis.config_used.describe());
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(tc[i]);
    double size = t;
    if (size_mode == SizeMode::area_tc) size = max_tc > 0 ? std::sqrt(t / max_tc) : 0.0;
    doc.vertices.push_back({i + 1, detail::pajek_label(analysis.snapshot.matrix.order[i]), detail::quantize6(size)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = analysis.similarity(i, j);
      if (s <= edge_threshold) continue;
      doc.edges.push_back({i + 1, j + 1, std::max(detail::quantize6(s), 1e-6)});
    }
  }
  return doc;
}

inline std::string render_pajek(const PajekNetDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) out += "% " + c + "\n";
  out += "*Vertices " + std::to_string(doc.vertices.size()) + "\n";
  for (const auto& v : doc.vertices) {
    const auto size = text::fixed(v.size, 6);
    out += std::to_string(v.id) + " \"" + v.label + "\" x_fact " + size + " y_fact " + size + "\n";
  }
  out += "*Edges\n";
  for (const auto& e : doc.edges)
    out += std::to_string(e.from) + " " + std::to_string(e.to) + " " + text::fixed(e.weight, 6) + "\n";
  return out;
}

inline std::string emit_pajek(const SubjectAnalysis& analysis, double edge_threshold = 0.0,
                              SizeMode size_mode = SizeMode::area_tc) {
  return render_pajek(build_pajek(analysis, edge_threshold, size_mode));
}

// Minimal reader for the subset render_pajek writes.
inline PajekNetDocument parse_pajek(std::string_view input) {
  enum class Section { none, vertices, edges } section = Section::none;
  std::size_t declared = 0;
  PajekNetDocument doc;

  auto number = [](std::string_view tok, std::size_t line, auto& out) {
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line, "invalid number '" + std::string(tok) + "'");
  };
  auto tokens = [](std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < s.size()) {
      while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
      if (k >= s.size()) break;
      const auto start = k;
      while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
      out.push_back(s.substr(start, k - start));
    }
    return out;
  };

  for (const auto& [line, raw] : text::lines(input)) {
    const auto content = text::trim(raw);
    if (content.starts_with('%')) {
      doc.comments.emplace_back(text::trim(content.substr(1)));
      continue;
    }
    if (content.starts_with('*')) {
      const auto toks = tokens(content);
      const auto keyword = text::fold(toks.front());
      if (keyword == "*vertices") {
        if (toks.size() != 2) throw ParseError(line, "expected '*Vertices N'");
        number(toks[1], line, declared);
        section = Section::vertices;
      } else if (keyword == "*edges") {
        section = Section::edges;
      } else {
        throw ParseError(line, "unsupported section '" + std::string(toks.front()) + "'");
      }
      continue;
    }

    if (section == Section::vertices) {
      const auto q1 = content.find('"');
      const auto q2 = q1 == std::string_view::npos ? q1 : content.find('"', q1 + 1);
      if (q2 == std::string_view::npos) throw ParseError(line, "vertex label must be double-quoted");
      PajekNetDocument::Vertex v{0, std::string(content.substr(q1 + 1, q2 - q1 - 1)), 0.0};
      number(text::trim(content.substr(0, q1)), line, v.id);
      const auto attrs = tokens(content.substr(q2 + 1));
      bool have_size = false;
      for (std::size_t k = 0; k + 1 < attrs.size(); k += 2) {
        if (attrs[k] == "x_fact") {
          number(attrs[k + 1], line, v.size);
          have_size = true;
        }
      }
      if (!have_size) throw ParseError(line, "vertex has no x_fact size");
      if (v.id != doc.vertices.size() + 1) throw ParseError(line, "vertex ids must be 1-based and contiguous");
      doc.vertices.push_back(std::move(v));
    } else if (section == Section::edges) {
      const auto toks = tokens(content);
      if (toks.size() != 3) throw ParseError(line, "expected 'from to weight'");
      PajekNetDocument::Edge e{};
      number(toks[0], line, e.from);
      number(toks[1], line, e.to);
      number(toks[2], line, e.weight);
      if (e.from < 1 || e.to < 1 || e.from > declared || e.to > declared)
        throw ParseError(line, "edge endpoint out of range");
      doc.edges.push_back(e);
    } else {
      throw ParseError(line, "content before '*Vertices'");
    }
  }
  if (doc.vertices.size() != declared)
    throw ParseError(0, "declared " + std::to_string(declared) + " vertices, found " +
                            std::to_string(doc.vertices.size()));
  return doc;
}

inline std::string emit_report_csv(const RankedReport& report) {
  std::string out = "title,ci,ci_rank,if,if_rank,tc,tc_rank\n";
  for (const auto& r : report.rows) {
    out += r.title + "," + detail::optional_fixed(r.ci, 3) + "," + detail::optional_rank(r.ci_rank) + "," +
           detail::optional_fixed(r.impact_factor, 3) + "," + detail::optional_rank(r.if_rank) + "," +
           std::to_string(r.total_citations) + "," + std::to_string(r.tc_rank) + "\n";
  }
  return out;
}

inline std::string emit_report_markdown(const RankedReport& report) {
  std::string out = "| title | ci | ci_rank | if | if_rank | tc | tc_rank |\n";
  out += "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : report.rows) {
    out += "| " + r.title + " | " + detail::optional_fixed(r.ci, 3) + " | " + detail::optional_rank(r.ci_rank) +
           " | " + detail::optional_fixed(r.impact_factor, 3) + " | " + detail::optional_rank(r.if_rank) + " | " +
           std::to_string(r.total_citations) + " | " + std::to_string(r.tc_rank) + " |\n";
  }
  return out;
}

// Journal rows with blank cells for absent years, then "n" and "CIS" rows.
inline std::string emit_trend_csv(const TrendTable& table) {
  std::string out = "title";
  for (const auto& y : table.years) out += "," + y;
  out += '\n';
  for (std::size_t r = 0; r < table.titles.size(); ++r) {
    out += table.titles[r];
    for (const auto& cell : table.cells[r]) out += "," + detail::optional_fixed(cell, 3);
    out += '\n';
  }
  out += "n";
  for (const auto& s : table.summary) out += "," + std::to_string(s.n);
  out += "\nCIS";
  for (const auto& s : table.summary) out += "," + text::fixed(s.cis, 3);
  out += '\n';
  return out;
}

// Reads the emit_trend_csv layout. When the "n"/"CIS" rows are missing the
// summary is derived from the present cells of each column.
inline TrendTable parse_trend_csv(std::string_view input) {
  const auto lines = text::lines(input);
  if (lines.empty()) throw ParseError(0, "trend table: empty input");
  const auto header = text::split(lines.front().content, ',');
  if (text::trim(header.front()) != "title") throw ParseError(lines.front().number, "header must start with 'title'");

  TrendTable table;
  for (std::size_t k = 1; k < header.size(); ++k) table.years.emplace_back(text::trim(header[k]));
  const std::size_t years = table.years.size();
  if (years == 0) throw ParseError(lines.front().number, "header lists no years");

  std::optional<std::vector<std::size_t>> ns;
  std::optional<std::vector<double>> cis;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto cells = text::split(line.content, ',');
    if (cells.size() != years + 1)
      throw ParseError(line.number, "expected " + std::to_string(years + 1) + " cells, found " +
                                        std::to_string(cells.size()));
    const std::string title(text::trim(cells.front()));
    if (title == "n") {
      ns.emplace();
      for (std::size_t y = 0; y < years; ++y) ns->push_back(detail::parse_count(cells[y + 1], line.number, "n"));
    } else if (title == "CIS") {
      cis.emplace();
      for (std::size_t y = 0; y < years; ++y) cis->push_back(detail::parse_real(cells[y + 1], line.number, "CIS"));
    } else {
      if (title.empty()) throw ParseError(line.number, "empty journal title");
      std::vector<std::optional<double>> row;
      for (std::size_t y = 0; y < years; ++y) {
        if (text::trim(cells[y + 1]).empty())
          row.emplace_back();
        else
          row.emplace_back(detail::parse_real(cells[y + 1], line.number, "CI"));
      }
      table.titles.push_back(title);
      table.cells.push_back(std::move(row));
    }
  }

  for (std::size_t y = 0; y < years; ++y) {
    std::vector<double> present;
    for (const auto& row : table.cells)
      if (row[y]) present.push_back(*row[y]);
    YearSummary s;
    s.n = ns ? (*ns)[y] : present.size();
    if (cis)
      s.cis = (*cis)[y];
    else if (!present.empty())
      s.cis = subject_cis(present);
    table.summary.push_back(s);
  }
  return table;
}

// Block dump of one analysis: similarity, competition, CI and CIS. Header
// comment lines record the subject, year, config and warnings.
inline std::string emit_analysis_csv(const SubjectAnalysis& a) {
  std::ostringstream os;
  os << "# subject=" << a.snapshot.subject << " year=" << a.snapshot.year_label << " n=" << a.n() << "\n";
  os << "# " << a.config_used.describe() << "\n";
  for (const auto& w : a.competition.warnings) os << "# warning " << to_string(w.kind) << ": " << w.message << "\n";

  const auto& order = a.snapshot.matrix.order;
  auto matrix_block = [&](const char* name, const Matrix<double>& m) {
    os << "[" << name << "]\n";
    for (const auto& t : order) os << "," << t;
    os << "\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      os << order[i];
      for (std::size_t j = 0; j < order.size(); ++j) os << "," << text::fixed(m(i, j), 6);
      os << "\n";
    }
    os << "\n";
  };
  matrix_block("similarity", a.similarity.values());
  matrix_block("competition", a.competition.values);

  os << "[ci]\ntitle,ci\n";
  for (std::size_t i = 0; i < order.size(); ++i) os << order[i] << "," << detail::optional_fixed(a.ci[i], 3) << "\n";
  os << "\n[cis]\nCIS," << text::fixed(a.cis, 3) << "\n";
  return os.str();
}

}  // namespace jcomp
