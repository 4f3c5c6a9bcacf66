#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jcomp/config.hpp"
#include "jcomp/error.hpp"
#include "jcomp/ingest.hpp"
#include "jcomp/metrics.hpp"
#include "jcomp/text.hpp"

namespace jcomp {

// Full pipeline output for one subject-year.
struct SubjectAnalysis {
  SubjectSnapshot snapshot;
  SimilarityMatrix similarity;
  CompetitionMatrix competition;
  std::vector<std::optional<double>> ci;  // absent for journals excluded as basic
  double cis = 0.0;
  AnalysisConfig config_used;

  std::size_t n() const noexcept { return snapshot.n(); }
};

inline SubjectAnalysis analyze_snapshot(const SubjectSnapshot& snapshot, const AnalysisConfig& cfg = {}) {
  if (snapshot.records.size() != snapshot.n())
    throw ValidationError("snapshot has " + std::to_string(snapshot.records.size()) + " records for " +
                          std::to_string(snapshot.n()) + " journals");

  SubjectAnalysis out{snapshot, similarity_matrix(snapshot.matrix, cfg), {}, {}, 0.0, cfg};
  out.competition = competition_matrix(snapshot.total_citations(), out.similarity, cfg);

  const auto row_sums = journal_ci_vector(out.competition);
  std::vector<double> present;
  out.ci.reserve(row_sums.size());
  for (std::size_t i = 0; i < row_sums.size(); ++i) {
    if (out.competition.is_excluded(i)) {
      out.ci.push_back(std::nullopt);
    } else {
      out.ci.push_back(row_sums[i]);
      present.push_back(row_sums[i]);
    }
  }
  if (present.empty()) throw ValidationError("no journal in the snapshot has positive total citations");
  out.cis = subject_cis(present);
  return out;
}

enum class RankDirection { descending, ascending };

// Competition ranking ("1224"): rank = 1 + number of strictly better values.
// Absent values get absent ranks.
inline std::vector<std::optional<std::size_t>> rank_journals(std::span<const std::optional<double>> values,
                                                             RankDirection direction = RankDirection::descending) {
  std::vector<double> present;
  for (const auto& v : values)
    if (v) present.push_back(*v);
  std::sort(present.begin(), present.end());

  std::vector<std::optional<std::size_t>> ranks;
  ranks.reserve(values.size());
  for (const auto& v : values) {
    if (!v) {
      ranks.push_back(std::nullopt);
      continue;
    }
    const std::size_t better = direction == RankDirection::descending
                                   ? static_cast<std::size_t>(present.end() -
                                                              std::upper_bound(present.begin(), present.end(), *v))
                                   : static_cast<std::size_t>(std::lower_bound(present.begin(), present.end(), *v) -
                                                              present.begin());
    ranks.push_back(better + 1);
  }
  return ranks;
}

inline std::vector<std::optional<std::size_t>> rank_journals(const std::vector<std::optional<double>>& values,
                                                             RankDirection direction = RankDirection::descending) {
  return rank_journals(std::span<const std::optional<double>>(values), direction);
}

struct ReportRow {
  std::string title;
  std::optional<double> ci;
  std::optional<std::size_t> ci_rank;
  std::optional<double> impact_factor;
  std::optional<std::size_t> if_rank;
  Count total_citations = 0;
  std::size_t tc_rank = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// CI compared with IF and TC; rows sorted by ci_rank, then title.
struct RankedReport {
  std::vector<ReportRow> rows;
};

struct ReportInput {
  std::string title;
  std::optional<double> ci;
  std::optional<double> impact_factor;
  Count total_citations = 0;
};

// All three columns rank descending: highest CI, IF and TC are rank 1.
inline RankedReport comparison_report(std::span<const ReportInput> inputs) {
  std::vector<std::optional<double>> ci, impact, tc;
  for (const auto& in : inputs) {
    ci.push_back(in.ci);
    impact.push_back(in.impact_factor);
    tc.push_back(static_cast<double>(in.total_citations));
  }
  const auto ci_rank = rank_journals(ci);
  const auto if_rank = rank_journals(impact);
  const auto tc_rank = rank_journals(tc);

  RankedReport report;
  for (std::size_t k = 0; k < inputs.size(); ++k)
    report.rows.push_back({inputs[k].title, inputs[k].ci, ci_rank[k], inputs[k].impact_factor, if_rank[k],
                           inputs[k].total_citations, tc_rank[k].value_or(0)});

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.ci_rank.has_value() != b.ci_rank.has_value()) return a.ci_rank.has_value();
    if (a.ci_rank != b.ci_rank) return *a.ci_rank < *b.ci_rank;
    return text::fold(a.title) < text::fold(b.title);
  });
  return report;
}

inline RankedReport comparison_report(const std::vector<ReportInput>& inputs) {
  return comparison_report(std::span<const ReportInput>(inputs));
}

inline RankedReport comparison_report(const SubjectAnalysis& analysis) {
  std::vector<ReportInput> inputs;
  for (std::size_t k = 0; k < analysis.n(); ++k) {
    const auto& rec = analysis.snapshot.records[k];
    inputs.push_back({analysis.snapshot.matrix.order[k], analysis.ci[k], rec.impact_factor, rec.total_citations});
  }
  return comparison_report(inputs);
}

struct YearSummary {
  std::size_t n = 0;
  double cis = 0.0;

  friend bool operator==(const YearSummary&, const YearSummary&) = default;
};

// Journals x years grid of CI values plus a per-year (n, CIS) summary.
struct TrendTable {
  std::vector<std::string> years;
  std::vector<std::string> titles;
  std::vector<std::vector<std::optional<double>>> cells;  // [title][year]
  std::vector<YearSummary> summary;                       // [year]

  friend bool operator==(const TrendTable&, const TrendTable&) = default;
};

// One year's worth of trend input.
struct YearColumn {
  std::string label;
  std::vector<std::string> titles;
  std::vector<std::optional<double>> ci;
  YearSummary summary;
};

inline YearColumn year_column(const SubjectAnalysis& analysis) {
  return {analysis.snapshot.year_label, analysis.snapshot.matrix.order, analysis.ci, {analysis.n(), analysis.cis}};
}

// Titles are joined case-insensitively and listed alphabetically (by the
// folded key); the first spelling seen is kept for display.
inline TrendTable trend_from_columns(std::span<const YearColumn> columns) {
  if (columns.empty()) throw ValidationError("trend needs at least one year");
  std::unordered_set<std::string> labels;
  for (const auto& col : columns) {
    if (!labels.insert(col.label).second) throw ValidationError("duplicate year label '" + col.label + "'");
    if (col.titles.size() != col.ci.size())
      throw DimensionError("year '" + col.label + "' has mismatched title and CI counts");
  }

  std::map<std::string, std::string> display;  // folded -> first spelling
  for (const auto& col : columns)
    for (const auto& t : col.titles) display.emplace(text::fold(t), t);

  TrendTable table;
  std::unordered_map<std::string, std::size_t> row_of;
  for (const auto& [key, title] : display) {
    row_of.emplace(key, table.titles.size());
    table.titles.push_back(title);
  }
  table.cells.assign(table.titles.size(), std::vector<std::optional<double>>(columns.size()));
  for (std::size_t y = 0; y < columns.size(); ++y) {
    const auto& col = columns[y];
    table.years.push_back(col.label);
    table.summary.push_back(col.summary);
    std::unordered_set<std::size_t> filled;
    for (std::size_t k = 0; k < col.titles.size(); ++k) {
      const auto row = row_of.at(text::fold(col.titles[k]));
      if (!filled.insert(row).second)
        throw ValidationError("year '" + col.label + "' lists '" + col.titles[k] + "' twice");
      table.cells[row][y] = col.ci[k];
    }
  }
  return table;
}

inline TrendTable trend_from_columns(const std::vector<YearColumn>& columns) {
  return trend_from_columns(std::span<const YearColumn>(columns));
}

// Analyses must already be in year order; that order becomes the column order.
inline TrendTable trend_series(std::span<const SubjectAnalysis> analyses) {
  std::vector<YearColumn> columns;
  columns.reserve(analyses.size());
  for (const auto& a : analyses) columns.push_back(year_column(a));
  return trend_from_columns(columns);
}

inline TrendTable trend_series(const std::vector<SubjectAnalysis>& analyses) {
  return trend_series(std::span<const SubjectAnalysis>(analyses));
}

}  // namespace jcomp
