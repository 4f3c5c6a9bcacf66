#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage error, 2 validation or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jcomp/analysis.hpp"
#include "jcomp/config.hpp"
#include "jcomp/error.hpp"
#include "jcomp/export.hpp"
#include "jcomp/ingest.hpp"

namespace jcomp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invalid = 2;

namespace detail {

struct Options {
  std::string matrix;
  std::string meta;
  std::string subject = "subject";
  std::string label;
  std::string out;
  std::string diagonal = "include";
  std::string symmetrize = "sum";
  std::string zero_tc = "reject";
  double epsilon = 1e-9;
  std::string format = "csv";
  double threshold = 0.0;
  std::string size_mode = "area_tc";
  std::vector<std::string> years;

  AnalysisConfig config() const {
    AnalysisConfig cfg;
    cfg.similarity_clamp_epsilon = epsilon;
    cfg.diagonal_policy = *parse_diagonal_policy(diagonal);
    cfg.symmetrization = *parse_symmetrization(symmetrize);
    cfg.zero_tc_policy = *parse_zero_tc_policy(zero_tc);
    return cfg;
  }
};

inline void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--diagonal", o.diagonal, "Self-citation cells in cosine vectors")
      ->check(CLI::IsMember({"include", "exclude"}))
      ->capture_default_str();
  cmd->add_option("--symmetrize", o.symmetrize, "How the citation matrix is made undirected")
      ->check(CLI::IsMember({"sum", "citing_only", "cited_only"}))
      ->capture_default_str();
  cmd->add_option("--epsilon", o.epsilon, "Similarity clamp: s is capped at 1 - epsilon")
      ->capture_default_str();
  cmd->add_option("--zero-tc", o.zero_tc, "Policy for journals with zero total citations")
      ->check(CLI::IsMember({"reject", "exclude_as_basic"}))
      ->capture_default_str();
}

inline void add_snapshot_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--matrix", o.matrix, "Citation matrix CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--meta", o.meta, "Journal metadata CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--subject", o.subject, "Subject name recorded in the output")->capture_default_str();
  cmd->add_option("--label", o.label, "Year label recorded in the output");
  add_config_flags(cmd, o);
}

// Writes the whole buffer or nothing: temp file in the target directory,
// then rename over the destination.
inline void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    out.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot write '" + tmp.string() + "'");
    f << content;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ValidationError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ValidationError("cannot write '" + target.string() + "'");
  }
}

struct YearSpec {
  std::string label;
  std::string matrix;
  std::string meta;
};

// LABEL:MATRIX:META. The label may not contain ':'; the last ':' splits
// matrix from metadata.
inline YearSpec parse_year_spec(const std::string& spec) {
  const auto first = spec.find(':');
  const auto last = spec.rfind(':');
  if (first == std::string::npos || first == last || first == 0)
    throw CLI::ValidationError("--year", "expected LABEL:MATRIX:META, got '" + spec + "'");
  return {spec.substr(0, first), spec.substr(first + 1, last - first - 1), spec.substr(last + 1)};
}

inline SubjectAnalysis analyze_files(const Options& o, const std::string& matrix, const std::string& meta,
                                     const std::string& label) {
  const auto cfg = o.config();
  return analyze_snapshot(load_subject_year(matrix, meta, o.subject, label, cfg), cfg);
}

// Echoes every setting so outputs are self-describing.
inline std::string header_comment(const Options& o, std::string_view open = "# ", std::string_view close = "") {
  std::string label = o.label.empty() ? std::string() : " year=" + o.label;
  return std::string(open) + "subject=" + o.subject + label + " " + o.config().describe() + std::string(close) + "\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Competitive pressure and intensity of journals within a subject", "jcomp"};
  app.require_subcommand(1, 1);

  auto* validate = app.add_subcommand("validate", "Check a matrix/metadata pair and report warnings");
  detail::add_snapshot_flags(validate, o);

  auto* analyze = app.add_subcommand("analyze", "Similarity, competition, CI and CIS as CSV blocks");
  detail::add_snapshot_flags(analyze, o);
  analyze->add_option("--out", o.out, "Output file (default: standard output)");

  auto* rank = app.add_subcommand("rank", "Rank journals by CI, IF and TC");
  detail::add_snapshot_flags(rank, o);
  rank->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();
  rank->add_option("--out", o.out, "Output file (default: standard output)");

  auto* trend = app.add_subcommand("trend", "CI per journal across years plus (n, CIS) per year");
  trend->add_option("--year", o.years, "LABEL:MATRIX:META, repeatable, in year order")->required();
  trend->add_option("--subject", o.subject, "Subject name recorded in the output")->capture_default_str();
  detail::add_config_flags(trend, o);
  trend->add_option("--out", o.out, "Output file (default: standard output)");

  auto* net = app.add_subcommand("export-net", "Similarity network as a Pajek .net file");
  detail::add_snapshot_flags(net, o);
  net->add_option("--threshold", o.threshold, "Keep edges with similarity above this value")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  net->add_option("--size-mode", o.size_mode, "Vertex size from TC")
      ->check(CLI::IsMember({"area_tc", "raw_tc"}))
      ->capture_default_str();
  net->add_option("--out", o.out, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    o.config().validate();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return exit_usage;
  }

  try {
    if (validate->parsed()) {
      const auto a = detail::analyze_files(o, o.matrix, o.meta, o.label);
      const auto tc = a.snapshot.total_citations();
      const auto [lo, hi] = std::minmax_element(tc.begin(), tc.end());
      out << detail::header_comment(o);
      out << "n=" << a.n() << "\n";
      out << "tc_min=" << *lo << "\n";
      out << "tc_max=" << *hi << "\n";
      out << "warnings=" << a.competition.warnings.size() << "\n";
      for (const auto& w : a.competition.warnings) out << "warning " << to_string(w.kind) << ": " << w.message << "\n";
      return exit_ok;
    }
    if (analyze->parsed()) {
      const auto a = detail::analyze_files(o, o.matrix, o.meta, o.label);
      detail::write_output(o.out, emit_analysis_csv(a), out);
      return exit_ok;
    }
    if (rank->parsed()) {
      const auto report = comparison_report(detail::analyze_files(o, o.matrix, o.meta, o.label));
      const auto body = o.format == "md" ? detail::header_comment(o, "<!-- ", " -->") + emit_report_markdown(report)
                                         : detail::header_comment(o) + emit_report_csv(report);
      detail::write_output(o.out, body, out);
      return exit_ok;
    }
    if (trend->parsed()) {
      std::vector<detail::YearSpec> specs;
      for (const auto& y : o.years) specs.push_back(detail::parse_year_spec(y));
      std::vector<YearColumn> columns;
      std::vector<std::string> labels;
      for (const auto& s : specs) {
        if (std::find(labels.begin(), labels.end(), s.label) != labels.end())
          throw ValidationError("duplicate year label '" + s.label + "'");
        labels.push_back(s.label);
      }
      for (const auto& s : specs) columns.push_back(year_column(detail::analyze_files(o, s.matrix, s.meta, s.label)));
      detail::write_output(o.out, detail::header_comment(o) + emit_trend_csv(trend_from_columns(columns)), out);
      return exit_ok;
    }
    if (net->parsed()) {
      const auto a = detail::analyze_files(o, o.matrix, o.meta, o.label);
      detail::write_output(o.out, emit_pajek(a, o.threshold, *parse_size_mode(o.size_mode)), out);
      return exit_ok;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_usage;
}

}  // namespace jcomp::cli
