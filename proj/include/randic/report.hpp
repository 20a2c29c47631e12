#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "randic/bounds.hpp"
#include "randic/conjectures.hpp"
#include "randic/graph.hpp"
#include "randic/search.hpp"
#include "randic/survey.hpp"

namespace randic {

inline constexpr const char* kToolName = "randic-verify";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { kCsv, kJsonl };

ReportFormat parse_report_format(const std::string& text);

/// Run metadata written at the top of every report.
struct ReportHeader {
  std::string command;
  double tol = kDefaultTolerance;
  std::optional<std::uint64_t> seed;
  std::string filter;
};

struct ReportRecord {
  std::string graph_id;  // graph6
  InvariantReport invariants;
  std::vector<ConjectureVerdict> verdicts;
  PremiseProfile premises;
  std::optional<bounds::BoundProfile> bounds;
  std::vector<std::string> anomalies;

  bool any_violation() const;
};

/// Runs every applicable check on g. C1 verdicts need a connected graph with
/// n >= 3, C2 needs n >= 2; the bound profile needs n >= 2 and min degree >= 1.
/// Anomalies name violated verdicts, disagreements between numeric equality
/// and the extremal-graph test, violated lemma bounds, and disconnection.
ReportRecord build_record(const Graph& g, double tol);

/// Formats with 12 significant digits, the precision used in every report.
std::string format_real(double x);

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {}

  void header(const ReportHeader& h);
  void record(const ReportRecord& r);

 private:
  std::ostream& out_;
  ReportFormat format_;
};

void write_survey(std::ostream& out, ReportFormat format, const ReportHeader& h, const SurveyResult& s);
void write_hunt(std::ostream& out, ReportFormat format, const ReportHeader& h, const SearchState& s,
                int n, int delta, int budget);

/// Column names of the check report, in emission order.
const std::vector<std::string>& check_csv_columns();

}  // namespace randic
