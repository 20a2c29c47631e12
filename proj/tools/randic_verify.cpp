// randic-verify: per-graph checks, exhaustive corpora, analytic grid surveys
// and counterexample hunting for the Randić index conjectures.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "randic/conjectures.hpp"
#include "randic/enumeration.hpp"
#include "randic/graph6.hpp"
#include "randic/report.hpp"
#include "randic/search.hpp"
#include "randic/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr std::size_t kBatchLines = 4096;

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::runtime_error("cannot open output file " + path);
    stream = file.get();
  }
};

struct LineError {
  std::size_t line_no;
  std::string message;
};

using LineOutcome = std::variant<std::monostate, randic::ReportRecord, LineError>;

LineOutcome process_line(const std::string& line, std::size_t line_no, double tol) {
  std::string_view body = randic::strip_format_header(line);
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return std::monostate{};
  try {
    return randic::build_record(randic::parse_graph_line(body), tol);
  } catch (const std::exception& e) {
    return LineError{line_no, e.what()};
  }
}

// Processes a batch on `jobs` threads; results keep input order.
std::vector<LineOutcome> process_batch(const std::vector<std::string>& lines, std::size_t first_line_no,
                                       double tol, unsigned jobs) {
  std::vector<LineOutcome> out(lines.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, lines.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < lines.size(); i += workers) out[i] = process_line(lines[i], first_line_no + i, tol);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

int run_check(const std::string& input, double tol, const std::string& format, const std::string& out_path,
              bool strict, unsigned jobs) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open " << input << "\n";
      return kExitInputError;
    }
    in = &file;
  }
  OutputTarget target(out_path);
  randic::RecordWriter writer(*target.stream, randic::parse_report_format(format));
  writer.header({"check " + (input.empty() ? std::string("-") : input), tol, std::nullopt, "none"});

  bool violation = false;
  bool input_error = false;
  std::size_t line_no = 0;
  std::vector<std::string> batch;
  std::string line;
  bool eof = false;
  while (!eof) {
    batch.clear();
    const std::size_t first = line_no + 1;
    while (batch.size() < kBatchLines && std::getline(*in, line)) {
      batch.push_back(line);
      ++line_no;
    }
    eof = batch.size() < kBatchLines;
    for (auto& outcome : process_batch(batch, first, tol, jobs)) {
      if (auto* rec = std::get_if<randic::ReportRecord>(&outcome)) {
        writer.record(*rec);
        violation = violation || rec->any_violation();
      } else if (auto* err = std::get_if<LineError>(&outcome)) {
        std::cerr << "line " << err->line_no << ": " << err->message << "\n";
        input_error = true;
        if (strict) return kExitInputError;
      }
    }
  }
  if (input_error) return kExitInputError;
  return violation ? kExitViolation : kExitOk;
}

int run_enumerate(int n, int min_degree, const std::string& out_path) {
  randic::CorpusFilter filter{n, std::nullopt, true};
  if (min_degree > 0) filter.min_degree_at_least = min_degree;
  OutputTarget target(out_path);
  randic::for_each_graph(filter, [&](const randic::Graph& g) { *target.stream << randic::serialize_graph6(g) << "\n"; });
  return kExitOk;
}

int run_survey(int n_max, double tol, const std::string& format, const std::string& out_path) {
  auto result = randic::run_survey(n_max, tol);
  OutputTarget target(out_path);
  randic::write_survey(*target.stream, randic::parse_report_format(format),
                       {"survey", tol, std::nullopt, "n_max=" + std::to_string(n_max)}, result);
  for (const auto& f : result.families) {
    if (f.violations > 0) std::cerr << f.name << ": " << f.violations << " violating cells\n";
  }
  return result.total_violations() == 0 ? kExitOk : kExitViolation;
}

int run_hunt(int n, int delta, const std::string& claim, int budget, std::uint64_t seed, double tol,
             const std::string& format, const std::string& out_path) {
  const auto id = randic::parse_claim(claim);
  auto state = randic::hunt(n, delta, id, budget, seed);
  OutputTarget target(out_path);
  randic::ReportHeader header{"hunt", tol, seed,
                              "n=" + std::to_string(n) + " min_degree>=" + std::to_string(delta) + " connected"};
  randic::write_hunt(*target.stream, randic::parse_report_format(format), header, state, n, delta, budget);
  std::cerr << randic::claim_name(id) << " best_slack=" << randic::format_real(state.best_slack)
            << " best=" << randic::serialize_graph6(state.best) << "\n";
  return state.best_slack < -tol ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randić index invariants and conjecture verification"};
  app.set_version_flag("--version", std::string(randic::kToolVersion));
  app.require_subcommand(1);

  double tol = randic::kDefaultTolerance;
  std::string format = "jsonl";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Inequality tolerance")->capture_default_str();
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  auto* check = app.add_subcommand("check", "Check graph6/sparse6 graphs against the conjectures and bounds");
  std::string input;
  bool strict = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  check->add_option("input", input, "Input file (default stdin)");
  check->add_flag("--strict", strict, "Stop at the first malformed line");
  check->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(check);

  auto* enumerate = app.add_subcommand("enumerate", "Write every connected graph on n <= 8 vertices as graph6");
  int n = 0;
  int min_degree = 0;
  enumerate->add_option("n", n, "Order")->required()->check(CLI::Range(1, randic::kMaxEnumerationOrder));
  enumerate->add_option("--min-degree", min_degree, "Keep graphs with minimum degree at least this");
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  auto* survey = app.add_subcommand("survey", "Scan the analytic bound functions over an (n, k) grid");
  int n_max = randic::kDefaultSurveyMaxOrder;
  survey->add_option("--n-max", n_max, "Largest order in the grid")->check(CLI::Range(4, 1000000))->capture_default_str();
  add_common(survey);

  auto* hunt = app.add_subcommand("hunt", "Local search for counterexamples");
  std::string claim;
  int budget = 1000;
  std::uint64_t seed = 0;
  int hunt_delta = 1;
  hunt->add_option("n", n, "Order")->required();
  hunt->add_option("claim", claim, "C1_ADD, C1_RATIO or C2")->required()->check(CLI::IsMember({"C1_ADD", "C1_RATIO", "C2"}));
  hunt->add_option("--min-degree", hunt_delta, "Minimum degree constraint")->capture_default_str();
  hunt->add_option("--budget", budget, "Step budget")->capture_default_str();
  hunt->add_option("--seed", seed, "RNG seed")->capture_default_str();
  add_common(hunt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return run_check(input, tol, format, out_path, strict, jobs);
    if (*enumerate) return run_enumerate(n, min_degree, out_path);
    if (*survey) return run_survey(n_max, tol, format, out_path);
    if (*hunt) return run_hunt(n, hunt_delta, claim, budget, seed, tol, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
