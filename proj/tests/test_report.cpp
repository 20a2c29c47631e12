#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "randic/enumeration.hpp"
#include "randic/report.hpp"

using namespace randic;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("build_record on a path") {
  ReportRecord r = build_record(path_graph(5), 1e-9);
  CHECK(r.graph_id == "DhC");
  REQUIRE(r.verdicts.size() == 3);
  CHECK(r.verdicts[0].is_equality);
  CHECK(r.verdicts[1].is_equality);
  CHECK_FALSE(r.verdicts[2].is_equality);
  CHECK(r.anomalies.empty());
  CHECK_FALSE(r.any_violation());
  REQUIRE(r.bounds.has_value());
  CHECK(r.bounds->k == 1);
}

TEST_CASE("build_record on special inputs") {
  ReportRecord split_graph = build_record(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1e-9);
  CHECK(split_graph.verdicts.empty());
  CHECK(split_graph.anomalies == std::vector<std::string>{"disconnected"});
  CHECK_FALSE(split_graph.invariants.diameter.has_value());

  ReportRecord k2 = build_record(complete_graph(2), 1e-9);
  REQUIRE(k2.verdicts.size() == 1);
  CHECK(k2.verdicts[0].is_equality);
  CHECK(k2.anomalies.empty());

  ReportRecord k1 = build_record(Graph(1), 1e-9);
  CHECK(k1.verdicts.empty());
  CHECK_FALSE(k1.bounds.has_value());
  CHECK(k1.anomalies.empty());
}

TEST_CASE("a huge tolerance turns non-path near-equalities into anomalies") {
  ReportRecord r = build_record(cycle_graph(4), 10.0);
  CHECK_FALSE(r.anomalies.empty());
  CHECK(r.anomalies[0] == "c1_add_equality_off_extremal");
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("negative tolerance reports violations") {
  ReportRecord r = build_record(path_graph(4), -1.0);
  CHECK(r.any_violation());
  CHECK(std::find(r.anomalies.begin(), r.anomalies.end(), "c1_add_violated") != r.anomalies.end());
}

TEST_CASE("format_real uses 12 significant digits") {
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(-0.585786437626905) == "-0.585786437627");
}

TEST_CASE("CSV and JSONL carry identical values") {
  std::ostringstream csv, jsonl;
  RecordWriter cw(csv, ReportFormat::kCsv), jw(jsonl, ReportFormat::kJsonl);
  ReportHeader h{"test", 1e-9, std::nullopt, "none"};
  cw.header(h);
  jw.header(h);
  std::vector<Graph> graphs = enumerate_graphs({5, std::nullopt, false});
  graphs.push_back(complete_graph(2));
  graphs.push_back(Graph(1));
  for (const Graph& g : graphs) {
    ReportRecord r = build_record(g, 1e-9);
    cw.record(r);
    jw.record(r);
  }

  auto rows = data_lines(csv.str());
  auto objs = data_lines(jsonl.str());
  REQUIRE(rows.size() == graphs.size() + 1);
  REQUIRE(objs.size() == graphs.size() + 1);
  auto header = nlohmann::json::parse(objs[0]);
  CHECK(header["header"]["tol"] == 1e-9);
  CHECK(header["header"]["rng"] == kRngAlgorithm);

  const auto cols = split(rows[0], ',');
  CHECK(cols == check_csv_columns());
  auto num = [](const std::string& s) { return std::strtod(s.c_str(), nullptr); };
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split(rows[i], ',');
    REQUIRE(f.size() == cols.size());
    auto j = nlohmann::json::parse(objs[i]);
    CHECK(f[0] == j["graph6"].get<std::string>());
    CHECK(std::stoi(f[1]) == j["invariants"]["n"].get<int>());
    CHECK(std::stoi(f[2]) == j["invariants"]["m"].get<int>());
    CHECK(num(f[6]) == j["invariants"]["randic"].get<double>());
    if (j["invariants"]["avg_distance"].is_null()) {
      CHECK(f[8].empty());
    } else {
      CHECK(num(f[8]) == j["invariants"]["avg_distance"].get<double>());
      CHECK(std::stoi(f[7]) == j["invariants"]["diameter"].get<int>());
    }
    for (const auto& v : j["verdicts"]) {
      const std::string claim = v["claim"];
      const std::size_t base = claim == "C1_ADD" ? 9 : claim == "C1_RATIO" ? 12 : 15;
      CHECK(f[base] == (v["holds"].get<bool>() ? "true" : "false"));
      CHECK(num(f[base + 1]) == v["slack"].get<double>());
      CHECK(f[base + 2] == (v["is_equality"].get<bool>() ? "true" : "false"));
    }
    if (!j["bounds"].is_null()) {
      CHECK(num(f[23]) == j["bounds"]["randic_lb"].get<double>());
      CHECK(num(f[27]) == j["bounds"]["g_val"].get<double>());
    }
    CHECK(f[28] == (j["anomalies"].empty() ? "" : j["anomalies"][0].get<std::string>()));
  }
}

TEST_CASE("survey and hunt writers") {
  SurveyResult s = run_survey(30, 1e-9);
  std::ostringstream csv, jsonl;
  write_survey(csv, ReportFormat::kCsv, {"survey", 1e-9, std::nullopt, "n_max=30"}, s);
  write_survey(jsonl, ReportFormat::kJsonl, {"survey", 1e-9, std::nullopt, "n_max=30"}, s);
  auto objs = data_lines(jsonl.str());
  CHECK(objs.size() == s.families.size() + 2);
  CHECK(nlohmann::json::parse(objs.back())["summary"]["total_violations"] == 0);
  CHECK(csv.str().find("summary,g_nonneg,>= 0,") != std::string::npos);
  CHECK(csv.str().find("boundary,g_nonneg,>= 0,2,1,,0,") != std::string::npos);

  SearchState st = hunt(6, 1, ClaimId::kC1Additive, 50, 9);
  std::ostringstream hj, hc;
  write_hunt(hj, ReportFormat::kJsonl, {"hunt", 1e-9, 9, "n=6"}, st, 6, 1, 50);
  write_hunt(hc, ReportFormat::kCsv, {"hunt", 1e-9, 9, "n=6"}, st, 6, 1, 50);
  auto lines = data_lines(hj.str());
  CHECK(lines.size() == 52);
  auto result = nlohmann::json::parse(lines.back());
  CHECK(result["type"] == "result");
  CHECK(result["best_slack"].get<double>() == std::strtod(format_real(st.best_slack).c_str(), nullptr));
  CHECK(nlohmann::json::parse(lines[0])["header"]["seed"] == 9);
  CHECK(data_lines(hc.str()).size() == 52);
}

TEST_CASE("parse_report_format") {
  CHECK(parse_report_format("csv") == ReportFormat::kCsv);
  CHECK(parse_report_format("jsonl") == ReportFormat::kJsonl);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
}
