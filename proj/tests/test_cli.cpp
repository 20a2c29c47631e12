#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kBin = RANDIC_VERIFY_BIN;
const std::string kTmp = RANDIC_TEST_TMPDIR;

int run(const std::string& args) {
  const int status = std::system((kBin + " " + args).c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string path(const std::string& name) { return kTmp + "/" + name; }

void write_file(const std::string& name, const std::string& content) { std::ofstream(path(name)) << content; }

std::vector<std::string> lines_of(const std::string& name, bool skip_comments = true) {
  std::ifstream in(path(name));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (skip_comments && !line.empty() && line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(run("enumerate 4 --out " + path("n4.g6")) == 0);
  CHECK(lines_of("n4.g6").size() == 6);
  CHECK(run("enumerate 6 --min-degree 5 --out " + path("k6.g6")) == 0);
  CHECK(lines_of("k6.g6") == std::vector<std::string>{"E~~w"});
  CHECK(run("enumerate 3 --out " + path("n3.g6")) == 0);
  CHECK(lines_of("n3.g6").size() == 2);
  CHECK(run("enumerate 9 2>/dev/null") == 2);
}

TEST_CASE("check over the n = 5 corpus") {
  REQUIRE(run("enumerate 5 --out " + path("n5.g6")) == 0);
  CHECK(run("check " + path("n5.g6") + " --out " + path("n5.jsonl")) == 0);
  auto lines = lines_of("n5.jsonl");
  REQUIRE(lines.size() == 22);
  auto header = nlohmann::json::parse(lines[0]);
  CHECK(header["header"]["tool"] == "randic-verify");
  CHECK(header["header"]["tol"] == 1e-9);
  int equalities = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto j = nlohmann::json::parse(lines[i]);
    CHECK(j["anomalies"].empty());
    for (const auto& v : j["verdicts"]) equalities += v["is_equality"].get<bool>();
  }
  CHECK(equalities == 2);  // both C1 forms on P_5

  CHECK(run("check " + path("n5.g6") + " --format csv --out " + path("n5.csv")) == 0);
  CHECK(lines_of("n5.csv").size() == 22);
  CHECK(run("check --jobs 1 < " + path("n5.g6") + " > " + path("n5_stdin.jsonl")) == 0);
  auto from_stdin = lines_of("n5_stdin.jsonl");
  auto from_file = lines_of("n5.jsonl");
  REQUIRE(from_stdin.size() == from_file.size());
  CHECK(std::equal(from_stdin.begin() + 1, from_stdin.end(), from_file.begin() + 1));
}

TEST_CASE("check exit codes") {
  write_file("empty.g6", "");
  CHECK(run("check " + path("empty.g6") + " --out " + path("empty.jsonl")) == 0);
  CHECK(lines_of("empty.jsonl").size() == 1);

  write_file("split.g6", ">>graph6<<C`\n");  // two disjoint edges
  CHECK(run("check " + path("split.g6") + " --out " + path("split.jsonl")) == 0);
  auto rec = nlohmann::json::parse(lines_of("split.jsonl").at(1));
  CHECK(rec["anomalies"][0] == "disconnected");
  CHECK(rec["invariants"]["diameter"].is_null());
  CHECK(rec["invariants"]["avg_distance"].is_null());

  write_file("bad.g6", "Ch\nB`\nD~{\n");
  CHECK(run("check " + path("bad.g6") + " --out " + path("bad.jsonl") + " 2>" + path("bad.err")) == 2);
  CHECK(lines_of("bad.jsonl").size() == 3);  // header + two good records
  CHECK(lines_of("bad.err").at(0).rfind("line 2:", 0) == 0);
  CHECK(run("check --strict " + path("bad.g6") + " --out " + path("bad_strict.jsonl") + " 2>/dev/null") == 2);
  CHECK(lines_of("bad_strict.jsonl").size() == 2);

  // A negative tolerance makes the path's equality a violation.
  write_file("p4.g6", "Ch\n");
  CHECK(run("check " + path("p4.g6") + " --tol -1 --out " + path("p4.jsonl")) == 1);

  CHECK(run("check " + path("missing.g6") + " 2>/dev/null") == 2);
  CHECK(run("check --format xml " + path("p4.g6") + " 2>/dev/null >/dev/null") == 2);
}

TEST_CASE("survey") {
  CHECK(run("survey --n-max 100 --out " + path("survey.jsonl")) == 0);
  auto lines = lines_of("survey.jsonl");
  CHECK(lines.size() == 11);
  CHECK(run("survey --n-max 100 --tol -1000 --out /dev/null 2>/dev/null") == 1);
  CHECK(run("survey --n-max 3 2>/dev/null") == 2);
}

TEST_CASE("hunt") {
  CHECK(run("hunt 6 C1_ADD --min-degree 1 --budget 1000 --seed 42 --out " + path("hunt.jsonl") + " 2>/dev/null") == 0);
  auto result = nlohmann::json::parse(lines_of("hunt.jsonl").back());
  CHECK(result["is_path"] == true);
  CHECK(std::abs(result["best_slack"].get<double>()) <= 1e-9);
  CHECK(run("hunt 6 C1_ADD --min-degree 1 --budget 1000 --seed 42 --out " + path("hunt2.jsonl") + " 2>/dev/null") == 0);
  CHECK(lines_of("hunt.jsonl") == lines_of("hunt2.jsonl"));

  CHECK(run("hunt 5 C2 --min-degree 5 --budget 10 2>/dev/null") == 2);
  CHECK(run("hunt 6 C1_ADD --min-degree 1 --budget 50 --tol -1 --out /dev/null 2>/dev/null") == 1);
  CHECK(run("hunt 6 C3 2>/dev/null") == 2);
}
