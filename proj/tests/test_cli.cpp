#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "json_schema_check.hpp"

using korbit_cli::CommandResult;
using korbit_cli::RunConfig;
using korbit_cli::UsageError;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
  const std::string path = std::string(KORBIT_SCHEMA_DIR) + "/" + name + ".schema.json";
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

void check_against_schema(const std::string& schema_name, const std::string& output) {
  const json schema = load_schema(schema_name);
  const json value = json::parse(output);
  const std::string err = schema_check::validate(schema, value);
  INFO("schema " << schema_name << ": " << err);
  CHECK(err.empty());
}

RunConfig config(int p, int q, const std::string& format = "text", int field = 3) {
  RunConfig cfg;
  cfg.spec = {p, q};
  cfg.format = format;
  cfg.field = field;
  return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// run the installed-style binary through the shell, stderr folded in
struct ExecResult {
  int status = -1;
  std::string output;
};

ExecResult run_binary(const std::string& args) {
  const std::string cmd = std::string(KORBIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  ExecResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

// a very small structural check for DOT output: one digraph block,
// balanced braces, every edge endpoint previously declared as a node
void check_dot(const std::string& text) {
  const auto lines = lines_of(text);
  REQUIRE(!lines.empty());
  CHECK(lines.front().rfind("digraph ", 0) == 0);
  CHECK(lines.front().back() == '{');
  CHECK(lines.back() == "}");
  std::set<std::string> declared;
  for (const std::string& line : lines) {
    const size_t q1 = line.find('"');
    if (q1 == std::string::npos) continue;
    const size_t q2 = line.find('"', q1 + 1);
    REQUIRE(q2 != std::string::npos);
    const std::string head = line.substr(q1 + 1, q2 - q1 - 1);
    if (!contains(line, "->")) {
      declared.insert(head);
      continue;
    }
    const size_t q3 = line.find('"', q2 + 1);
    const size_t q4 = line.find('"', q3 + 1);
    REQUIRE(q4 != std::string::npos);
    CHECK(declared.count(head) == 1);
    CHECK(declared.count(line.substr(q3 + 1, q4 - q3 - 1)) == 1);
  }
}

}  // namespace

TEST_CASE("emitters are deterministic") {
  for (const std::string format : {"text", "json"}) {
    CHECK(korbit_cli::cmd_orbits(config(2, 1, format)).output ==
          korbit_cli::cmd_orbits(config(2, 1, format)).output);
    CHECK(korbit_cli::cmd_theorems(config(2, 1, format)).output ==
          korbit_cli::cmd_theorems(config(2, 1, format)).output);
    CHECK(korbit_cli::cmd_verify(config(2, 1, format)).output ==
          korbit_cli::cmd_verify(config(2, 1, format)).output);
  }
  CHECK(korbit_cli::cmd_weak_order(config(2, 2, "dot")).output ==
        korbit_cli::cmd_weak_order(config(2, 2, "dot")).output);
}

TEST_CASE("orbits text fixture") {
  const CommandResult r = korbit_cli::cmd_orbits(config(1, 1));
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 5);  // comment, header, three orbits
  CHECK(lines[0] == "# orbits p=1 q=1");
  CHECK(contains(lines[1], "clan"));
  CHECK(contains(lines[2], "+-"));
  CHECK(contains(lines[2], "closed"));
  CHECK(contains(lines[3], "-+"));
  CHECK(contains(lines[4], "11"));
  CHECK(contains(lines[4], "open"));
}

TEST_CASE("json outputs validate against the shipped schemas") {
  CHECK(korbit_cli::cmd_orbits(config(2, 1, "json")).exit_code == 0);
  check_against_schema("orbits", korbit_cli::cmd_orbits(config(2, 1, "json")).output);
  check_against_schema("weak-order", korbit_cli::cmd_weak_order(config(2, 1, "json")).output);
  check_against_schema("closure-order",
                       korbit_cli::cmd_closure_order(config(2, 2, "json")).output);
  check_against_schema("jset", korbit_cli::cmd_jset(config(2, 1, "json"), "++-").output);
  check_against_schema("minexpr",
                       korbit_cli::cmd_minexpr(config(2, 1, "json"), "++-", "1,2,1").output);
  check_against_schema("demazure",
                       korbit_cli::cmd_demazure(config(2, 1, "json"), "+-+", "2").output);
  check_against_schema("theorems", korbit_cli::cmd_theorems(config(2, 1, "json")).output);
  check_against_schema("counterexample",
                       korbit_cli::cmd_counterexample(config(2, 1, "json")).output);
  check_against_schema("verify", korbit_cli::cmd_verify(config(2, 1, "json")).output);
  // the checker itself rejects garbage, so a pass above is meaningful
  const json schema = load_schema("orbits");
  CHECK_FALSE(schema_check::validate(schema, json::parse(R"({"command":"orbits"})")).empty());
  CHECK_FALSE(
      schema_check::validate(schema, json::parse(R"({"command":"weak-order"})")).empty());
}

TEST_CASE("orbits json fixture") {
  const CommandResult r = korbit_cli::cmd_orbits(config(2, 1, "json"));
  const json j = json::parse(r.output);
  REQUIRE(j["orbits"].size() == 6);
  CHECK(j["signature"]["p"] == 2);
  CHECK(j["signature"]["q"] == 1);
  CHECK(j["orbits"][0]["clan"] == "++-");
  CHECK(j["orbits"][0]["dim"] == 1);
  CHECK(j["orbits"][0]["closed"] == true);
  int open_count = 0;
  for (const auto& rec : j["orbits"])
    if (rec["open"] == true) {
      ++open_count;
      CHECK(rec["clan"] == "1+1");
      CHECK(rec["dim"] == 3);
      CHECK(rec["codim"] == 0);
    }
  CHECK(open_count == 1);
}

TEST_CASE("weak order json fixture") {
  const json j = json::parse(korbit_cli::cmd_weak_order(config(1, 1, "json")).output);
  CHECK(j["nodes"].size() == 3);
  REQUIRE(j["edges"].size() == 2);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    CHECK(e["index"] == 1);
    edges.insert({e["source"].get<std::string>(), e["target"].get<std::string>()});
  }
  CHECK(edges == std::set<std::pair<std::string, std::string>>{{"+-", "11"}, {"-+", "11"}});
}

TEST_CASE("closure order json fixture") {
  const json j = json::parse(korbit_cli::cmd_closure_order(config(2, 1, "json")).output);
  CHECK(j["nodes"].size() == 6);
  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"])
    covers.insert({c["lower"].get<std::string>(), c["upper"].get<std::string>()});
  const std::set<std::pair<std::string, std::string>> expected{
      {"++-", "+11"}, {"+-+", "+11"}, {"+-+", "11+"},
      {"-++", "11+"}, {"+11", "1+1"}, {"11+", "1+1"},
  };
  CHECK(covers == expected);
}

TEST_CASE("jset and fold fixtures through the command layer") {
  const json js = json::parse(korbit_cli::cmd_jset(config(2, 1, "json"), "++-").output);
  CHECK(js["clan"] == "++-");
  CHECK(js["codim"] == 2);
  CHECK(js["members"] == json::array({"+11"}));

  const json mini =
      json::parse(korbit_cli::cmd_minexpr(config(2, 1, "json"), "++-", "1,2,1").output);
  CHECK(mini["minimal_word"] == json::array({2, 1}));
  CHECK(mini["result"] == "1+1");
  CHECK(mini["start_dim"] == 1);
  CHECK(mini["result_dim"] == 3);

  const json dem = json::parse(korbit_cli::cmd_demazure(config(2, 1, "json"), "++-", "1").output);
  CHECK(dem["result"] == "++-");  // s_1 fixes ++-
  CHECK(dem["result_codim"] == 2);
}

TEST_CASE("theorems and counterexample fixtures") {
  const CommandResult t = korbit_cli::cmd_theorems(config(2, 1));
  CHECK(t.exit_code == 0);
  CHECK(contains(t.output, "all checks passed"));
  CHECK(contains(t.output, "monoid-dichotomy"));

  const json tj = json::parse(korbit_cli::cmd_theorems(config(2, 2, "json")).output);
  CHECK(tj["all_pass"] == true);
  REQUIRE(tj["checks"].size() == 9);
  for (const auto& row : tj["checks"]) {
    CHECK(row["failures"] == 0);
    CHECK(row["pass"] == true);
    CHECK(row["instances"].get<long>() > 0);
  }

  const CommandResult c = korbit_cli::cmd_counterexample(config(2, 1));
  CHECK(c.exit_code == 0);
  CHECK(contains(c.output, "count: 2"));
  CHECK(contains(c.output, "witness: clan=++- word=1 result=++- result_codim=2"));
  CHECK(contains(c.output, "witness: clan=-++ word=2 result=-++ result_codim=2"));

  const json cj = json::parse(korbit_cli::cmd_counterexample(config(1, 1, "json")).output);
  CHECK(cj["count"] == 0);
  CHECK(cj["witnesses"].empty());
}

TEST_CASE("verify command text and exit codes") {
  const CommandResult r = korbit_cli::cmd_verify(config(2, 1));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "flags: 52"));  // 4 * 13 full flags in F_3^3
  CHECK(contains(r.output, "oracle orbits: 6"));
  CHECK(contains(r.output, "representatives: consistent"));

  const json j = json::parse(korbit_cli::cmd_verify(config(2, 1, "json")).output);
  CHECK(j["matched"] == true);
  CHECK(j["mismatch"] == "");
  CHECK(j["oracle_orbits"] == 6);
  CHECK(j["clans"] == 6);

  // q = 2 skips the representative-flag pass (pairs need odd q)
  const json j2 = json::parse(korbit_cli::cmd_verify(config(1, 1, "json", 2)).output);
  CHECK(j2["representatives"] == "skipped");
  CHECK(j2["matched"] == true);
}

TEST_CASE("usage guards throw in process") {
  CHECK_THROWS_AS(korbit_cli::cmd_orbits(config(5, 4)), UsageError);         // p+q > 8
  CHECK_THROWS_AS(korbit_cli::cmd_closure_order(config(4, 3)), UsageError);  // p+q > 6
  CHECK_THROWS_AS(korbit_cli::cmd_theorems(config(3, 3)), UsageError);       // p+q > 5
  CHECK_THROWS_AS(korbit_cli::cmd_verify(config(3, 2)), UsageError);         // p+q > 4
  CHECK_THROWS_AS(korbit_cli::cmd_orbits(config(2, 1, "dot")), UsageError);
  CHECK_THROWS_AS(korbit_cli::cmd_jset(config(2, 1), "nonsense"), UsageError);
  CHECK_THROWS_AS(korbit_cli::cmd_jset(config(2, 1), "1122"), UsageError);  // wrong signature
  CHECK_THROWS_AS(korbit_cli::cmd_minexpr(config(2, 1), "++-", "7"), UsageError);
  CHECK_THROWS_AS(korbit_cli::cmd_minexpr(config(2, 1), "++-", "1,,2"), UsageError);
}

TEST_CASE("binary end to end") {
  SUBCASE("json output parses, validates, and reruns byte-identically") {
    const ExecResult a = run_binary("--pq 2,1 --format json weak-order");
    const ExecResult b = run_binary("--pq 2,1 --format json weak-order");
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    check_against_schema("weak-order", a.output);
  }
  SUBCASE("dot output is structurally sound") {
    const ExecResult weak = run_binary("--pq 2,2 --format dot weak-order");
    CHECK(weak.status == 0);
    check_dot(weak.output);
    const ExecResult closure = run_binary("--pq 2,2 --format dot closure-order");
    CHECK(closure.status == 0);
    check_dot(closure.output);
  }
  SUBCASE("flags can come after the subcommand") {
    const ExecResult r = run_binary("orbits --pq 1,1");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "# orbits p=1 q=1"));
  }
  SUBCASE("usage errors exit 1") {
    CHECK(run_binary("--pq 0,1 orbits").status == 1);
    CHECK(run_binary("--pq 2,1 --format yaml orbits").status == 1);
    CHECK(run_binary("--pq 2,1 --format dot orbits").status == 1);
    CHECK(run_binary("--pq 3,2 verify").status == 1);
    CHECK(run_binary("--pq 2,1 --field 7 verify").status == 1);
    CHECK(run_binary("--pq 2,1").status == 1);     // no subcommand
    CHECK(run_binary("--pq a,b orbits").status == 1);
    CHECK(run_binary("orbits").status == 1);       // --pq is required
    const ExecResult bad = run_binary("--pq 2,1 jset zz1");
    CHECK(bad.status == 1);
    CHECK(contains(bad.output, "error:"));
  }
  SUBCASE("successful verification and property runs exit 0") {
    CHECK(run_binary("--pq 2,1 theorems").status == 0);
    CHECK(run_binary("--pq 2,1 --field 3 verify").status == 0);
    CHECK(run_binary("--pq 2,1 counterexample").status == 0);
  }
  SUBCASE("--out routes output to a file") {
    const std::string path = "/tmp/korbit_cli_out_test.json";
    std::remove(path.c_str());
    const ExecResult r = run_binary("--pq 2,1 --format json --out " + path + " orbits");
    CHECK(r.status == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == korbit_cli::cmd_orbits(config(2, 1, "json")).output);
    std::remove(path.c_str());
  }
  SUBCASE("help exits 0") {
    CHECK(run_binary("--help").status == 0);
  }
}
