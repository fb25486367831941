#include "zariski/commands.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace zariski;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("zariski-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& stdout_file = "/dev/null") {
  const std::string cmd = std::string(ZARISKI_CLI) + " " + args + " > " + stdout_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_lines(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("ReportDocument: json round trip") {
  const auto doc = cmd_components("A16+A2+A1", {"zariski", "components", "A16+A2+A1"});
  const auto back = parse_report(render_json(doc));
  CHECK_EQ(back, doc);
  CHECK_EQ(render_json(back), render_json(doc));
  CHECK_EQ(back.schema_version, kSchemaVersion);
  CHECK_EQ(back.command, "components");
  CHECK_EQ(back.payload["total_components"], 3);
}

TEST_CASE("ReportDocument: rejects missing or unknown schema") {
  CHECK_THROWS_AS(parse_report(R"({"command": "forms", "payload": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report(R"({"schema_version": 99, "command": "forms", "payload": {}})"), std::invalid_argument);
  CHECK_NOTHROW(parse_report(R"({"schema_version": 1, "invocation": [], "command": "forms", "payload": {}})"));
}

TEST_CASE("ReportDocument: table shows json numbers") {
  const auto doc = cmd_components("A15+A4");
  const std::string table = render_table(doc);
  {
    INFO(table);
    CHECK_NE(table.find("total components: 3"), std::string::npos);
  }
  for (const auto& cls : doc.payload["classes"])
    for (const auto& n : cls["ns"]) CHECK_NE(table.find(n["lattice"].get<std::string>()), std::string::npos);
  CHECK_NE(table.find("note: "), std::string::npos);

  const auto forms = cmd_forms_det(55);
  const std::string ft = render_table(forms);
  CHECK_EQ(forms.payload["count"], 3);
  for (const auto& f : forms.payload["forms"]) CHECK_NE(ft.find(f["lattice"].get<std::string>()), std::string::npos);
}

TEST_CASE("Commands: payload contents") {
  const auto forms = cmd_forms_det(55);
  std::vector<int> fibers;
  for (const auto& f : forms.payload["forms"]) fibers.push_back(f["sl2_fiber_size"].get<int>());
  CHECK_EQ(fibers, (std::vector<int>{1, 2, 1}));  // Lambda[4,1,14] has 0 < 2b < a < c

  const auto cm = cmd_cm(-55, CmOptions{true, 80, 60});
  CHECK_EQ(cm.payload["class_group"]["order"], 4);
  CHECK_EQ(cm.payload["embeddings"]["rows"].size(), 4u);
  CHECK_EQ(cm.payload["hilbert"]["polynomial"],
            "t^4 + 13136684625t^3 - 20948398473375t^2 + 172576736359017890625t - 18577989025032784359375");

  const auto comps = cmd_components("A19");
  CHECK(comps.payload["candidate_pairs"].empty());
  CHECK_EQ(comps.payload["real_components"], 2);
}

TEST_CASE("Commands: error codes") {
  try {
    cmd_components("A1");
    FAIL("expected an exception");
  } catch (const CommandError& e) {
    CHECK_EQ(e.code(), kExitComputation);
  }
  try {
    cmd_components("Q7");
    FAIL("expected an exception");
  } catch (const CommandError& e) {
    CHECK_EQ(e.code(), kExitUsage);
  }
  try {
    cmd_cm(-55, CmOptions{true, 12, 60});
    FAIL("expected an exception");
  } catch (const CommandError& e) {
    CHECK_EQ(e.code(), kExitComputation);
  }
}

TEST_CASE("Cli: exit codes") {
  const fs::path dir = scratch("cli");
  CHECK_EQ(run_cli("components A16+A2+A1 --json", dir / "a.json"), 0);
  const auto doc = parse_report(slurp(dir / "a.json"));
  CHECK_EQ(doc.payload["total_components"], 3);
  CHECK_EQ(doc.invocation.at(1), "components");
  CHECK_EQ(run_cli("components A1"), 2);
  CHECK_EQ(run_cli("components 'A1+'"), 1);
  CHECK_EQ(run_cli(""), 1);
  CHECK_EQ(run_cli("frobnicate"), 1);
  CHECK_EQ(run_cli("forms"), 1);
  CHECK_EQ(run_cli("forms --det 55"), 0);
  CHECK_EQ(run_cli("forms --disc -12"), 1);
  CHECK_EQ(run_cli("cm --disc -55 --hilbert --precision-digits 12"), 2);
  CHECK_EQ(run_cli("cm --disc -4 --hilbert"), 0);
  CHECK_EQ(run_cli("forms --det 55 --out " + (dir / "f.txt").string()), 0);
  CHECK_NE(slurp(dir / "f.txt").find("Λ[4,1,14]"), std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("Census: totals dedupe and resume") {
  const fs::path dir = scratch("census");
  write_lines(dir / "types.txt",
              "# maximizing types\nA16+A2+A1\nA16+A3\nA18+A1\nA15+A4\nA19\nA10+A9\nA2+A16+A1  # alias\n\n");
  CensusOptions opts{dir / "types.txt", dir / "out", false, 3};
  const auto first = cmd_census(opts);
  CHECK_EQ(first.exit_code, 0);
  const auto& entries = first.summary.payload["entries"];
  REQUIRE_EQ(entries.size(), 6u);
  std::vector<std::size_t> totals;
  for (const auto& e : entries) {
    CHECK_EQ(e["status"], "ok");
    totals.push_back(e["total_components"].get<std::size_t>());
  }
  CHECK_EQ(totals, (std::vector<std::size_t>{3, 2, 3, 3, 2, 4}));
  for (const auto& e : entries) {
    const auto doc = parse_report(slurp(dir / "out" / e["file"].get<std::string>()));
    CHECK_EQ(doc.payload["total_components"], e["total_components"]);
  }
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(dir / "out")) files += f.path().extension() == ".json" ? 1 : 0;
  CHECK_EQ(files, 6u);

  const std::string before = slurp(dir / "out" / "A19.json");
  opts.resume = true;
  const auto second = cmd_census(opts);
  CHECK_EQ(second.exit_code, 0);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK_EQ(second.summary.payload["entries"][i]["status"], "skipped");
    CHECK_EQ(second.summary.payload["entries"][i]["total_components"], totals[i]);
  }
  CHECK_EQ(slurp(dir / "out" / "A19.json"), before);
  fs::remove_all(dir);
}

TEST_CASE("Census: partial failure and empty input") {
  const fs::path dir = scratch("census-fail");
  write_lines(dir / "bad.txt", "A19\nA1\nnot-a-type\n");
  const auto result = cmd_census({dir / "bad.txt", dir / "out", false, 2});
  CHECK_EQ(result.exit_code, kExitPartialCensus);
  CHECK_EQ(result.summary.payload["failures"], 2);
  CHECK(fs::exists(dir / "out" / "A19.json"));
  CHECK_FALSE(fs::exists(dir / "out" / "A1.json"));

  write_lines(dir / "empty.txt", "# nothing\n\n");
  const auto empty = cmd_census({dir / "empty.txt", dir / "out2", false, 1});
  CHECK_EQ(empty.exit_code, 0);
  CHECK(empty.summary.payload["entries"].empty());

  CHECK_EQ(run_cli("census --input " + (dir / "bad.txt").string() + " --out " + (dir / "out3").string()), 3);
  CHECK_EQ(run_cli("census --input " + (dir / "missing.txt").string() + " --out " + (dir / "out4").string()), 1);
  fs::remove_all(dir);
}
