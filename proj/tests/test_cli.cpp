#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "switchlab/cli.hpp"
#include "switchlab/degree_expr.hpp"
#include "switchlab/graph_io.hpp"

using namespace switchlab;
using nlohmann::json;

namespace {

struct Run {
  int status = 0;
  std::string output;
  json report() const { return json::parse(output); }
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  const int status = cli::main(args, out);
  return {status, out.str()};
}

// Scratch directory removed at scope exit.
struct TempDir {
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("switchlab-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path / name;
    write_text_file(file.string(), text);
    return file.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::filesystem::path path;
};

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  ::pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("degree expressions") {
  CHECK(parse_degree_expression("3^1,2^6,1^3").values() ==
        std::vector<int>{3, 2, 2, 2, 2, 2, 2, 1, 1, 1});
  CHECK(parse_degree_expression("1^4").values() == std::vector<int>{1, 1, 1, 1});
  CHECK(parse_degree_expression("4^2,3^4,1^2").values() ==
        std::vector<int>{4, 4, 3, 3, 3, 3, 1, 1});
  CHECK(parse_degree_expression("1^3,3^1,2^3").values() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
  CHECK(parse_degree_expression("1,2,2,1").values() == std::vector<int>{1, 2, 2, 1});
  CHECK(parse_degree_expression(" 2 , 2 ,2 ").values() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(parse_degree_expression("1,1,1"), InfeasibleError);
  CHECK_THROWS_AS(parse_degree_expression(""), ParseError);
  CHECK_THROWS_AS(parse_degree_expression("2^"), ParseError);
  CHECK_THROWS_AS(parse_degree_expression("1,,1"), ParseError);
  try {
    parse_degree_expression("1,x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(ErrorKind::parse) == 1);
  CHECK(cli::exit_code(ErrorKind::infeasible) == 1);
  CHECK(cli::exit_code(ErrorKind::theorem) == 2);
  CHECK(cli::exit_code(ErrorKind::io) == 3);
  CHECK(cli::exit_code(ErrorKind::budget) == 4);
}

TEST_CASE("stability subcommand") {
  const Run r = run_cli({"stability", "--d", "1^4", "--param", "matching"});
  CHECK(r.status == 0);
  const json j = r.report();
  CHECK(j["schema"] == "switchlab/1");
  CHECK(j["command"] == "stability");
  CHECK(j["realization_count"] == 3);
  CHECK(j["reports"][0]["is_stable"] == true);
  CHECK(j["reports"][0]["attained"] == json::array({2}));

  const Run diam = run_cli({"stability", "--d", "3^1,2^6,1^3", "--filter", "forest", "--param",
                            "diameter,matching"});
  CHECK(diam.status == 0);
  const json d = diam.report();
  CHECK(d["reports"][0]["attained"] == json::array({6, 7, 8}));
  CHECK(d["reports"][0]["is_stable"] == false);
  CHECK(d["reports"][0]["witness"]["delta"] == 2);
  CHECK(d["reports"][1]["is_stable"] == true);
}

TEST_CASE("interval subcommand") {
  const Run r = run_cli({"interval", "--d", "3^1,2^6,1^3", "--filter", "forest", "--param",
                         "diameter"});
  CHECK(r.status == 0);
  CHECK(r.report()["reports"][0]["has_interval_property"] == true);
}

TEST_CASE("classify, param, transit and distance on files") {
  TempDir dir;
  const std::string p4 = dir.write("p4.el", "4 3\n1 2\n2 3\n3 4\n");
  const Run c = run_cli({"classify", p4, "1", "2", "3", "4"});
  CHECK(c.status == 0);
  CHECK(c.report()["valid"] == true);
  CHECK(c.report()["kind"] == "t");
  CHECK(c.report()["preserves"] == true);

  const Run bad = run_cli({"classify", p4, "2", "1", "3", "4"});
  CHECK(bad.status == 0);
  CHECK(bad.report()["valid"] == false);

  const Run pr = run_cli({"param", p4, "--param", "matching,rank,diameter"});
  CHECK(pr.status == 0);
  CHECK(pr.report()["values"]["matching"] == 2);
  CHECK(pr.report()["values"]["rank"] == 4);
  CHECK(pr.report()["values"]["diameter"] == 3);

  const std::string iso = dir.write("iso.el", "4 1\n1 2\n");
  const Run undefined = run_cli({"param", iso, "--param", "edge_cover"});
  CHECK(undefined.status == 0);
  CHECK(undefined.report()["values"]["edge_cover"].is_null());
  CHECK(undefined.report()["undefined"] == json::array({"edge_cover"}));

  const std::string m1 = dir.write("m1.json", R"({"n": 4, "edges": [[1, 2], [3, 4]]})");
  const std::string m2 = dir.write("m2.el", "4 2\n1 3\n2 4\n");
  const Run t = run_cli({"transit", m1, m2, "--dot", dir.file("trace.dot")});
  CHECK(t.status == 0);
  const json tj = t.report();
  CHECK(tj["length"] == 1);
  CHECK(tj["bound"] == 1);
  CHECK(tj["trace_valid"] == true);
  CHECK(tj["switches"] == json::array({json::array({1, 2, 3, 4})}));
  CHECK(std::filesystem::exists(dir.file("trace.dot")));

  const Run dist = run_cli({"distance", m1, m2});
  CHECK(dist.status == 0);
  CHECK(dist.report()["distance"] == 1);

  const Run text = run_cli({"distance", m1, m2, "--report", "text"});
  CHECK(text.status == 0);
  CHECK(text.output.find("distance: 1") != std::string::npos);
}

TEST_CASE("realize, explore and counterexample") {
  const Run r = run_cli({"realize", "--d", "1^4"});
  CHECK(r.status == 0);
  CHECK(r.report()["count"] == 3);
  CHECK(r.report()["graphs"].size() == 3);
  CHECK(run_cli({"realize", "--d", "1^4", "--count-only"}).report().count("graphs") == 0);

  const Run e = run_cli({"explore", "--d", "4^2,3^4,1^2", "--filter", "bipartite"});
  CHECK(e.status == 0);
  CHECK(e.report()["component_count"].get<int>() >= 2);

  const Run n4 = run_cli({"counterexample", "N", "4"});
  CHECK(n4.status == 0);
  CHECK(n4.report()["degree"] == json::array({3, 2, 2, 2, 1, 1, 1}));
  CHECK(n4.report()["bipartite"] == false);
}

TEST_CASE("errors print one JSON line and map to exit codes") {
  const Run io = run_cli({"param", "/nonexistent/graph.el"});
  CHECK(io.status == 3);
  CHECK(io.output.find('\n') == io.output.size() - 1);
  CHECK(io.report()["error"]["kind"] == "io");

  const Run parse = run_cli({"explore", "--d", "1,x"});
  CHECK(parse.status == 1);
  CHECK(parse.report()["error"]["kind"] == "parse");

  const Run infeasible = run_cli({"explore", "--d", "1,1,1"});
  CHECK(infeasible.status == 1);
  CHECK(infeasible.report()["error"]["kind"] == "infeasible");

  const Run budget = run_cli({"realize", "--d", "1^8", "--budget", "5"});
  CHECK(budget.status == 4);
  CHECK(budget.report()["error"]["kind"] == "budget");

  const Run unknown = run_cli({"frobnicate"});
  CHECK(unknown.status == 1);
  CHECK(unknown.report()["error"]["kind"] == "parse");

  const Run filter = run_cli({"explore", "--d", "1^4", "--filter", "trees"});
  CHECK(filter.status == 1);
}

TEST_CASE("the binary produces identical bytes on repeated runs") {
  const std::string cmd =
      std::string(SWITCHLAB_CLI_PATH) + " stability --d 3^1,2^6,1^3 --filter forest --param diameter";
  const std::string first = capture(cmd);
  CHECK_FALSE(first.empty());
  CHECK(first == capture(cmd));
}
