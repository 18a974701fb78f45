#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "gtutte/io.hpp"
#include "gtutte/tutte.hpp"

using namespace gtutte;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + GTUTTE_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string kData = GTUTTE_TEST_DATA_DIR;

}  // namespace

TEST_CASE("tutte") {
  const Run r = run("tutte freedom:11100");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "x^3 + 2x^2 + 3x + 3y + y^2");
  CHECK(r.out.find("agree") != std::string::npos);
  // The printed polynomial parses back to the computed one.
  CHECK(parse_bipoly(first_line(r.out)) == tutte_freedom(BitSeq::parse("11100")).poly);

  const Run u = run("tutte uniform:5,9");
  CHECK(u.code == 0);
  CHECK(parse_bipoly(first_line(u.out)) == tutte_uniform(5, 4).poly);

  const Run j = run("--format json tutte freedom:10101");
  REQUIRE(j.code == 0);
  const Json doc = Json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(bipoly_from_json(doc["tutte"]) == tutte_freedom(BitSeq::parse("10101")).poly);
  CHECK(run("--format json tutte freedom:10101").out == j.out);

  // A basis list read from disk takes the same routes.
  const std::string path = "test_cli_u24.json";
  {
    std::ofstream f(path);
    f << R"({"n":4,"r":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";
  }
  const Run b = run("tutte bases:" + path);
  CHECK(b.code == 0);
  CHECK(parse_bipoly(first_line(b.out)) == tutte_uniform(2, 2).poly);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run("tutte bogus").code == 2);
  CHECK(run("tutte freedom:2").code == 2);
  CHECK(run("tutte uniform:5,3").code == 2);
  CHECK(run("tutte bases:/nonexistent.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--format xml tutte freedom:1").code == 2);
  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("basis 3 5").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("size guards") {
  CHECK(run("ginv uniform:5,10").code == 2);
  CHECK(run("--max-n 4 ginv freedom:11100").code == 2);
  CHECK(run("ginv freedom:11100").code == 0);
}

TEST_CASE("ginv and sp") {
  const Run g = run("ginv freedom:01");
  CHECK(g.code == 0);
  CHECK(first_line(g.out) == "[01]: 1, [10]: 1");
  const Run s = run("sp '[10]'");
  CHECK(s.code == 0);
  CHECK(first_line(s.out) == "(1/2)x + (1/2)y");
  CHECK(s.out.find("integral: no") != std::string::npos);
  const Run s2 = run("sp 01");
  CHECK(s2.out.find("integral: no") != std::string::npos);
  const Run gj = run("--format json ginv freedom:0011");
  REQUIRE(gj.code == 0);
  const Json doc = Json::parse(gj.out);
  CHECK(doc["schema_version"] == 1);
  for (const auto& [k, v] : doc["coeffs"].items()) CHECK(v == "4");
}

TEST_CASE("basis and express") {
  const Run b = run("basis 5 3 --kind meet");
  CHECK(b.code == 0);
  CHECK(b.out.find("00111") != std::string::npos);
  CHECK(b.out.find("11100") != std::string::npos);
  CHECK(b.out.find("01101") == std::string::npos);

  const Run e = run("express freedom:10101 --kind meet");
  CHECK(e.code == 0);
  CHECK(e.out.find("11010") != std::string::npos);
  CHECK(e.out.find("-2") != std::string::npos);

  const Run ej = run("--format json express freedom:10101");
  REQUIRE(ej.code == 0);
  const Json doc = Json::parse(ej.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["coords"]["11010"] == "-2");
  CHECK(doc["integral"] == true);

  CHECK(run("express x+y --n 4 --r 2").code == 1);
  CHECK(run("express x+y").code == 2);
}

TEST_CASE("gamma and relations") {
  const Run g = run("--format csv gamma 5 3");
  CHECK(g.code == 0);
  const LabeledMatrix want = labeled_matrix_from_csv(read_file(kData + "/golden/gamma_5_3.csv"));
  const LabeledMatrix got = labeled_matrix_from_csv(g.out);
  CHECK(got.row_labels == want.row_labels);
  CHECK(got.col_labels == want.col_labels);
  CHECK(got.matrix == want.matrix);
  CHECK(run("gamma 5 3").code == 0);

  const Run r = run("relations 4 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("span dimension: 1 (expected 1)") != std::string::npos);
  const Run rj = run("--format json relations 5 3");
  REQUIRE(rj.code == 0);
  CHECK(Json::parse(rj.out)["relations"].size() == 3);
}

TEST_CASE("verify") {
  const Run v = run("verify appendix53 --data-dir '" + kData + "'");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  const Run vj = run("--format json verify gmatrix42 --data-dir '" + kData + "'");
  REQUIRE(vj.code == 0);
  const Json doc = Json::parse(vj.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["ok"] == true);
  CHECK(run("verify appendix53 --data-dir /nonexistent").code != 0);
}
