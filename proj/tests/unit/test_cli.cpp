#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = exotica::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("halphen json") {
  auto r = run({"halphen", "2", "3", "7", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"verdict\":\"A1Poor\",\"criterion\":\"41/42\"}\n");
}

TEST_CASE("mason with a leading minus sign") {
  auto r = run({"--json", "mason", "t^3", "1 - t^3", "-1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["tight"] == true);
  CHECK(j["max_deg"] == 3);

  r = run({"--json", "mason", "-t^3", "t^3 - 1", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("verify-exotic") {
  auto r = run({"verify-exotic", "4", "3", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.rfind("PASS  build_q\n", 0) == 0);

  r = run({"verify-exotic", "4", "3", "2", "--n", "10", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 14);

  r = run({"verify-exotic", "4", "3", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error [") == 0);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  auto r = run({"mason", "2x", "1", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error at line 1, column") == 0);
  CHECK(run({"halphen", "2", "3"}).code == 2);
  CHECK(run({"flow", "--derivation", "{not json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("failed verification exits with 1") {
  auto r = run({"curve-verify", "--x", "t", "--y", "t", "--z", "t", "--k", "3", "--l", "3", "--m", "3"});
  CHECK(r.code == 1);
  r = run({"flow", "--derivation", R"({"x": "1", "y": "x"})", "--check-invariant", "y"});
  CHECK(r.code == 1);
}

TEST_CASE("standard input") {
  auto r = run({"--json", "mason", "-", "-", "-"}, "t^3\n\n1 - t^3\n-1\n");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["tight"] == true);
  CHECK(run({"mason", "-", "-", "-"}, "t\n").code == 2);
}

TEST_CASE("other subcommands") {
  auto r = run({"--json", "davenport", "t^2 + 2", "t^3 + 3*t", "--k", "3", "--l", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["n"] == 2);

  r = run({"--json", "principal-part", "u^2*v + x^4*z^3 + x", "--weights",
           R"({"x": "3", "z": {"a": "-2", "b": "0"}, "u": {"a": "0", "b": "-1"}, "v": {"a": "12", "b": "2"}})"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["principal_part"] == "u^2*v");

  r = run({"--json", "normal-form", "z^4", "--mode", "b", "--k", "2", "--l", "3", "--m", "3"});
  CHECK(nlohmann::json::parse(r.out)["normal_form"] == "-y^3*z - x^2*z");

  r = run({"--json", "flow", "--derivation", R"({"u": "0", "v": "2*w", "w": "u"})", "--check-invariant",
           "u*v - w^2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group_law"] == true);
  CHECK(j["invariant"]["preserved"] == true);

  CHECK(run({"dihedral-curve", "5"}).code == 0);
  CHECK(run({"classify-brieskorn", "2", "3", "5"}).code == 0);
  CHECK(run({"schmidt", "2", "3"}).code == 0);
  CHECK(run({"genus", "1", "1", "1", "3"}).code == 0);
  r = run({"--json", "curve-search", "2", "2", "2", "--max-deg", "1", "--height", "1", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"].get<long>() > 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--json", "curve-search", "2", "2", "3", "--max-deg", "2", "--height", "1"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"verify-exotic", "5", "3", "3"}), d = run({"verify-exotic", "5", "3", "3"});
  CHECK(c.out == d.out);
}
