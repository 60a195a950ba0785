#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "leibhom/cli.hpp"
#include "leibhom/errors.hpp"
#include "support/corpus.hpp"

using namespace leibhom;
using nlohmann::json;

namespace {

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "leibhom_test_cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "leibhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kA2 = R"({"basis":["x","y"],"brackets":[{"left":"x","right":"x","value":{"y":"1"}}]})";

json without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("check reports the quotient dimensions") {
  const auto r = invoke({"check", write("a2.json", kA2)});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("valid left Leibniz algebra, dim 2, g_ann 1, g_Lie 1") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(invoke({"check", write("sq.json", R"({"basis":["x"],"brackets":[{"left":"x","right":"x","value":{"x":"1"}}]})")})
            .code == cli::kInputError);
  CHECK(invoke({"check", write("broken.json", "{\"basis\": [")}).code == cli::kInputError);
  CHECK(invoke({"check", write("dup.json", R"({"basis":["x","x"]})")}).code == cli::kInputError);
  CHECK(invoke({"check", write("float.json", R"({"basis":["x"],"brackets":[{"left":"x","right":"x","value":{"x":0.5}}]})")})
            .code == cli::kInputError);
  CHECK(invoke({"check", write("unknown.json", R"({"basis":["x"],"brackets":[{"left":"x","right":"z","value":{}}]})")})
            .code == cli::kInputError);
  CHECK(invoke({"check", (scratch() / "missing.json").string()}).code == cli::kInputError);
  CHECK(invoke({"homology", write("a2.json", kA2), "--coefficients", "nonsense"}).code == cli::kInputError);
  CHECK(invoke({}).code == cli::kInputError);
}

TEST_CASE("axiom errors name the violating triple") {
  const auto r = invoke({"check", write("sq.json", R"({"basis":["x"],"brackets":[{"left":"x","right":"x","value":{"x":"1"}}]})")});
  CHECK(r.err.find("(x,x,x)") != std::string::npos);
}

TEST_CASE("algebra echo round-trips") {
  for (const auto& [name, g] : testing::algebra_corpus(7)) {
    CAPTURE(name);
    const json echo = cli::algebra_to_json(g);
    const cli::ParsedAlgebra back = cli::parse_algebra_text(echo.dump());
    CHECK(back.algebra == g);
    CHECK(cli::algebra_to_json(back.algebra) == echo);
  }
}

TEST_CASE("right convention input is the opposite algebra") {
  const auto p = cli::parse_algebra_text(
      R"({"basis":["x","y"],"convention":"right","brackets":[{"left":"y","right":"x","value":{"y":"1"}}]})");
  CHECK(p.input_convention == Convention::right);
  CHECK(p.notices.size() == 1);
  CHECK(p.algebra.bracket_basis(0, 1) == Vector{Scalar(0), Scalar(1)});
  CHECK(is_zero(std::span<const Scalar>(p.algebra.bracket_basis(1, 0))));
}

TEST_CASE("reports are deterministic apart from timing") {
  const std::string a2 = write("a2.json", kA2);
  for (const char* cmd : {"homology", "cohomology", "ce-homology", "ce-cohomology", "compare", "quotient"}) {
    CAPTURE(cmd);
    const auto r1 = invoke({cmd, a2, "--json", "-", "--quiet"});
    const auto r2 = invoke({cmd, a2, "--json", "-", "--quiet", "--threads", "1"});
    REQUIRE(r1.code == cli::kOk);
    CHECK(without_timing(r1.out)["verdicts"].dump() == without_timing(r2.out)["verdicts"].dump());
    CHECK(without_timing(r1.out)["tables"].dump() == without_timing(r2.out)["tables"].dump());
  }
}

TEST_CASE("homology of A2 through the tool") {
  const auto r = invoke({"homology", write("a2.json", kA2), "--max-degree", "3", "--json", "-", "--quiet"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  for (const auto& row : j["tables"]["HL_n"]) CHECK(row["dim"] == 1);
  CHECK(j["input"]["sha256"] == cli::sha256_hex(kA2));
  const auto ce = json::parse(invoke({"ce-homology", write("a2.json", kA2), "--json", "-", "--quiet"}).out);
  CHECK(ce["tables"]["H_n"][2]["dim"] == 0);
}

TEST_CASE("Lie-module coefficients") {
  const std::string a2 = write("a2.json", kA2);
  CHECK(invoke({"homology", a2, "--coefficients", "lie:" + write("m.json", R"({"basis":["m"]})")}).code == cli::kOk);
  CHECK(invoke({"homology", a2, "--coefficients",
                "lie:" + write("bad.json", R"({"basis":["m"],"action":[{"left":"y","right":"m","value":{"m":"1"}}]})")})
            .code == cli::kInputError);
  const std::string rep = write("rep.json", R"({"basis":["m"]})");
  CHECK(invoke({"homology", a2, "--coefficients", "rep:" + rep}).code == cli::kOk);
  CHECK(invoke({"ce-homology", a2, "--coefficients", "rep:" + rep}).code == cli::kInputError);
}

TEST_CASE("free conjecture table") {
  const auto r = invoke({"free-conjecture", "--generators", "2", "--max-weight", "5", "--json", "-", "--quiet"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  std::vector<std::size_t> h1;
  for (const auto& row : j["tables"]["weights"]) h1.push_back(row["H_1"].get<std::size_t>());
  CHECK(h1 == std::vector<std::size_t>{2, 1, 2, 3, 6});
  CHECK(j["verdicts"]["conjecture"] == "PASS");
  CHECK(invoke({"free-conjecture", "--generators", "3", "--max-weight", "6"}).code == cli::kInputError);
}

TEST_CASE("sha256 known vector") {
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
