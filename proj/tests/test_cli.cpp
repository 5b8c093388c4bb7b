#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "faclab/bridge.hpp"
#include "faclab/cli/commands.hpp"
#include "faclab/cli/expr.hpp"
#include "faclab/cli/scan_store.hpp"
#include "faclab/factorial_functional.hpp"
#include "faclab/inversion.hpp"
#include "faclab/two_monomials.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace faclab;
using namespace faclab::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "faclab_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

std::vector<json> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<json> records;
  for (std::string line; std::getline(in, line);) records.push_back(json::parse(line));
  return records;
}

std::vector<GaussianRational> scalars(const json& arr) {
  std::vector<GaussianRational> out;
  for (const auto& s : arr) out.push_back(parse_scalar(s.get<std::string>()));
  return out;
}

std::string scalar_source(const GaussianRational& c, oracle::ScalarSource& src) {
  const std::string re = c.re().get_str(), im = c.im().get_str();
  if (c.is_real()) return sgn(c.re()) < 0 ? "(" + re + ")" : re;
  const std::string sign = sgn(c.im()) < 0 ? "-" : "+";
  const std::string mag = mpq_class(abs(c.im())).get_str();
  const std::string imag = (mag == "1" && src.coin()) ? "i" : mag + "i";
  if (sgn(c.re()) == 0 && src.coin()) return "(" + std::string(sgn(c.im()) < 0 ? "-" : "") + imag + ")";
  return "(" + re + sign + imag + ")";
}

}  // namespace

TEST_CASE("documented expressions parse exactly") {
  const MultiPoly d = parse_poly("X1 - X2");
  CHECK(d == MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1));
  const MultiPoly m = parse_poly("3*X1^2*X2");
  CHECK(m == MultiPoly::monomial({2, 1}, 3));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x1 x2^2") == MultiPoly::monomial({1, 2}, 1));
  CHECK(parse_poly("(1/2+3i) X3") == MultiPoly::monomial({0, 0, 1}, GaussianRational(mpq_class(1, 2), 3)));
  CHECK(parse_poly("X") == MultiPoly::variable(1, 0));
  CHECK(parse_poly("-2/4 X1", 3) == MultiPoly::monomial({1, 0, 0}, GaussianRational::fraction(-1, 2)));
  CHECK(format_poly(parse_poly("X1 - X2")) == "X1 - X2");
  CHECK(format_poly(parse_poly("3*X1^2*X2 - 1/2")) == "3*X1^2*X2 - 1/2");
}

TEST_CASE("malformed expressions report a position") {
  for (const std::string bad : {"X1 +", "X0", "2/0", "X1^", "(1+2", "X1 $ X2", "", "1/-2"}) {
    CHECK_THROWS_AS(parse_poly(bad), ParseError);
  }
  try {
    parse_poly("X1 + * X2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("scalars and grids") {
  CHECK(parse_scalar("-3/6") == GaussianRational::fraction(-1, 2));
  CHECK(parse_scalar("(2-i)") == GaussianRational(2, -1));
  CHECK(parse_scalar_list("1, (1+i), -2") == std::vector<GaussianRational>{1, GaussianRational(1, 1), -2});
  CHECK(parse_grid("-2..2").size() == 5);
  CHECK(parse_grid("1,1/2,(i)").size() == 3);
  CHECK_THROWS_AS(parse_grid("3..1"), ParseError);
}

TEST_CASE("print then parse round trip on 200 random expressions") {
  oracle::ScalarSource src(61);
  for (int s = 0; s < 200; ++s) {
    const std::size_t vars = src.uniform(1, 4);
    std::string text;
    const unsigned terms = src.uniform(1, 5);
    for (unsigned t = 0; t < terms; ++t) {
      const GaussianRational c = src.nonzero();
      ExponentVector e(vars, 0);
      std::string factors;
      for (std::size_t v = 0; v < vars; ++v) {
        e[v] = src.uniform(0, 3);
        if (e[v] == 0 && !(v + 1 == vars && t == 0)) continue;
        factors += src.coin() ? " * " : " ";
        factors += (src.coin() ? "X" : "x") + std::to_string(v + 1);
        if (e[v] != 1 || src.coin()) factors += "^" + std::to_string(e[v]);
      }
      if (!text.empty()) text += src.coin() ? " + " : "+";
      text += scalar_source(c, src) + factors;
    }
    const MultiPoly parsed = parse_poly(text, vars);
    const std::string printed = format_poly(parsed);
    CHECK_MESSAGE(parse_poly(printed, vars) == parsed, text << " -> " << printed);
    CHECK_MESSAGE(format_poly(parse_poly(printed, vars)) == printed, printed);
    for (const auto& [e, c] : parsed.terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("parsed random expressions equal their direct construction") {
  oracle::ScalarSource src(62);
  for (int s = 0; s < 100; ++s) {
    MultiPoly expected(3);
    std::string text;
    const unsigned terms = src.uniform(1, 4);
    for (unsigned t = 0; t < terms; ++t) {
      const GaussianRational c = src.nonzero();
      const ExponentVector e{src.uniform(0, 2), src.uniform(0, 2), src.uniform(1, 2)};
      expected += MultiPoly::monomial(e, c);
      if (!text.empty()) text += " + ";
      text += scalar_source(c, src) + "*X1^" + std::to_string(e[0]) + "*X2^" + std::to_string(e[1]) + "*X3^" +
              std::to_string(e[2]);
    }
    CHECK(parse_poly(text) == expected);
  }
}

TEST_CASE("documented command outputs") {
  CHECK(invoke({"eval-l", "--poly", "X1 - X2", "--k", "4"}).out == "24\n");
  CHECK(invoke({"eval-l", "--poly", "X1 - X2", "--k", "3"}).out == "0\n");
  CHECK(invoke({"eval-l", "--poly", "3*X1^2*X2", "--k", "1"}).out == "6\n");
  CHECK(invoke({"membership", "--poly", "X1 - X2", "--n", "3"}).out == "n=3: member, witness k=4, values [0, 24]\n");
  CHECK(invoke({"membership", "--poly", "X1^2*X2", "--n", "7"}).out.starts_with("n=7: member, witness k=7"));
  CHECK(invoke({"membership", "--poly", "0", "--n", "1"}).out.starts_with("n=1: member (zero polynomial)"));

  const auto catalan = invoke({"inverse", "--alpha", "1", "--order", "4"});
  CHECK(catalan.code == kExitOk);
  CHECK(catalan.out.find("u: 2, 6, 20, 70\n") != std::string::npos);
  CHECK(catalan.out.find("inverse coefficients: 1, 1, 2, 5, 14\n") != std::string::npos);
  CHECK(invoke({"inverse", "--mu", "1,1", "--order", "1"}).out.starts_with("u: 4\n"));
  CHECK(invoke({"inverse", "--alpha", "0,0", "--order", "5"}).out.starts_with("u: 0, 0, 0, 0, 0\n"));
  for (const std::string mode : {"direct", "lagrange", "mif"}) {
    const auto r = invoke({"inverse", "--mu", "1/2,(1+i)", "--order", "6", "--mode", mode, "--check"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("agree") != std::string::npos);
  }
  CHECK(invoke({"inverse", "--poly", "X - X^2", "--order", "4"}).out.find("1, 1, 2, 5, 14") != std::string::npos);

  const auto none = invoke({"recurrence", "--a", "3,0", "--b", "0,0", "--order", "2", "--deg-n", "2", "--deg-x", "1"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.starts_with("none found"));
  CHECK(invoke({"rpc-scan", "--max-exp", "1", "--n-max", "2"}).out.find("findings=0") != std::string::npos);
  CHECK(invoke({"verify", "--suite", "certificate"}).code == kExitOk);
  CHECK(invoke({"verify", "--suite", "prop35"}).code == kExitOk);
  CHECK(invoke({"verify", "--suite", "hypergeometric"}).code == kExitOk);
  CHECK(invoke({"verify", "--suite", "bridge"}).code == kExitOk);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"eval-l", "--poly", "X1", "--k", "0"}).code == kExitUsage);
  CHECK(invoke({"eval-l", "--poly", "X1 +", "--k", "1"}).code == kExitUsage);
  CHECK(invoke({"eval-l", "--poly", "X1 +", "--k", "1"}).err.find("parse error") != std::string::npos);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
  CHECK(invoke({"verify", "--suite", "nonsense"}).code == kExitUsage);
  CHECK(invoke({"inverse", "--poly", "2*X", "--order", "3"}).code == kExitUsage);
  CHECK(invoke({"inverse", "--alpha", "1", "--mu", "1", "--order", "3"}).code == kExitUsage);
  CHECK(invoke({"rigidity-scan", "--m", "4", "--grid", "1", "--n-max", "2"}).code == kExitUsage);
  CHECK(invoke({"membership", "--poly", "X1", "--n", "0"}).code == kExitUsage);
  CHECK(invoke({"rpc-scan", "--max-exp", "1", "--n-max", "2", "--out", "/nonexistent-dir/x/rpc.jsonl"}).code ==
        kExitUsage);
  CHECK(invoke({"recurrence", "--a", "1,1", "--b", "0,0", "--order", "2", "--deg-n", "1", "--deg-x", "1",
                "--fit-samples", "1"})
            .code == kExitUsage);

  // A failing check is reported as a finding, never as success.
  const auto all = invoke({"verify", "--suite", "all"});
  const bool any_fail = all.out.find("FAIL ") != std::string::npos;
  CHECK(all.code == (any_fail ? kExitFindings : kExitOk));
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(std::nullopt, nullptr) == 1);
  CHECK(resolve_threads(std::nullopt, "6") == 6);
  CHECK(resolve_threads(3u, "6") == 3);
  CHECK(resolve_threads(std::nullopt, "zero") == 1);
  CHECK(resolve_threads(std::nullopt, "0") == 1);
}

TEST_CASE("records reparse and reproduce their payload") {
  const auto rpc_path = scratch("rpc.jsonl");
  REQUIRE(invoke({"rpc-scan", "--max-exp", "2", "--n-max", "5", "--out", rpc_path.string(), "--threads", "3"}).code ==
          kExitOk);
  const auto rpc = read_records(rpc_path);
  CHECK(rpc.size() == rpc_pairs(2).size());
  for (const auto& r : rpc) {
    CHECK(r["schema_version"] == kSchemaVersion);
    CHECK(r["kind"] == "rpc");
    CHECK(r["timestamp"].get<std::string>().ends_with("Z"));
    const auto& p = r["params"];
    const ExponentPair pair(p["a"][0], p["a"][1], p["b"][0], p["b"][1]);
    CHECK(r["result"]["degrees"].get<std::vector<int>>() == rpc_scan_pair(pair, p["n_max"]).degrees);
  }

  const auto rig_path = scratch("rigidity.jsonl");
  REQUIRE(invoke({"rigidity-scan", "--m", "2", "--grid", "-1..1", "--n-max", "6", "--out", rig_path.string()}).code ==
          kExitOk);
  const auto rig = read_records(rig_path);
  CHECK(rig.size() == 8);
  for (const auto& r : rig) {
    const auto point = rigidity_scan_point(scalars(r["params"]["alpha"]), r["params"]["n_max"]);
    CHECK(scalars(r["result"]["inverse_coeffs"]) == point.inverse_coeffs);
  }

  const auto bridge_path = scratch("bridge.jsonl");
  REQUIRE(invoke({"bridge-probe", "--m", "2", "--grid", "-1,(i)", "--n", "2", "--out", bridge_path.string()}).code ==
          kExitOk);
  for (const auto& r : read_records(bridge_path)) {
    const auto point = bridge_probe_point(EFamilyElement{scalars(r["params"]["mu"])}, r["params"]["n"]);
    CHECK(scalars(r["result"]["l_window"]) == point.l_window);
    CHECK(scalars(r["result"]["u_window"]) == point.u_window);
  }

  const auto mem_path = scratch("membership.jsonl");
  REQUIRE(invoke({"membership", "--poly", "X1 - X2", "--n", "2", "--n-max", "5", "--out", mem_path.string()}).code ==
          kExitOk);
  const auto mem = read_records(mem_path);
  REQUIRE(mem.size() == 1);
  const MultiPoly f = parse_poly(mem[0]["params"]["poly"].get<std::string>());
  const auto& verdicts = mem[0]["result"]["verdicts"];
  CHECK(verdicts.size() == 4);
  for (const auto& v : verdicts) CHECK(scalars(v["values"]) == check_membership(f, v["n"]).values);
}

TEST_CASE("resume skips recorded points without duplicating them") {
  const auto path = scratch("resume.jsonl");
  const std::vector<std::string> args{"rpc-scan", "--max-exp", "2", "--n-max", "4", "--out", path.string()};
  REQUIRE(invoke(args).code == kExitOk);
  const auto first = read_records(path).size();
  const auto again = invoke(args);
  CHECK(again.out.find("computed 0") != std::string::npos);
  CHECK(read_records(path).size() == first);

  // A half-written file resumes with only the missing points.
  {
    std::ifstream in(path);
    std::string line1, line2;
    std::getline(in, line1);
    std::getline(in, line2);
    in.close();
    std::ofstream out(path, std::ios::trunc);
    out << line1 << '\n' << line2 << '\n' << "{\"truncated";
  }
  const auto resumed = invoke(args);
  CHECK(resumed.out.find("resumed 2") != std::string::npos);
  ScanStore store(path);
  CHECK(store.size() == first);
  CHECK(store.skipped_lines() == 1);

  const auto rig = scratch("rig_resume.jsonl");
  const std::vector<std::string> rig_args{"rigidity-scan", "--m", "1", "--grid", "-3..3", "--n-max", "15",
                                         "--out", rig.string()};
  REQUIRE(invoke(rig_args).code == kExitOk);
  CHECK(invoke(rig_args).out.find("computed 0, resumed 6") != std::string::npos);
  CHECK(read_records(rig).size() == 6);
}

TEST_CASE("scan store keys by kind and parameters") {
  const auto path = scratch("store.jsonl");
  {
    ScanStore store(path);
    store.append("rpc", json{{"x", 1}}, json{{"y", 2}});
    store.append("rpc", json{{"x", 1}}, json{{"y", 3}});
    store.append("rigidity", json{{"x", 1}}, json{{"y", 4}});
    CHECK(store.size() == 2);
  }
  ScanStore reopened(path);
  REQUIRE(reopened.find("rpc", json{{"x", 1}}) != nullptr);
  CHECK((*reopened.find("rpc", json{{"x", 1}}))["y"] == 2);
  CHECK(reopened.find("rpc", json{{"x", 2}}) == nullptr);
  CHECK_THROWS_AS(ScanStore("/nonexistent-dir/x/store.jsonl"), std::runtime_error);
  const json rec = make_record("rpc", json::object(), json::object());
  CHECK(rec.size() == 5);
  for (const char* field : {"schema_version", "kind", "params", "result", "timestamp"}) CHECK(rec.contains(field));
}
