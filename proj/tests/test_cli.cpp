#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "diffu/gf2m.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "diffu");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = diffu::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("delta picks the monomial path for x^d") {
  const auto j = run_json({"delta", "--m", "8", "--func", "x^254", "--no-timestamp"});
  CHECK(j["delta"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j["mode"] == "monomial-fast");
  CHECK(j["field"]["modulus"] == "0x11B");
  CHECK(j["config"]["command"] == "delta");
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(run_json({"delta", "--m", "4", "--func", "x^7"}).contains("timestamp"));
}

TEST_CASE("delta modes") {
  const auto ex = run_json({"delta", "--m", "6", "--func", "0x3*x^7+x^5", "--no-timestamp"});
  CHECK(ex["mode"] == "exhaustive");
  const auto sm = run_json({"delta", "--m", "6", "--func", "0x3*x^7+x^5", "--mode", "sampled", "--alpha-budget",
                            "63", "--seed", "5", "--no-timestamp"});
  CHECK(sm["mode"] == "sampled");
  CHECK(sm["exact"] == false);
  CHECK(sm["delta"] == ex["delta"]);
  CHECK(sm["config"]["seed"] == 5);
  CHECK(run({"delta", "--m", "18", "--func", "0x3*x^7+x^5", "--alpha-budget", "2"}).out.find("\"sampled\"") !=
        std::string::npos);
}

TEST_CASE("text and csv formats") {
  const auto text = run({"delta", "--m", "8", "--func", "x^254", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("delta: 4\n") != std::string::npos);

  const auto csv = run({"delta", "--m", "3", "--func", "x^3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 9);
  CHECK(csv.out.rfind("alpha,0x0,", 0) == 0);
  CHECK(run({"predict", "--d", "7", "--m", "9", "--format", "csv"}).code == 2);
}

TEST_CASE("value table input") {
  std::string body;
  const auto field = diffu::Field::make(4);
  for (diffu::Elem x = 0; x < 16; ++x) body += diffu::to_hex(field.pow(x, 14)) + "\n";
  const auto path = temp_file("diffu_cli_inverse16.txt", body);
  const auto j = run_json({"delta", "--m", "4", "--table", path.string(), "--no-timestamp"});
  CHECK(j["delta"] == 4);
  CHECK(j["function"] == "x^14");
  std::filesystem::remove(path);
}

TEST_CASE("modulus selection") {
  const auto j = run_json({"delta", "--m", "8", "--mod", "0x11D", "--func", "x^7", "--no-timestamp"});
  CHECK(j["field"]["modulus"] == "0x11D");

  const auto path = temp_file("diffu_cli_moduli.txt", "8: 0x12B\n");
  const auto k = run_json({"delta", "--m", "8", "--moduli-file", path.string(), "--func", "x^7", "--no-timestamp"});
  CHECK(k["field"]["modulus"] == "0x12B");
  CHECK(k["config"]["moduli_file"] == path.string());
  CHECK(run({"delta", "--m", "9", "--moduli-file", path.string(), "--func", "x^7"}).code == 2);
  std::filesystem::remove(path);

  const auto bad = run({"delta", "--m", "8", "--mod", "0x101", "--func", "x^7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("0x3") != std::string::npos);
}

TEST_CASE("geom") {
  const auto ok = run_json({"geom", "--m", "5", "--func", "x^5+x^3", "--cross-check", "--no-timestamp"});
  CHECK(ok["contained"] == true);
  CHECK(ok["violation"].is_null());
  CHECK(ok["agree"] == true);

  const auto bad = run_json({"geom", "--m", "6", "--func", "x^9", "--no-timestamp"});
  CHECK(bad["contained"] == false);
  CHECK(bad["violation"].size() == 4);

  const auto stripped = run_json({"geom", "--m", "4", "--func", "x^7+x^2+1", "--no-timestamp"});
  CHECK(stripped["normalized_to"] == "x^7");
}

TEST_CASE("curve") {
  const auto j = run_json({"curve", "--m", "6", "--d", "7", "--no-timestamp"});
  CHECK(j["genus"] == 3);
  CHECK(j["weil_interval"] == nlohmann::json::array({17, 113}));
  CHECK(j["in_interval"] == true);
  CHECK(j["checks"]["component_plane"] == true);
  CHECK(run({"curve", "--m", "6", "--d", "8"}).code == 2);
  CHECK(run({"curve", "--m", "13", "--d", "7"}).code == 3);
}

TEST_CASE("predict") {
  const auto j = run_json({"predict", "--d", "7", "--m", "22", "--no-timestamp"});
  CHECK(j["hypotheses_met"] == true);
  CHECK(j["polynomial"]["inequality_holds"] == false);
  CHECK(j["polynomial"]["statement_claims"] == true);
  CHECK(j["predicted_delta_gt_4_monomial"] == true);

  const auto n = run_json({"predict", "--d", "9", "--m", "30", "--no-timestamp"});
  CHECK(n["hypotheses_met"] == false);
  CHECK(n["predicted_delta_gt_4_monomial"] == false);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "inverse"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto j = run_json({"verify", "--suite", "oracles", "--m", "3", "--format", "json", "--no-timestamp"});
  CHECK(j["passed"] == true);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("pf") {
  const auto r = run({"pf", "--d", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0x1*x^2*y^0*z^0\n", 0) == 0);
  CHECK(run({"pf", "--m", "4", "--func", "x^7"}).code == 0);
}

TEST_CASE("documented command examples") {
  const auto delta = [](const char* func, const char* m) {
    return run_json({"delta", "--func", func, "--m", m, "--no-timestamp"})["delta"].get<int>();
  };
  CHECK(delta("x^254", "8") == 4);
  CHECK(delta("x^3", "6") == 2);
  CHECK(delta("x^7", "7") >= 6);

  CHECK(run_json({"geom", "--func", "x^3", "--m", "4"})["contained"] == true);
  const auto g7 = run_json({"geom", "--func", "x^7", "--m", "7"});
  CHECK(g7["contained"] == false);
  CHECK(g7["violation"].size() == 4);
  const auto inv = run_json({"geom", "--func", "x^254", "--m", "8", "--cross-check"});
  CHECK(inv["contained"] == true);
  CHECK(inv["agree"] == true);
  CHECK(inv["normalized_to"] == "x^127");

  const auto c8 = run_json({"curve", "--d", "7", "--m", "8"});
  CHECK(c8["count"] >= 161);
  CHECK(c8["count"] <= 353);
  for (const char* check : {"vertex", "intercurve", "projection", "component_plane"}) {
    CHECK(c8["checks"][check] == true);
    CHECK(run_json({"curve", "--d", "15", "--m", "6"})["checks"][check] == true);
  }
  CHECK(run_json({"curve", "--d", "7", "--m", "4"})["count"] == 14);  // golden, matches the q^3 scan oracle

  CHECK(run_json({"predict", "--d", "7", "--m", "22"})["polynomial"]["statement_claims"] == true);
  CHECK(run_json({"predict", "--d", "7", "--m", "7"})["monomial"]["applies"] == true);
  CHECK(run_json({"predict", "--d", "8", "--m", "10"})["hypotheses"] ==
        "theorem hypotheses unmet: d is not 2^r - 1 with r >= 3");

  CHECK(run({"verify", "--suite", "equivalence", "--m", "4"}).code == 0);
  CHECK(run({"verify", "--suite", "borne1"}).code == 0);
  const auto a = run({"verify", "--suite", "invariances", "--seed", "42", "--format", "json", "--no-timestamp"});
  const auto b = run({"verify", "--suite", "invariances", "--seed", "42", "--format", "json", "--no-timestamp"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"delta", "--func", "x^3"}).code == 2);
  CHECK(run({"delta", "--m", "4"}).code == 2);
  CHECK(run({"delta", "--m", "4", "--func", "x^"}).err.find("column 3") != std::string::npos);
  CHECK(run({"delta", "--m", "30", "--func", "x^3"}).code == 2);
  CHECK(run({"geom", "--m", "12", "--func", "x^7"}).code == 3);
  CHECK(run({"geom", "--m", "5", "--func", "x^4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}
