#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "flatlie/cli.hpp"
#include "flatlie/manifest.hpp"

using namespace flatlie;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliRun run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << text;
  return p;
}

} // namespace

TEST_CASE("catalog emits a parseable manifest") {
  CliRun r = run({"catalog", "aff1"});
  CHECK(r.exit_code == 0);
  Manifest m = parse_manifest(r.out);
  CHECK(m.name == "aff1");
  CHECK(m.dim == 2);
  // canonical emit: running twice is byte-identical
  CHECK(run({"catalog", "aff1"}).out == r.out);
}

TEST_CASE("catalog options") {
  CHECK(parse_manifest(run({"catalog", "heisenberg", "--n", "2"}).out).name ==
        "h5");
  CHECK(parse_manifest(run({"catalog", "abelian", "--n", "4"}).out).dim == 4);
  Manifest osc =
      parse_manifest(run({"catalog", "oscillator", "--lambda", "1,2"}).out);
  CHECK(osc.dim == 6);
  CliRun bad = run({"catalog", "nope"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("check reads stdin and reports structured verdicts") {
  std::string manifest = run({"catalog", "aff1"}).out;
  CliRun r = run({"check", "-", "--jacobi"}, manifest);
  CHECK(r.exit_code == 0);
  json doc = r.doc();
  CHECK(doc["tool"] == "flatlie");
  CHECK(doc["version"] == tool_version);
  CHECK(doc["command"] == "check");
  CHECK(doc["input_digest"] == digest_string(manifest));
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["check"] == "jacobi");
  CHECK(doc["checks"][0]["verdict"] == "pass");
  CHECK(r.err.find("summary: 1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("check exit code 1 on failing verdicts with witness payload") {
  std::string manifest = run({"catalog", "aff1"}).out;
  CliRun r = run({"check", "-", "--unimodular"}, manifest);
  CHECK(r.exit_code == 1);
  json c = r.doc()["checks"][0];
  CHECK(c["verdict"] == "fail");
  CHECK(c["witness"]["indices"] == json::array({0}));
  CHECK(c["witness"]["left"] == json::array({"1"}));
}

TEST_CASE("check --all covers forms and products with scoped names") {
  std::string manifest = run({"catalog", "heisenberg"}).out;
  CliRun r = run({"check", "-", "--all"}, manifest);
  json doc = r.doc();
  std::vector<std::string> names;
  for (const auto& c : doc["checks"])
    names.push_back(c["check"]);
  auto has = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  CHECK(has("jacobi"));
  CHECK(has("unimodular"));
  CHECK(has("semisimple"));
  CHECK(has("two_nilpotent"));
  CHECK(has("invariant(euclidean)"));
  CHECK(has("invariant(lorentz)"));
  CHECK(has("flat_metric(lorentz)"));
  CHECK(has("flat_affine(flat).torsion"));
  CHECK(has("flat_affine(flat).curvature"));
  CHECK(has("complete(flat)"));
  // default (no flags) behaves like --all
  CHECK(run({"check", "-"}, manifest).out == r.out);
}

TEST_CASE("check named form and product flags") {
  std::string manifest = run({"catalog", "heisenberg"}).out;
  CliRun r = run({"check", "-", "--flat-metric", "lorentz", "--complete",
                  "flat"},
                 manifest);
  CHECK(r.exit_code == 0);
  CHECK(r.doc()["checks"].size() == 2);
  CliRun missing = run({"check", "-", "--flat-metric", "nope"}, manifest);
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("no form named") != std::string::npos);
}

TEST_CASE("levi-civita derives the product and embeds it in the manifest") {
  std::string manifest = run({"catalog", "aff1"}).out;
  CliRun r = run({"levi-civita", "-", "--form", "hyperbolic"}, manifest);
  CHECK(r.exit_code == 0);
  json doc = r.doc();
  CHECK(doc["command"] == "levi-civita");
  CHECK(doc["derived"]["form"] == "hyperbolic");
  json lc = doc["derived"]["manifest"]["products"]["levi_civita"];
  json expected = json::parse(
      R"([[0, 0, [[0, "-1"]]], [0, 1, [[1, "1"]]]])");
  CHECK(lc == expected);
  // derived manifest is itself consumable by check
  std::string inner = doc["derived"]["manifest"].dump();
  CliRun chk = run({"check", "-", "--flat-affine", "levi_civita"}, inner);
  CHECK(chk.exit_code == 0);
}

TEST_CASE("signature command reports index, plus, zero") {
  std::string manifest = run({"catalog", "oscillator", "--lambda", "1"}).out;
  CliRun r = run({"signature", "-", "--form", "mu0"}, manifest);
  CHECK(r.exit_code == 0);
  json sig = r.doc()["derived"]["signature"];
  CHECK(sig["index"] == 1);
  CHECK(sig["plus"] == 3);
  CHECK(sig["zero"] == 0);

  // degenerate forms are fine for signature
  std::string degenerate = R"({
    "name": "d", "dim": 2, "basis": ["a", "b"], "brackets": [],
    "forms": {"g": [["1", "0"], ["0", "0"]]}
  })";
  CliRun d = run({"signature", "-", "--form", "g"}, degenerate);
  CHECK(d.exit_code == 0);
  CHECK(d.doc()["derived"]["signature"]["zero"] == 1);
}

TEST_CASE("build cotangent pipes into check") {
  std::string h3 = run({"catalog", "heisenberg"}).out;
  CliRun r = run({"build", "cotangent", "-"}, h3);
  CHECK(r.exit_code == 0);
  Manifest m = parse_manifest(r.out);
  CHECK(m.name == "T*h3");
  CHECK(m.dim == 6);
  CHECK(m.forms.count("mu0") == 1);
  CliRun chk = run({"check", "-", "--jacobi", "--invariant", "mu0"}, r.out);
  CHECK(chk.exit_code == 0);
  CliRun sig = run({"signature", "-", "--form", "mu0"}, r.out);
  CHECK(sig.doc()["derived"]["signature"]["index"] == 3);
}

TEST_CASE("build classical-cotangent embeds the levi-civita product") {
  std::string aff = run({"catalog", "aff1"}).out;
  CliRun r = run({"build", "classical-cotangent", "-", "--product", "alpha0"},
                 aff);
  CHECK(r.exit_code == 0);
  Manifest m = parse_manifest(r.out);
  CHECK(m.dim == 4);
  CHECK(m.forms.count("hyperbolic") == 1);
  CHECK(m.products.count("levi_civita") == 1);
  CliRun chk = run({"check", "-", "--flat-metric", "hyperbolic"}, r.out);
  CHECK(chk.exit_code == 0);

  // non-flat product input is a usage error (exit 2)
  CliRun bad = run({"build", "classical-cotangent", "-", "--product", "nope"},
                   aff);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("build oscillator validates lambda") {
  CliRun r = run({"build", "oscillator", "--lambda", "1,2,3"});
  CHECK(r.exit_code == 0);
  Manifest m = parse_manifest(r.out);
  CHECK(m.dim == 8);
  CHECK(m.name == "oscillator(1,2,3)");
  CHECK(run({"build", "oscillator", "--lambda", "2,1"}).exit_code == 2);
  CHECK(run({"build", "oscillator", "--lambda", "0"}).exit_code == 2);
  CHECK(run({"build", "oscillator", "--lambda", "x"}).exit_code == 2);
  // rational frequencies work
  CliRun q = run({"build", "oscillator", "--lambda", "1/2,3/2"});
  CHECK(q.exit_code == 0);
  CHECK(parse_manifest(q.out).name == "oscillator(1/2,3/2)");
}

TEST_CASE("build double from files") {
  auto base = write_temp("flatlie_base.json", run({"catalog", "abelian",
                                                   "--n", "2"}).out);
  auto h = write_temp("flatlie_h.json", R"({
    "name": "r1", "dim": 1, "basis": ["z"], "brackets": []
  })");
  auto psi = write_temp("flatlie_psi.json", R"({
    "maps": [[["0", "-1"], ["1", "0"]]]
  })");
  CliRun r = run({"build", "double", base.string(), h.string(), "--psi",
                  psi.string()});
  CHECK(r.exit_code == 0);
  Manifest m = parse_manifest(r.out);
  CHECK(m.dim == 4);
  CHECK(m.basis == std::vector<std::string>{"z", "e1", "e2", "z*"});
  CliRun chk = run({"check", "-", "--jacobi", "--invariant", "mu0"}, r.out);
  CHECK(chk.exit_code == 0);

  // psi that is not antisymmetric is rejected with exit 2
  auto badpsi = write_temp("flatlie_badpsi.json", R"({
    "maps": [[["1", "0"], ["0", "1"]]]
  })");
  CliRun bad = run({"build", "double", base.string(), h.string(), "--psi",
                    badpsi.string()});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
  std::filesystem::remove(base);
  std::filesystem::remove(h);
  std::filesystem::remove(psi);
  std::filesystem::remove(badpsi);
}

TEST_CASE("milnor decompose mode") {
  std::string rot = R"({
    "name": "rot3", "dim": 3, "basis": ["e1", "e2", "e3"],
    "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[1, "-1"]]]],
    "forms": {"euclidean": [["1","0","0"],["0","1","0"],["0","0","1"]]}
  })";
  CliRun r = run({"milnor", "-", "--form", "euclidean"}, rot);
  CHECK(r.exit_code == 0);
  json d = r.doc()["derived"];
  CHECK(d["b_basis"] == json::parse(R"([["1","0","0"]])"));
  CHECK(d["u_basis"] == json::parse(R"([["0","1","0"],["0","0","1"]])"));

  // failure mode: curved metric reports milnor fail, exit 1
  std::string aff = run({"catalog", "aff1"}).out;
  CliRun f = run({"milnor", "-", "--form", "euclidean"}, aff);
  CHECK(f.exit_code == 1);
  json checks = f.doc()["checks"];
  CHECK(checks[0]["check"] == "milnor");
  CHECK(checks[0]["verdict"] == "fail");
  CHECK(checks[0]["note"] == "metric not flat");
}

TEST_CASE("milnor assemble mode round-trips") {
  std::string rot = R"({
    "name": "rot3", "dim": 3, "basis": ["e1", "e2", "e3"],
    "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[1, "-1"]]]],
    "forms": {"euclidean": [["1","0","0"],["0","1","0"],["0","0","1"]]}
  })";
  auto spec = write_temp("flatlie_asm.json", R"({
    "b_dim": 1, "u_dim": 2,
    "action": [[["0", "-1"], ["1", "0"]]]
  })");
  CliRun r = run({"milnor", "-", "--form", "euclidean", "--assemble",
                  spec.string()},
                 rot);
  CHECK(r.exit_code == 0);
  json doc = r.doc();
  std::vector<std::string> names;
  for (const auto& c : doc["checks"])
    names.push_back(c["check"]);
  CHECK(std::find(names.begin(), names.end(), "roundtrip_b") != names.end());
  CHECK(std::find(names.begin(), names.end(), "roundtrip_u") != names.end());
  Manifest assembled =
      parse_manifest(doc["derived"]["manifest"].dump(2) + "\n");
  CHECK(assembled.dim == 3);
  CHECK(assembled.products.count("levi_civita") == 1);
  std::filesystem::remove(spec);
}

TEST_CASE("output flag writes files") {
  auto out = std::filesystem::temp_directory_path() / "flatlie_out.json";
  CliRun r = run({"catalog", "sl2", "-o", out.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(parse_manifest(buf.str()).name == "sl2");
  std::filesystem::remove(out);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"check"}).exit_code == 2);          // missing file
  CHECK(run({"levi-civita", "-"}).exit_code == 2); // missing --form
  CHECK(run({"check", "/does/not/exist"}).exit_code == 2);
  CliRun h = run({"--help"});
  CHECK(h.exit_code == 0);
  CHECK(h.out.find("Usage") != std::string::npos);
  CliRun hs = run({"check", "--help"});
  CHECK(hs.exit_code == 0);
}

TEST_CASE("malformed manifest surfaces as error with exit 2") {
  CliRun r = run({"check", "-", "--jacobi"}, "{not json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CliRun v = run({"check", "-"},
                 R"({"name": "x", "dim": 2, "basis": ["a","b"],
                     "brackets": [[1, 0, [[0, "1"]]]]})");
  CHECK(v.exit_code == 2);
  CHECK(v.err.find("brackets[0]") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  std::string manifest = run({"catalog", "oscillator", "--lambda", "1,2"}).out;
  CliRun a = run({"check", "-", "--all"}, manifest);
  CliRun b = run({"check", "-", "--all"}, manifest);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("no ansi colors leak into captured streams") {
  std::string manifest = run({"catalog", "aff1"}).out;
  CliRun r = run({"check", "-", "--unimodular"}, manifest);
  CHECK(r.err.find('\x1b') == std::string::npos);
}
