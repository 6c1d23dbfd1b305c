#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("EXLIE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "EXLIE_CLI must point at the CLI binary");
  return p;
}

std::string schema_dir() {
  const char* p = std::getenv("EXLIE_SCHEMA_DIR");
  REQUIRE_MESSAGE(p != nullptr, "EXLIE_SCHEMA_DIR must point at docs/schemas");
  return p;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + quote(cli_path()) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code = 0) {
  Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

json load_schema(const std::string& name) {
  std::ifstream in(schema_dir() + "/" + name + ".schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

// Validator for the subset of JSON Schema used by the shipped documents:
// type, required, properties, items, enum, pattern and local $ref.
bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const json& v, const json& schema, const json& root, const std::string& path,
              std::vector<std::string>& errors) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"];
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    validate(v, root["$defs"][ref.substr(8)], root, path, errors);
    return;
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(v, t);
    } else {
      ok = type_matches(v, schema["type"]);
    }
    if (!ok) {
      errors.push_back(path + ": wrong type");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": not in enum");
  }
  if (schema.contains("pattern") && v.is_string() &&
      !std::regex_search(v.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    errors.push_back(path + ": pattern mismatch");
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!v.contains(k)) errors.push_back(path + ": missing " + k.get<std::string>());
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (v.contains(it.key())) validate(v[it.key()], *it, root, path + "." + it.key(), errors);
  }
  if (v.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i)
      validate(v[i], schema["items"], root, path + "[" + std::to_string(i) + "]", errors);
}

void check_schema(const json& doc, const std::string& payload_schema) {
  std::vector<std::string> errors;
  const json env = load_schema("envelope");
  validate(doc, env, env, "$", errors);
  const json ps = load_schema(payload_schema);
  validate(doc["payload"], ps, ps, "$.payload", errors);
  for (const auto& e : errors) FAIL_CHECK(e);
  CHECK(errors.empty());
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("parabolic max") {
  json doc = run_json("parabolic max --form 'E6(6)'");
  check_schema(doc, "parabolic_max");
  CHECK(doc["command"] == "parabolic max");
  const json& rows = doc["payload"];
  REQUIRE(rows.size() == 6);
  CHECK(rows[0]["levi"] == "so(5,5)");
  CHECK(rows[0]["dim_n"] == 16);
  // Distinct maximal parabolics up to the diagram symmetry: four.
  std::set<std::pair<std::string, int>> distinct;
  for (const auto& r : rows)
    distinct.insert({r["levi"].get<std::string>(), r["dim_n"].get<int>()});
  CHECK(distinct.size() == 4);
  // The Roman spelling selects the same form.
  CHECK(run_json("parabolic max --form EI")["payload"] == rows);
  json f4 = run_json("parabolic max --form 'F4(4)'");
  CHECK(f4["payload"][0]["long_short"] == json::array({11, 9}));
}

TEST_CASE("related enumerate") {
  Run r = run("related enumerate --max --format table");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 16);  // header, rule, 14 rows
  CHECK(ls[0].find("row") == 0);
  json doc = run_json("related enumerate --max");
  check_schema(doc, "related_enumerate");
  CHECK(doc["payload"]["classes"].size() == 14);
  CHECK(doc["payload"]["beyond_table"].empty());
  CHECK(doc["payload"]["classes"][9]["dim_n"] == 57);
}

TEST_CASE("related check") {
  json yes = run_json("related check --form1 'E7(-25)' --node1 3 --form2 'E7(7)' --node2 6");
  CHECK(yes["payload"]["related"] == true);
  json no = run_json("related check --form1 'E6(6)' --node1 1 --form2 'E6(6)' --node2 2");
  CHECK(no["payload"]["related"] == false);
}

TEST_CASE("interpret") {
  json doc = run_json("interpret --label 'so(5,5)'");
  check_schema(doc, "interpret");
  REQUIRE(doc["payload"]["roles"].size() == 1);
  CHECK(doc["payload"]["roles"][0]["text"] == "str0(J2(Os))");
  CHECK(doc["payload"]["roles"][0]["verified"] == true);
  CHECK(run("interpret --label 'so(3,3)'").code == 2);
}

TEST_CASE("symmetry commands") {
  json rep = run_json("symmetry report --algebra 'J3(Hs)'");
  CHECK(rep["payload"]["dim_der"] == 21);
  CHECK(rep["payload"]["dim_str0"] == 35);
  CHECK(rep["payload"]["dim_conf"] == 66);
  CHECK(rep["payload"]["dim_qconf"] == 133);
  Run t1 = run("symmetry verify-table1");
  json doc = json::parse(t1.out);
  check_schema(doc, "symmetry_verify_table1");
  // Exit status follows the mismatch count; the only mismatches are the
  // tabulated automorphism algebras of the spin factors with m, n >= 2 or n = 0.
  const int failures = doc["payload"]["failures"];
  CHECK(t1.code == (failures ? 1 : 0));
  for (const auto& c : doc["payload"]["checks"]) {
    if (c["ok"]) continue;
    const std::string s = c["subject"];
    CHECK(s.rfind("R+Gamma", 0) == 0);
    CHECK(s.find(" aut") != std::string::npos);
  }
}

TEST_CASE("other subcommands") {
  json a = run_json("algebra O");
  CHECK(a["payload"]["dim"] == 8);
  CHECK(a["payload"]["norm_signature"]["positive"] == 8);
  json os = run_json("algebra --name Os");
  CHECK(os["payload"]["norm_signature"]["negative"] == 4);
  json j = run_json("jordan --algebra 'J3(O)'");
  CHECK(j["payload"]["dim"] == 27);
  json ji = run_json("jordan --algebra 'J3(C)' --identities --trials 5");
  for (const auto& i : ji["payload"]["identities"]) CHECK(i["failed"] == 0);
  json f = run_json("fts --algebra 'J3(R)' --identities --trials 3");
  CHECK(f["payload"]["dim"] == 14);
  json roots = run_json("roots info --type E8");
  CHECK(roots["payload"]["num_roots"] == 240);
  json list = run_json("realform list");
  check_schema(list, "realform_list");
  CHECK(list["payload"].size() == 12);
  json info = run_json("realform info --form EIX");
  CHECK(info["payload"]["label"] == "E8(-24)");
  CHECK(info["payload"]["problems"].empty());
  json res = run_json("realform restricted --form 'F4(-20)'");
  CHECK(res["payload"]["reduced_type"] == "BC1");
  CHECK(res["payload"]["positive_multiplicity_sum"] == 15);
  json g = run_json("parabolic grading --form 'E8(8)' --node 3");
  CHECK(g["payload"]["depth"] == 6);
  CHECK(g["payload"]["positive_sum"] == 106);
  json all = run_json("parabolic all --form 'G2(2)'");
  CHECK(all["payload"].size() == 4);
}

TEST_CASE("output formats") {
  Run csv = run("realform list --format csv");
  CHECK(csv.code == 0);
  auto ls = lines(csv.out);
  REQUIRE(ls.size() == 13);
  CHECK(ls[0] == "form,roman,type,r,dim g,dim K,dim P,dim N,M0");
  CHECK(ls[3] == "E6(-14),EIII,E6,2,78,46,32,30,so(6)+so(2)");
  Run narrow = run("related enumerate --max --format table", "COLUMNS=60");
  for (const auto& l : lines(narrow.out)) CHECK(l.size() <= 60);
  Run wide = run("related enumerate --max --format table", "COLUMNS=400");
  std::size_t longest = 0;
  for (const auto& l : lines(wide.out)) longest = std::max(longest, l.size());
  CHECK(longest > 60);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("parabolic max").code == 2);
  CHECK(run("parabolic max --form 'E6(6)' --format xml").code == 2);
  CHECK(run("parabolic max --form E9").code == 2);
  CHECK(run("parabolic grading --form 'G2(2)' --node 3").code == 2);
  CHECK(run("jordan --algebra 'J4(O)'").code == 2);
  CHECK(run("verify-all --only nothing").code == 2);
  CHECK(run("verify-all --registry /nonexistent/registry.json").code == 2);
}

TEST_CASE("verify-all filtering and determinism") {
  Run a = run("verify-all --only parabolic.bruhat,relations.roles --seed 42");
  Run b = run("verify-all --only parabolic.bruhat,relations.roles --seed 42 --jobs 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json doc = json::parse(a.out);
  check_schema(doc, "verify_all");
  REQUIRE(doc["payload"]["suites"].size() == 2);
  CHECK(doc["payload"]["suites"][0]["name"] == "parabolic.bruhat");
  CHECK(doc["payload"]["suites"][0]["passed"] == 534);
  Run c = run("verify-all --only composition --seed 7 --trials 20");
  Run d = run("verify-all --only composition --seed 7 --trials 20");
  CHECK(c.out == d.out);
  // Known tabulation inconsistencies make the grading suite fail.
  CHECK(run("verify-all --only parabolic.gradings").code == 1);
}

TEST_CASE("registry dump, hash and corrupted registry") {
  namespace fs = std::filesystem;
  json dump = run_json("dump-registry");
  check_schema(dump, "dump_registry");
  const std::string hash = dump["registry_hash"];
  CHECK(run_json("realform list")["registry_hash"] == hash);

  const fs::path dir = fs::temp_directory_path() / ("exlie_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const fs::path good = dir / "good.json", bad = dir / "bad.json";
  std::ofstream(good) << dump["payload"].dump();
  Run ok = run("verify-all --only realform --registry " + quote(good.string()));
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["registry_hash"] == hash);

  json corrupted = dump["payload"];
  for (auto& f : corrupted["forms"])
    if (f["label"] == "E7(-5)") f["dim_Npm"] = 61;
  std::ofstream(bad) << corrupted.dump();
  Run fail = run("verify-all --only realform --registry " + quote(bad.string()));
  CHECK(fail.code == 1);
  json fdoc = json::parse(fail.out);
  CHECK(fdoc["registry_hash"] != hash);
  bool named = false;
  for (const auto& s : fdoc["payload"]["suites"])
    for (const auto& msg : s["failures"])
      named = named || msg.get<std::string>().find("E7(-5)") != std::string::npos;
  CHECK(named);
  fs::remove_all(dir);
}
