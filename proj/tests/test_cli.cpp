#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "document.hpp"
#include "report.hpp"

using namespace duo;
using namespace duo::cli;

namespace {

const std::string kExamples = DUO_EXAMPLES_DIR;

json z2_category() {
  return json::parse(R"({
    "objects": 1,
    "morphisms": [{"name": "e", "source": 0, "target": 0}, {"name": "g", "source": 0, "target": 0}],
    "identities": [0],
    "composition": [[1, 1, 0]]
  })");
}

json document(const std::string& backend, json model) {
  return {{"backend", backend}, {"model", std::move(model)}};
}

std::string pointer_of(const json& doc, const LoadOptions& opts = {}) {
  try {
    load_model(parse_document(doc), opts);
  } catch (const DocumentError& e) {
    return e.pointer();
  }
  return "<none>";
}

template <class B>
json diagnose_report(const LoadedModel<B>& m, std::size_t samples, std::uint64_t seed) {
  Diagnoser<B> dg(m.engine->E);
  return diagnose_json(m, dg.diagnose(m.b, samples, seed), 0.0);
}

json diagnose_document(const json& doc, std::size_t samples = 2, std::uint64_t seed = 0) {
  auto m = load_model(parse_document(doc), {});
  return std::visit([&](const auto& x) { return diagnose_report(x, samples, seed); }, m);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DUO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Documents, SchemaErrorsCarryPointers) {
  EXPECT_EQ(pointer_of(json{{"model", {{"constructor", "trivial-i"}}}}), "/backend");
  EXPECT_EQ(pointer_of(document("spam", {{"constructor", "trivial-i"}})), "/backend");
  json extra = document("span", {{"constructor", "trivial-i"}});
  extra["colour"] = "red";
  EXPECT_EQ(pointer_of(extra), "/colour");
  EXPECT_EQ(pointer_of(document("span", {{"constructor", "nope"}})), "/model/constructor");
  EXPECT_EQ(pointer_of(document("span", json::object())), "/model");

  json bad_target = z2_category();
  bad_target["morphisms"][1]["target"] = 3;
  EXPECT_EQ(pointer_of(document("span", {{"category", bad_target}})), "/model/category/morphisms/1/target");

  json non_assoc = z2_category();
  non_assoc["morphisms"].push_back({{"name", "b"}, {"source", 0}, {"target", 0}});
  non_assoc["composition"] = json::parse("[[1, 1, 2], [1, 2, 1], [2, 1, 2], [2, 2, 2]]");
  EXPECT_EQ(pointer_of(document("span", {{"category", non_assoc}})), "/model/category/composition");
  json conflict = z2_category();
  conflict["composition"].push_back(json::parse("[1, 1, 1]"));
  EXPECT_EQ(pointer_of(document("span", {{"category", conflict}})), "/model/category/composition/1");

  json mismatch = document("span", {{"category", z2_category()}});
  mismatch["parameters"] = {{"n", 2}};
  EXPECT_EQ(pointer_of(mismatch), "/parameters/n");

  json bialg = json::parse(R"({"basis": ["1"], "multiplication": [["1", "1", "1", "one"]],
                               "unit": [["1", "1/1"]], "comultiplication": [["1", "1", "1", "1/1"]],
                               "counit": [["1", "1/1"]]})");
  EXPECT_EQ(pointer_of(document("gvec-commutative", {{"bialgebra", bialg}})), "/model/bialgebra/multiplication/0/3");
  bialg["multiplication"][0][3] = "1/1";
  bialg["unit"][0][0] = "x";
  EXPECT_EQ(pointer_of(document("gvec-commutative", {{"bialgebra", bialg}})), "/model/bialgebra/unit/0/0");
  bialg["unit"][0][0] = "1";
  EXPECT_EQ(pointer_of(document("span", {{"bialgebra", bialg}})), "/model/bialgebra");
  EXPECT_EQ(pointer_of(document("gvec-commutative", {{"bialgebra", bialg}})), "<none>");

  json group = document("span", {{"constructor", "group"},
                                 {"arguments", {{"table", json::parse("[[0, 1], [1, 1]]")}, {"unit", 0}}}});
  EXPECT_EQ(pointer_of(group), "/model/arguments/table/1");
}

TEST(Documents, WeakPresetIsGated) {
  json doc = document("gvec-weak", {{"constructor", "trivial-j"}});
  EXPECT_EQ(pointer_of(doc), "/backend");
  EXPECT_EQ(pointer_of(doc, {"", true}), "<none>");
  EXPECT_EQ(pointer_of(document("gvec-weak", {{"constructor", "sweedler"}}), {"", true}), "/model");
}

TEST(Documents, AxiomFailuresAreReportedSeparately) {
  json bialg = json::parse(R"({"basis": ["1", "g"],
    "multiplication": [["1","1","1","1/1"],["1","g","g","1/1"],["g","1","g","1/1"],["g","g","1","1/1"]],
    "unit": [["1","1/1"]], "comultiplication": [["1","1","1","1/1"],["g","g","g","1/1"]],
    "counit": [["1","1/1"],["g","2/1"]]})");
  auto doc = parse_document(document("gvec-commutative", {{"bialgebra", bialg}}));
  EXPECT_THROW(load_model(doc, {}), AxiomError);
}

TEST(Documents, BackendOverrideLinearizesCategories) {
  auto doc = parse_document(document("span", {{"category", z2_category()}}));
  auto m = load_model(doc, {"gvec-commutative", false});
  EXPECT_EQ(backend_of(m), "gvec-commutative");
  EXPECT_EQ(std::get<LoadedModel<GVecBackend>>(m).basis, (std::vector<std::string>{"e", "g"}));
}

TEST(Reports, Z2GroupoidHoldsAndValidates) {
  json r = diagnose_document(document("span", {{"category", z2_category()}}));
  EXPECT_NO_THROW(check_report(r));
  EXPECT_TRUE(r["all_hold"].get<bool>());
  EXPECT_EQ(r["antipode"]["function"], json::parse(R"({"e": "e", "g": "g"})"));
  EXPECT_EQ(r["antipode"]["involutive"], true);
}

TEST(Reports, WalkingArrowWitnessNamesTheMissedElement) {
  json r = diagnose_document(document("span", {{"constructor", "walking-arrow"}}));
  EXPECT_NO_THROW(check_report(r));
  EXPECT_FALSE(r["all_hold"].get<bool>());
  const json& w = r["verdicts"][1]["witness"];
  EXPECT_EQ(w["kind"], "no-preimage");
  ASSERT_EQ(w["element_names"].size(), 1u);
  const std::string name = w["element_names"][0];
  EXPECT_NE(name.find("f2:0->1"), std::string::npos) << name;
  for (const auto& v : r["verdicts"]) {
    if (!v["witness"].is_null()) {
      EXPECT_EQ(replay_witness_json(v["witness"]), std::nullopt) << v["condition"];
    }
  }
}

TEST(Reports, CorruptedWitnessesDoNotReplay) {
  json r = diagnose_document(document("span", {{"constructor", "walking-arrow"}}));
  json w = r["verdicts"][1]["witness"];
  json hit = w;
  hit["elements"][0] = hit["cell"]["map"][0];
  EXPECT_TRUE(replay_witness_json(hit).has_value());
  json lin = diagnose_document(document("gvec-commutative", {{"constructor", "monoid"},
                                                              {"arguments", {{"table", json::parse("[[0,1],[1,1]]")}, {"unit", 0}}}}));
  json k = lin["verdicts"][0]["witness"];
  EXPECT_EQ(replay_witness_json(k), std::nullopt);
  for (auto& x : k["vector"]) x = "1/1";
  EXPECT_TRUE(replay_witness_json(k).has_value());
  json broken = lin;
  broken["verdicts"][0]["witness"] = k;
  EXPECT_THROW(check_report(broken), DocumentError);
}

TEST(Reports, DeterministicAndRoundTrips) {
  json doc = document("gvec-commutative", {{"constructor", "sweedler"}});
  json a = diagnose_document(doc, 2, 5), b = diagnose_document(doc, 2, 5);
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
  json again = json::parse(a.dump());
  EXPECT_EQ(again, a);
  EXPECT_NO_THROW(check_report(again));
  EXPECT_EQ(a["antipode"]["order"], 4);
  EXPECT_EQ(a["antipode"]["involutive"], false);
}

TEST(Reports, SchemaCheckLocatesProblems) {
  json r = diagnose_document(document("span", {{"constructor", "discrete"}}));
  json missing = r;
  missing["verdicts"][3].erase("status");
  try {
    check_report(missing);
    FAIL() << "accepted a verdict without status";
  } catch (const DocumentError& e) {
    EXPECT_EQ(e.pointer(), "/verdicts/3/status");
  }
  json unreduced = diagnose_document(document("gvec-commutative", {{"constructor", "cyclic-group"}, {"arguments", {{"order", 2}}}}));
  unreduced["antipode"]["matrix"][0][0] = "2/2";
  EXPECT_THROW(check_report(unreduced), DocumentError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/z2-groupoid.json --samples 2"), 0);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/walking-arrow.json"), 1);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/idempotent-monoid.json --samples 1"), 1);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/bad-schema.json"), 2);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/bad-counit.json"), 2);
  EXPECT_EQ(run_cli("validate " + kExamples + "/bad-counit.json"), 1);
  EXPECT_EQ(run_cli("validate " + kExamples + "/qz2.json"), 0);
  EXPECT_EQ(run_cli("antipode " + kExamples + "/sweedler.json"), 0);
  EXPECT_EQ(run_cli("antipode " + kExamples + "/walking-arrow.json"), 1);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/trivial-j-weak.json"), 2);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/trivial-j-weak.json --feature weak-models --samples 1"), 0);
  EXPECT_EQ(run_cli("diagnose /nonexistent.json"), 2);
  EXPECT_EQ(run_cli("diagnose " + kExamples + "/qz2.json --backend-override nope"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli("selftest --suite transform --samples 2"), 0);
}

TEST(Cli, JsonOutputIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = (dir / "duo_cli_test_1.json").string(), p2 = (dir / "duo_cli_test_2.json").string();
  const std::string args = "diagnose -q " + kExamples + "/walking-arrow.json --seed 3 --json ";
  ASSERT_EQ(run_cli(args + p1), 1);
  ASSERT_EQ(run_cli(args + p2), 1);
  json a = json::parse(std::ifstream(p1)), b = json::parse(std::ifstream(p2));
  EXPECT_EQ(without_timing(a), without_timing(b));
  EXPECT_EQ(a["seed"], 3);
  EXPECT_EQ(a["samples"], 4);
  EXPECT_NO_THROW(check_report(a));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}
