#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monicrep/cli.hpp"
#include "monicrep/examples.hpp"
#include "monicrep/monic.hpp"

#include <cstdio>
#include <fstream>

using namespace monicrep;
using cli::run_command;
using io::json;

namespace {

// self-contained bundle matching the shipped two-source fixture
json fixture_bundle() {
    json q = {{"vertices", {"1", "2", "3"}},
              {"arrows",
               {{{"name", "alpha"}, {"source", "2"}, {"target", "1"}},
                {{"name", "beta"}, {"source", "3"}, {"target", "1"}}}}};
    json a = {{"field", {{"char", 2}}}, {"type", "truncated_poly"}, {"n", 2}};
    json x = {{"algebra", "A"},
              {"quiver", "Q"},
              {"branches",
               {{"1",
                 {{"dim", 3},
                  {"action",
                   {{"1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                    {"x", {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}}}}}},
                {"2", {{"dim", 1}, {"action", {{"1", {{1}}}, {"x", {{0}}}}}}},
                {"3", {{"dim", 1}, {"action", {{"1", {{1}}}, {"x", {{0}}}}}}}}},
              {"arrows", {{"alpha", {{0}, {0}, {1}}}, {"beta", {{0}, {1}, {1}}}}}};
    json y = x;
    y["branches"]["1"] = {{"dim", 2},
                          {"action", {{"1", {{1, 0}, {0, 1}}}, {"x", {{0, 0}, {1, 0}}}}}};
    y["arrows"] = {{"alpha", {{0}, {1}}}, {"beta", {{0}, {1}}}};
    return json{{"quivers", {{"Q", q}}},
                {"algebras", {{"A", a}}},
                {"representations", {{"X", x}, {"Y", y}}},
                {"target", "X"}};
}

struct TempFile {
    std::string path;
    explicit TempFile(const json& content, const char* name) {
        path = std::string("/tmp/monicrep_test_") + name + ".json";
        std::ofstream out(path);
        out << content.dump(2);
    }
    explicit TempFile(const char* text, const char* name) {
        path = std::string("/tmp/monicrep_test_") + name + ".json";
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("check-monic exit codes and reports") {
    TempFile f(fixture_bundle(), "bundle");
    auto ok = run_command({"check-monic", f.path, "--target", "X"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["result"]["monic"] == true);

    auto bad = run_command({"check-monic", f.path, "--target", "Y"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.report["result"]["first_failure"]["vertex"] == "1");
    CHECK(bad.report["result"]["first_failure"]["condition"] == "m2");

    TempFile broken("{ not json", "broken");
    auto err = run_command({"check-monic", broken.path});
    CHECK(err.exit_code == 2);

    auto missing = run_command({"check-monic", "/tmp/monicrep_nonexistent.json"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("check-gp exit codes") {
    TempFile f(fixture_bundle(), "bundle_gp");
    CHECK(run_command({"check-gp", f.path, "--target", "X"}).exit_code == 0);
    auto y = run_command({"check-gp", f.path, "--target", "Y"});
    CHECK(y.exit_code == 1);
    CHECK(y.report["result"]["route"] == "MonicTheorem");
    CHECK(y.report["result"]["status"] == "NotGP");
}

TEST_CASE("reports are byte-identical across runs") {
    TempFile f(fixture_bundle(), "bundle_det");
    auto a = run_command({"check-gp", f.path, "--target", "X", "--report", "json"});
    auto b = run_command({"check-gp", f.path, "--target", "X", "--report", "json"});
    CHECK(a.text == b.text);
    CHECK(a.report.contains("inputs"));
    // a content hash is embedded per input
    CHECK(a.report["inputs"]["X"].get<std::string>().size() == 16);
    // no wall clock unless asked
    CHECK_FALSE(a.report.contains("wall_clock_ms"));
    auto timed = run_command({"check-gp", f.path, "--target", "X", "--timings"});
    CHECK(timed.report.contains("wall_clock_ms"));
}

TEST_CASE("algebra-info") {
    json bundle = {{"algebras",
                    {{"A", {{"field", {{"char", 2}}}, {"type", "truncated_poly"}, {"n", 2}}}}}};
    TempFile f(bundle, "alg");
    auto res = run_command({"algebra-info", f.path});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["self_injective"] == "yes");
    CHECK(res.report["result"]["gorenstein"] == "yes");
    CHECK(res.report["result"]["global_dim"] == ">8");

    json chain = {{"quivers",
                   {{"Q",
                     {{"vertices", {"1", "2", "3"}},
                      {"arrows",
                       {{{"name", "a1"}, {"source", "2"}, {"target", "1"}},
                        {{"name", "a2"}, {"source", "3"}, {"target", "2"}}}}}}}},
                  {"algebras",
                   {{"KA3",
                     {{"field", {{"char", 2}}},
                      {"type", "path_algebra_over"},
                      {"base", {{"field", {{"char", 2}}}, {"type", "field"}}},
                      {"quiver", "Q"}}}}}};
    TempFile g(chain, "ka3");
    auto ka3 = run_command({"algebra-info", g.path});
    CHECK(ka3.exit_code == 0);
    CHECK(ka3.report["result"]["hereditary"] == "yes");
    CHECK(ka3.report["result"]["global_dim"] == "1");
    CHECK(ka3.report["result"]["self_injective"] == "no");
}

TEST_CASE("quiver-tensor counts and exit code") {
    json a2 = {{"vertices", {"1", "2"}},
               {"arrows", {{{"name", "a"}, {"source", "2"}, {"target", "1"}}}}};
    TempFile f(a2, "q1");
    TempFile g(a2, "q2");
    auto res = run_command({"quiver-tensor", f.path, g.path});
    CHECK(res.exit_code == 1); // not hereditary
    CHECK(res.report["result"]["vertex_count"] == 4);
    CHECK(res.report["result"]["arrow_count"] == 4);
    CHECK(res.report["result"]["relation_count"] == 1);

    json point = {{"vertices", {"1"}}};
    TempFile p(point, "pt");
    auto hered = run_command({"quiver-tensor", f.path, p.path});
    CHECK(hered.exit_code == 0);
    CHECK(hered.report["result"]["hereditary"] == true);
}

TEST_CASE("coker-phi emits the quotient representation") {
    TempFile f(fixture_bundle(), "bundle_coker");
    auto res = run_command({"coker-phi", f.path, "--target", "X"});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["cokernel"]["branches"]["1"]["dim"] == 2);
    CHECK(res.report["result"]["cokernel"]["branches"]["2"]["dim"] == 1);

    // precondition failure: Y is not monic
    auto bad = run_command({"coker-phi", f.path, "--target", "Y"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("suite with budget zero runs the fixtures and skips the harnesses") {
    auto res = run_command({"suite", "--budget", "0"});
    CHECK(res.exit_code == 0);
    bool saw_skip = false, saw_pass = false;
    for (const auto& item : res.report["result"]["items"]) {
        if (item["status"] == "SKIP") saw_skip = true;
        if (item["status"] == "PASS") saw_pass = true;
        CHECK(item["status"] != "FAIL");
    }
    CHECK(saw_skip);
    CHECK(saw_pass);
}

TEST_CASE("suite determinism at a small budget") {
    auto a = run_command({"suite", "--budget", "200", "--seed", "9", "--report", "json"});
    auto b = run_command({"suite", "--budget", "200", "--seed", "9", "--report", "json"});
    CHECK(a.exit_code == 0);
    CHECK(a.text == b.text);
}

TEST_CASE("representation JSON round-trips through a workspace") {
    auto a = examples::dual_numbers(exactlin::Field::prime(2));
    repmod::Representation x = examples::rep_X(a);
    json rj = io::representation_to_json(x);
    json bundle = fixture_bundle();
    bundle["representations"]["Z"] = json{{"algebra", "A"},
                                          {"quiver", "Q"},
                                          {"branches", rj["branches"]},
                                          {"arrows", rj["arrows"]}};
    io::Workspace ws = io::Workspace::load(bundle);
    CHECK(ws.representation("Z") == x);
    CHECK(ws.representation("Z") == ws.representation("X"));
}

TEST_CASE("rational matrices parse from fraction strings") {
    json bundle = {{"algebras",
                    {{"A", {{"field", {{"char", 0}}}, {"type", "truncated_poly"}, {"n", 2}}}}},
                   {"quivers", {{"P", {{"vertices", {"1"}}}}}},
                   {"representations",
                    {{"M",
                      {{"algebra", "A"},
                       {"quiver", "P"},
                       {"branches",
                        {{"1",
                          {{"dim", 2},
                           {"action",
                            {{"1", {{"1", 0}, {0, "2/2"}}},
                             {"x", {{0, 0}, {"-3/3", "0/5"}}}}}}}}},
                       {"arrows", json::object()}}}}}};
    TempFile f(bundle, "rat");
    auto res = run_command({"check-monic", f.path});
    CHECK(res.exit_code == 0);
}

TEST_CASE("check-gp on a cyclic quiver is a precondition error") {
    json bundle = {{"quivers",
                    {{"L", {{"vertices", {"1"}},
                            {"arrows", {{{"name", "l"}, {"source", "1"}, {"target", "1"}}}}}}}},
                   {"algebras", {{"K", {{"field", {{"char", 2}}}, {"type", "field"}}}}},
                   {"representations",
                    {{"M",
                      {{"algebra", "K"},
                       {"quiver", "L"},
                       {"branches", {{"1", {{"dim", 1}, {"action", {{"1", {{1}}}}}}}}},
                       {"arrows", {{"l", {{1}}}}}}}}}};
    TempFile f(bundle, "cyclic");
    CHECK(run_command({"check-monic", f.path}).exit_code == 0); // monic is defined here
    CHECK(run_command({"check-gp", f.path}).exit_code == 2);    // the decision is not
}

TEST_CASE("triangular algebras load from bundles") {
    json dualspec = {{"field", {{"char", 2}}}, {"type", "truncated_poly"}, {"n", 2}};
    json bundle = {{"algebras",
                    {{"A", dualspec},
                     {"T", {{"field", {{"char", 2}}},
                            {"type", "triangular"},
                            {"a", "A"},
                            {"b", "A"},
                            {"bimodule", "M"}}}}},
                   {"bimodules",
                    {{"M",
                      {{"left", "A"},
                       {"right", "A"},
                       {"dim", 2},
                       {"left_action", {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}},
                       {"right_action", {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}}}}}},
                   {"target", "T"}};
    TempFile f(bundle, "tri");
    auto res = run_command({"algebra-info", f.path});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["dim"] == 6);
    CHECK(res.report["result"]["gorenstein"] == "yes");
    CHECK(res.report["result"]["left_inj_dim"] == "1");
}

TEST_CASE("the suite embeds a replayable counterexample") {
    auto res = run_command({"suite", "--budget", "500", "--seed", "2", "--report", "json"});
    REQUIRE(res.exit_code == 0);
    bool found = false;
    for (const auto& item : res.report["result"]["items"]) {
        if (!item.contains("data")) continue;
        found = true;
        // the counterexample parses back into a representation
        json bundle;
        bundle["quivers"] = {{"Q", item["data"]["quiver"]}};
        bundle["algebras"] =
            {{"A",
              {{"field", item["data"]["field"]},
               {"type", "path_algebra_over"},
               {"base", {{"field", item["data"]["field"]}, {"type", "field"}}},
               {"quiver", "Q"}}}};
        bundle["representations"] = {{"C",
                                      {{"algebra", "A"},
                                       {"quiver", "Q"},
                                       {"branches", item["data"]["branches"]},
                                       {"arrows", item["data"]["arrows"]}}}};
        io::Workspace ws = io::Workspace::load(bundle);
        CHECK(monic::check_monic(ws.representation("C")).is_monic);
    }
    CHECK(found);
}

TEST_CASE("unknown commands and flags fail cleanly") {
    CHECK(run_command({"frobnicate"}).exit_code == 2);
    CHECK(run_command({"check-monic"}).exit_code == 2);
    CHECK(run_command({"check-gp", "x.json", "--report", "yaml"}).exit_code == 2);
}
