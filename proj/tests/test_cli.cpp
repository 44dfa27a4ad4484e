#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_run.hpp"
#include "json.hpp"

using clirun::fixture;
using clirun::run;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST(Cli, Orbifold) {
    auto r = run("orbifold --signature 2,2 --degree 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Z/2 ⊕ Z/2\n");
    EXPECT_EQ(run("orbifold --signature 2,3,7 --degree 5").out, "0\n");
    EXPECT_EQ(run("orbifold --signature 2,3,5 --degree 2").out,
              "0 → Z → Pic → Z/2 ⊕ Z/3 ⊕ Z/5 → 0 (extension class not determined)\n");
    EXPECT_EQ(run("orbifold --signature 2,1 --degree 4").code, 2);
    EXPECT_EQ(run("orbifold --signature 2,x --degree 4").code, 2);
}

TEST(Cli, Cohomology) {
    auto r = run("cohomology --group Z2 --module Z2-trivial --degree 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Z/2\n");
    EXPECT_EQ(run("cohomology --group S3 --module Z3-inv --degree 1").out, "Z/3\n");
    EXPECT_EQ(run("cohomology --group K4 --module Z2 --degree 2").out, "Z/2 ⊕ Z/2 ⊕ Z/2\n");
    r = run("--oracle cohomology --group Z3 --module Z3-trivial --degree 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Z/3\noracle: agree\n");
    r = run("cohomology --group S3 --module sign --degree 1 --workspace " + fixture("s3_sign.json"));
    EXPECT_EQ(r.out, "Z/3\n");
    EXPECT_EQ(run("cohomology --group A5 --module Z2 --degree 1").code, 2);
}

TEST(Cli, VerifyTwoGroup) {
    auto r = run("verify-2group --workspace " + fixture("strict_z2.json") + " --type strict");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "pass\n");
    EXPECT_EQ(run("verify-2group --workspace " + fixture("z2_k3.json") + " --type t").code, 0);
    EXPECT_EQ(run("verify-2group --pi1 S3 --pi2 Z2-trivial --k3 1").code, 0);
    r = run("verify-2group --workspace " + fixture("bad_k3.json") + " --pi1 Z2 --pi2 M4 --k3-cochain k");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "fail: NotACocycle")) << r.out;
    r = run("--json verify-2group --workspace " + fixture("bad_k3.json") + " --pi1 Z2 --pi2 M4 --k3-cochain k");
    EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "fail");
}

TEST(Cli, ClassifyZeroCells) {
    auto r = run("--oracle classify 0cells --pi1 Z2 --pi2 Z1 --gamma Z2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "classes: 2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "oracle: agree (2)")) << r.out;
    r = run("classify 0cells --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z4 --outer 0,1 --a2 [[2]]");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "torsor group: Z/2\nclasses: 2\n")) << r.out;
    // no 0-cells: exit 1
    r = run("classify 0cells --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma D4 --outer 0,1 --a2 [[1]]");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "classes: 0")) << r.out;
    EXPECT_EQ(run("classify 0cells --pi1 Z2 --gamma Z4 --outer 0").code, 2);
    EXPECT_EQ(run("classify 0cells --pi1 Z2 --pi2 Z2-trivial --gamma Z4 --a2 [[1,2]]").code, 2);
}

TEST(Cli, ClassifyHigherCells) {
    std::string ws = " --workspace " + fixture("s3_cells.json");
    auto r = run("--oracle classify 1cells --src triv --dst triv --f 0,0,0,0,0,0" + ws);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "classes: 2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "oracle: agree (2)")) << r.out;
    r = run("--oracle classify 2cells --src triv --dst triv --f 0,0,0,0,0,0 --from 1 --to 1" + ws);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "oracle: agree")) << r.out;
    r = run("classify 2cells --src triv --dst triv --f 0,0,0,0,0,0 --from 0 --to 1" + ws);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "empty: ")) << r.out;
    EXPECT_EQ(run("classify 1cells --src nope --dst triv" + ws).code, 2);
    EXPECT_EQ(run("classify 1cells --src triv --dst triv").code, 2);
}

TEST(Cli, ClassifyExtensions) {
    auto r = run("--oracle classify extensions --pi1 Z2 --gamma Z2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "classes: 2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "element orders [1,2,2,2]")) << r.out;
    EXPECT_TRUE(contains(r.out, "element orders [1,2,4,4]")) << r.out;
    EXPECT_TRUE(contains(r.out, "oracle: agree (2)")) << r.out;
    EXPECT_TRUE(contains(run("classify extensions --pi1 Z2 --gamma Z3").out, "classes: 1\n"));
    EXPECT_TRUE(contains(run("classify extensions --pi1 Z3 --gamma Z3").out, "classes: 3\n"));
    r = run("classify extensions --pi1 Z2 --gamma Z3 --outer 0,1");
    EXPECT_TRUE(contains(r.out, "nonabelian")) << r.out;
}

TEST(Cli, ExtendAndSequence) {
    auto r = run("extend --workspace " + fixture("action_z4.json") + " --src c0");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "order: 8\nassociator: nonzero\naudit: pass\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "extracted k3 matches K3': yes")) << r.out;
    r = run("extend --pi1 Z2 --pi2 Z2-trivial --gamma Z4 --a2 [[2]] --class 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "group extension: exact")) << r.out;
    EXPECT_EQ(run("extend --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma D4 --outer 0,1 --a2 [[1]]").code, 1);

    r = run("--oracle sequence --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "0-cells: 2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "hom 1: transgression (1), 0-cells 0\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "audit: pass\noracle: agree\n")) << r.out;
}

TEST(Cli, Selftest) {
    auto r = run("selftest");
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(contains(r.out, "FAIL"));
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("cohomology --group Z2 --module Z2").code, 2);
    EXPECT_EQ(run("cohomology --group Z2 --module Z2 --degree 9").code, 2);
    EXPECT_EQ(run("orbifold --signature 2,2 --degree 4 --bogus").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ParseErrorsNameTheFile) {
    auto r = run("canonicalize " + fixture("invalid/unresolved.json"), true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "invalid/unresolved.json: /modules/M/group: unresolved reference")) << r.out;
    r = run("canonicalize " + fixture("invalid/truncated.json"), true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "truncated.json: byte")) << r.out;
    r = run("verify-2group --workspace " + fixture("missing.json") + " --type t", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "cannot open")) << r.out;
}

TEST(Cli, JsonReports) {
    auto j = nlohmann::json::parse(run("--json cohomology --group Z4 --module Z2 --degree 2").out);
    EXPECT_EQ(j["result"], "Z/2");
    EXPECT_EQ(j["factors"], nlohmann::json::array({2}));
    j = nlohmann::json::parse(run("--json orbifold --signature 2,3 --degree 2").out);
    EXPECT_EQ(j["extension_class"], "not determined");
    j = nlohmann::json::parse(run("--json classify extensions --pi1 Z3 --gamma Z3").out);
    EXPECT_EQ(j["classes"].size(), 3u);
}

TEST(Cli, ReportsAreDeterministic) {
    std::vector<std::string> commands = {
        "cohomology --group D4 --module Z2 --degree 3",
        "--json classify 0cells --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z4 --outer 0,1 --a2 [[2]]",
        "--json classify extensions --pi1 Z2 --gamma Q8",
        "extend --workspace " + fixture("action_z4.json") + " --src c1",
        "--json sequence --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z4 --outer 0,1",
        "selftest",
    };
    for (const std::string& c : commands) {
        auto first = run(c);
        for (int i = 0; i < 2; ++i) {
            auto again = run(c);
            EXPECT_EQ(again.code, first.code) << c;
            EXPECT_EQ(again.out, first.out) << c;
        }
    }
}

TEST(Cli, CanonicalRoundTripOnCorpus) {
    fs::path dir = TWOTYPE_FIXTURES;
    int checked = 0;
    for (const auto& e : fs::directory_iterator(dir / "golden")) {
        const std::string name = e.path().filename().string();
        fs::path src = dir / name;
        ASSERT_TRUE(fs::exists(src)) << name;
        std::string golden = slurp(e.path());
        EXPECT_EQ(run("canonicalize " + fixture(name)).out, golden) << name;
        EXPECT_EQ(run("canonicalize " + fixture("golden/" + name)).out, golden) << name;
        ++checked;
    }
    EXPECT_GE(checked, 6);
    EXPECT_EQ(run("canonicalize " + fixture("reordered.json")).out, slurp(dir / "golden" / "strict_z2.json"));
    fs::path out = fs::temp_directory_path() / "twotype_cli_canonical.json";
    auto r = run("canonicalize " + fixture("action_z4.json") + " -o '" + out.string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(slurp(out), slurp(dir / "golden" / "action_z4.json"));
    fs::remove(out);
}
