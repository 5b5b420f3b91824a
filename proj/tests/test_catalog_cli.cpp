#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cobord/catalog.hpp"
#include "subprocess.hpp"

using namespace cobord;
using testutil::env_or_empty;
using testutil::run_command;

namespace {

TEST(Catalog, ParsesLeavesAndCombinators) {
    auto cat = Catalog::from_json_text(R"([
        {"label": "P2", "ambient": [2], "cuts": []},
        {"label": "C", "ambient": [2], "cuts": [[3]]},
        {"label": "CxP2", "product": ["C", "P2"]},
        {"label": "two", "union": ["P2", {"ambient": [2], "cuts": []}]}
    ])");
    EXPECT_EQ(cat.size(), 4u);
    EXPECT_EQ(cat.at("P2"), Variety::projective_space(2).relabeled("P2"));
    EXPECT_EQ(cat.at("C").components()[0].cuts, (std::vector<std::vector<int>>{{3}}));

    const auto& prod = cat.at("CxP2");
    ASSERT_EQ(prod.components().size(), 1u);
    EXPECT_EQ(prod.components()[0].ambient, Ambient({2, 2}));
    EXPECT_EQ(prod.components()[0].cuts, (std::vector<std::vector<int>>{{3, 0}}));

    EXPECT_EQ(cat.at("two").components().size(), 2u);
    EXPECT_EQ(cat.at("two").dimension(), 2);
}

TEST(Catalog, RejectsBadDescriptors) {
    EXPECT_THROW(Catalog::from_json_text("{}"), CatalogError);
    EXPECT_THROW(Catalog::from_json_text(R"([{"ambient": [2]}])"), CatalogError);  // no label
    EXPECT_THROW(Catalog::from_json_text(R"([
        {"label": "A", "ambient": [2]}, {"label": "A", "ambient": [3]}
    ])"),
                 CatalogError);  // duplicate
    EXPECT_THROW(Catalog::from_json_text(R"([{"label": "A", "product": ["nope", "nope"]}])"),
                 CatalogError);  // undefined reference
    EXPECT_THROW(Catalog::from_json_text(R"([{"label": "A", "ambient": [-1]}])"), CatalogError);
    EXPECT_THROW(Catalog::from_json_text(R"([{"label": "A", "ambient": [2], "cuts": [[1, 1]]}])"),
                 CatalogError);  // cut arity
    EXPECT_THROW(Catalog::from_json_text(R"([{"label": "A", "ambient": [2], "product": ["A"]}])"),
                 CatalogError);  // both leaf and combinator

    // Parse-level failures carry nlohmann's line/column report.
    try {
        Catalog::from_json_text("[{\"label\": \"A\",\n  \"ambient\": [2}]");
        FAIL() << "expected CatalogError";
    } catch (const CatalogError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
}

TEST(Catalog, UnknownLabelLookup) {
    EXPECT_THROW(Catalog::standard().at("not-a-variety"), CatalogError);
    EXPECT_TRUE(Catalog::standard().contains("cubic3"));
}

TEST(Catalog, StandardCatalogContents) {
    const auto& cat = Catalog::standard();
    EXPECT_GE(cat.size(), 60u);
    for (const char* label : {"P0", "P8", "X1_P2", "X5_P8", "H1_1", "H4_5", "cubic3", "P1xP1",
                              "P2xP1", "P1xP1xP1", "X3_P3xP1"})
        EXPECT_TRUE(cat.contains(label)) << label;

    // cubic3 aliases the degree-3 surface; product entries are genuine products.
    EXPECT_EQ(cat.at("cubic3").components(), cat.at("X3_P3").components());
    auto p2xp1 = Variety::product(Variety::projective_space(2), Variety::projective_space(1));
    EXPECT_EQ(cat.at("P2xP1").components(), p2xp1.components());

    // Every dimension 0..8 is represented and every entry has dim <= 8.
    std::set<int> dims;
    for (const auto& v : cat.entries()) {
        EXPECT_LE(v.dimension(), 8) << v.label();
        dims.insert(v.dimension());
    }
    for (int d = 0; d <= 8; ++d)
        EXPECT_TRUE(dims.count(d)) << d;
}

TEST(Catalog, StandardJsonRoundTrip) {
    auto reloaded = Catalog::from_json(Catalog::standard_json());
    const auto& built = Catalog::standard();
    ASSERT_EQ(reloaded.size(), built.size());
    for (size_t i = 0; i < built.size(); ++i)
        EXPECT_EQ(reloaded.entries()[i], built.entries()[i]);
}

/// CLI tests run the real binary; ctest provides its location and the
/// shipped catalog path through the environment.
class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        cli = env_or_empty("COBORD_CLI");
        std_catalog = env_or_empty("COBORD_STD_CATALOG");
        if (cli.empty() || std_catalog.empty())
            GTEST_SKIP() << "COBORD_CLI / COBORD_STD_CATALOG not set; run through ctest";
        catalog_arg = " --catalog " + std_catalog;
    }

    std::string cli, std_catalog, catalog_arg;
};

TEST_F(Cli, ShippedFileMatchesBuiltin) {
    std::ifstream in(std_catalog);
    ASSERT_TRUE(in) << std_catalog;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto shipped = Catalog::from_json_text(buffer.str());
    const auto& built = Catalog::standard();
    ASSERT_EQ(shipped.size(), built.size());
    for (size_t i = 0; i < built.size(); ++i)
        EXPECT_EQ(shipped.entries()[i], built.entries()[i]);
}

TEST_F(Cli, LazardAijGolden) {
    auto r = run_command(cli + " lazard --order 3 --show aij");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output,
              "(1,1): -2*m1\n"
              "(1,2): 4*m1^2 - 3*m2\n"
              "symmetric pairs (j,i) are implied\n");
}

TEST_F(Cli, LazardAxiomsAndOrderGuard) {
    EXPECT_EQ(run_command(cli + " lazard --order 2 --show axioms").exit_code, 0);
    EXPECT_EQ(run_command(cli + " lazard --order 1").exit_code, 2);
    EXPECT_EQ(run_command(cli + " lazard --show nonsense").exit_code, 2);
    EXPECT_EQ(run_command(cli + " frobnicate").exit_code, 2);
}

TEST_F(Cli, VarietyTables) {
    auto chern = run_command(cli + " variety" + catalog_arg + " --show chern-numbers");
    EXPECT_EQ(chern.exit_code, 0);
    // Partitions come in canonical decreasing order: (2) before (1,1).
    EXPECT_NE(chern.output.find("c2=9 c1^2=3 s2=-15"), std::string::npos);

    auto sd = run_command(cli + " variety" + catalog_arg + " --show sd --format csv");
    EXPECT_EQ(sd.exit_code, 0);
    EXPECT_NE(sd.output.find("P3,3,4"), std::string::npos);

    auto lazard = run_command(cli + " variety" + catalog_arg + " --show lazard-class");
    EXPECT_EQ(lazard.exit_code, 0);
    EXPECT_NE(lazard.output.find("24*m1^2 - 15*m2"), std::string::npos);
}

TEST_F(Cli, EmptyAndMalformedCatalogs) {
    auto empty = run_command("printf '%s' '[]' | " + cli + " variety --catalog - --show sd");
    EXPECT_EQ(empty.exit_code, 0);
    EXPECT_EQ(empty.output, "label  dimension  sd\n");

    auto bad = run_command("printf '%s' '[{\"label\": \"A\", \"ambient\": [2}]' | " + cli +
                           " variety --catalog -");
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_NE(bad.output.find("line 1"), std::string::npos) << bad.output;
    EXPECT_NE(bad.output.find("column"), std::string::npos) << bad.output;

    auto missing = run_command(cli + " variety --catalog /no/such/file.json");
    EXPECT_EQ(missing.exit_code, 2);
}

TEST_F(Cli, CheckSweepsAndReports) {
    EXPECT_EQ(run_command(cli + " check adams" + catalog_arg).exit_code, 0);
    EXPECT_EQ(run_command(cli + " check fgl-roundtrip").exit_code, 0);

    auto rost = run_command(cli + " check rost" + catalog_arg +
                            " --source cubic3 --target P2 --deg 1 --p 3");
    EXPECT_EQ(rost.exit_code, 0);
    EXPECT_NE(rost.output.find("implied eta-degree = -6"), std::string::npos) << rost.output;

    auto gdf = run_command(cli + " check gdf" + catalog_arg);
    EXPECT_EQ(gdf.exit_code, 1);
    EXPECT_NE(gdf.output.find("c2: 6 vs 9"), std::string::npos) << gdf.output;

    auto no_args = run_command(cli + " check rost" + catalog_arg);
    EXPECT_EQ(no_args.exit_code, 2);

    auto bad_label = run_command(cli + " check rost" + catalog_arg +
                                 " --source nope --target P2 --deg 1 --p 3");
    EXPECT_EQ(bad_label.exit_code, 2);
}

TEST_F(Cli, ReportJsonShape) {
    auto r = run_command(cli + " check rost" + catalog_arg +
                         " --source cubic3 --target P2 --deg 1 --p 3 --format json");
    EXPECT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(r.output);
    EXPECT_EQ(doc["check"], "rost");
    EXPECT_EQ(doc["pass"], true);
    EXPECT_EQ(doc["inputs"]["source"], "cubic3");
    EXPECT_NE(doc["witness"].get<std::string>().find("-6"), std::string::npos);
}

TEST_F(Cli, DeterministicOutput) {
    const std::vector<std::string> invocations = {
        " lazard --order 6 --show aij --format json",
        " variety" + catalog_arg + " --show chern-numbers --format csv",
        " variety" + catalog_arg + " --show lazard-class --format json"};
    for (const auto& args : invocations) {
        auto first = run_command(cli + args);
        auto second = run_command(cli + args);
        EXPECT_EQ(first.exit_code, second.exit_code);
        EXPECT_EQ(first.output, second.output) << args;
    }
}

TEST_F(Cli, EnvironmentVariableCatalog) {
    auto r = run_command("COBORD_CATALOG=" + std_catalog + " " + cli +
                         " variety --show sd --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("H2_3,4,-10"), std::string::npos) << r.output;
}

}  // namespace
