#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "braket_cli.hpp"

using braket::cli::run_cli;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

// "key: value" lines of the text report, top level only.
std::map<std::string, std::string> text_fields(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == ' ') continue;
        const auto colon = line.find(": ");
        if (colon != std::string::npos) fields[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return fields;
}

}  // namespace

TEST(CliDj, ParityJson) {
    json j = run_json({"dj", "--n", "4", "--oracle", "balanced:parity", "--shots", "0"});
    EXPECT_EQ(j["verdict"], "balanced");
    EXPECT_EQ(j["p_zero"].get<double>(), 0.0);
    EXPECT_EQ(j["oracle_applications"], 1);
    EXPECT_EQ(j["classical_deterministic_queries"], 2);
    EXPECT_EQ(j["oracle_kind"], "balanced");
    EXPECT_FALSE(j.contains("histogram"));
}

TEST(CliDj, ConstantText) {
    CliRun r = run({"dj", "--n", "4", "--oracle", "constant:1", "--shots", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto f = text_fields(r.out);
    EXPECT_EQ(f["verdict"], "constant");
    EXPECT_EQ(f["p_zero"], "1");
    EXPECT_EQ(f["classical_deterministic_queries"], "9");
}

TEST(CliDj, SampledHistogramOnBitMask) {
    json j = run_json({"dj", "--n", "2", "--oracle", "balanced:bit:0", "--shots", "1000", "--seed", "7"});
    ASSERT_TRUE(j.contains("histogram"));
    EXPECT_EQ(j["histogram"]["counts"], json({{"10", 1000}}));
    EXPECT_EQ(j["histogram"]["seed"], 7);
    EXPECT_EQ(j["rng"], "mt19937_64");
}

TEST(CliDj, ExitCodes) {
    EXPECT_EQ(run({"dj", "--n", "2", "--oracle", "nonsense"}).code, 2);
    EXPECT_EQ(run({"dj", "--n", "13", "--oracle", "constant:0"}).code, 2);
    EXPECT_EQ(run({"dj", "--oracle", "constant:0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    CliRun violated = run({"dj", "--n", "2", "--oracle", "table:0111"});
    EXPECT_EQ(violated.code, 3);
    EXPECT_NE(violated.err.find("neither constant nor balanced"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"dj", "--help"}).code, 0);
}

TEST(CliState, MeasureExamples) {
    json lit = run_json({"state", "i*(1/sqrt(2))|01> + (1/sqrt(2))|11>", "--measure"});
    EXPECT_NEAR(lit["distribution"]["01"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(lit["distribution"]["11"].get<double>(), 0.5, 1e-12);

    json corrected = run_json({"state", "i/sqrt(3)|01> + sqrt(2/3)|11>", "--measure"});
    EXPECT_NEAR(corrected["distribution"]["01"].get<double>(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(corrected["distribution"]["11"].get<double>(), 2.0 / 3.0, 1e-12);

    json h = run_json({"state", "|0>", "--apply", "h", "--measure"});
    EXPECT_NEAR(h["distribution"]["0"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(h["distribution"]["1"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(h["normalization_factors"][0].get<double>(), 1.0, 1e-12);
}

TEST(CliState, Separable) {
    json bell = run_json({"state", "(1/sqrt(2))|00> + (1/sqrt(2))|11>", "--separable"});
    EXPECT_EQ(bell["separable"]["is_product"], false);
    EXPECT_FALSE(bell["separable"].contains("factors"));

    json prod = run_json({"state", "|01>", "--apply", "h@0", "--separable"});
    EXPECT_EQ(prod["separable"]["is_product"], true);
    EXPECT_EQ(prod["separable"]["factors"].size(), 2U);
}

TEST(CliState, GatesBuildBellPair) {
    json j = run_json({"state", "|00>", "--apply", "h@0,cnot@0,1", "--separable"});
    EXPECT_EQ(j["state"], "(0.7071067812)|00> + (0.7071067812)|11>");
    EXPECT_EQ(j["separable"]["is_product"], false);
    EXPECT_EQ(j["normalization_factors"].size(), 2U);
}

TEST(CliState, DecimalLabels) {
    json j = run_json({"state", "i*(1/2)|18> + i*(1/2)|50> + (1/2)|26> + (1/2)|19>", "--qubits", "6", "--labels",
                       "decimal"});
    EXPECT_EQ(j["qubits"], 6);
    EXPECT_EQ(j["state"], "(0+1i)*(0.5000000000)|18> + (0.5000000000)|19> + (0.5000000000)|26> + (0+1i)*(0.5000000000)|50>");
}

TEST(CliState, ExitCodes) {
    CliRun unclosed = run({"state", "|01"});
    EXPECT_EQ(unclosed.code, 2);
    EXPECT_NE(unclosed.err.find("position 3"), std::string::npos);
    EXPECT_EQ(run({"state", "|2>"}).code, 2);
    EXPECT_EQ(run({"state", "|0> + |1>"}).code, 2);
    EXPECT_EQ(run({"state", "|0>", "--apply", "cnot"}).code, 2);
    EXPECT_EQ(run({"state", "|00>", "--apply", "h@2"}).code, 2);
    EXPECT_EQ(run({"state", "|00>", "--apply", "z"}).code, 2);
    EXPECT_EQ(run({"state"}).code, 2);
    EXPECT_EQ(run({"state", "|0>", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"state", "|0>", "--file", "x.dirac"}).code, 2);
}

TEST(CliState, TextAndJsonAgree) {
    const std::vector<std::string> base{"state", "i/sqrt(3)|01> + sqrt(2/3)|11>", "--measure", "--separable"};
    json j = run_json(base);
    CliRun text = run(base);
    ASSERT_EQ(text.code, 0);
    // Nested distribution lines are indented "  key: value".
    std::istringstream in(text.out);
    std::string line;
    std::map<std::string, std::string> nested;
    while (std::getline(in, line)) {
        const auto colon = line.find(": ");
        if (line.rfind("  ", 0) == 0 && colon != std::string::npos) nested[line.substr(2, colon - 2)] = line.substr(colon + 2);
    }
    for (const char* key : {"01", "11"}) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", j["distribution"][key].get<double>());
        EXPECT_EQ(nested[key], buf);
    }
    EXPECT_EQ(text_fields(text.out)["state"], j["state"].get<std::string>());
}

TEST(CliState, SampledHistogram) {
    json a = run_json({"state", "|0>", "--apply", "h", "--shots", "500", "--seed", "3"});
    json b = run_json({"state", "|0>", "--apply", "h", "--shots", "500", "--seed", "3"});
    EXPECT_EQ(a["histogram"], b["histogram"]);
    EXPECT_EQ(a["histogram"]["counts"]["0"].get<int>() + a["histogram"]["counts"]["1"].get<int>(), 500);
}

TEST(CliState, FixtureFile) {
    const std::string path = ::testing::TempDir() + "braket_cli_fixture.dirac";
    {
        std::ofstream f(path);
        f << "# two states\n|0>\n\n(1/sqrt(2))|0> - (1/sqrt(2))|1>\n";
    }
    CliRun r = run({"state", "--file", path, "--measure", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 2U);
    EXPECT_EQ(j[0]["line"], 2);
    EXPECT_EQ(j[1]["line"], 4);
    EXPECT_NEAR(j[1]["distribution"]["1"].get<double>(), 0.5, 1e-12);
    EXPECT_EQ(run({"state", "|0>", "--file", path}).code, 2);
    std::remove(path.c_str());
}
