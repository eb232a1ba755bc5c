// End-to-end checks of the pframe executable: exit codes and JSON output.

#include "pframe/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef PFRAME_EXE
#error "PFRAME_EXE must name the pframe binary"
#endif

namespace fs = std::filesystem;
using pframe::json;

namespace {

struct Proc {
    int code = -1;
    std::string out;
};

Proc run(const std::string& args) {
    const std::string cmd = std::string(PFRAME_EXE) + " " + args + " 2>&1";
    Proc r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("pframe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

} // namespace

TEST_F(Cli, AnalyzeIdentity) {
    const Proc r = run("analyze " + file("id.json", R"({"p": 2, "F": [[1,0],[0,1]], "T": [[1,0],[0,1]]})"));
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("asf").get<bool>());
    EXPECT_NEAR(j["bounds"]["lower"]["lo"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["bounds"]["upper"]["hi"].get<double>(), 1.0, 1e-9);
}

TEST_F(Cli, AnalyzeDuplicatedColumnIsNotAnASF) {
    const Proc r = run("analyze " + file("dup.json", R"({"p": 2, "F": [[1,0],[1,0]], "T": [[1,1],[0,0]]})"));
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_FALSE(json::parse(r.out).at("asf").get<bool>());
}

TEST_F(Cli, AnalyzeMercedes) {
    const Proc r = run("analyze " PFRAME_SAMPLES "/mercedes.json");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["bounds"]["lower"]["lo"].get<double>(), 1.5, 1e-9);
    EXPECT_NEAR(j["bounds"]["upper"]["hi"].get<double>(), 1.5, 1e-9);
}

TEST_F(Cli, CheckPW1WorkedExample) {
    const Proc r = run("check " PFRAME_SAMPLES "/worked_example.json --theorem pw1");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("hypotheses_hold").get<bool>());
    EXPECT_NEAR(j["predicted"]["lower"].get<double>(), 0.49, 1e-9);
    EXPECT_NEAR(j["predicted"]["upper"].get<double>(), 1.69, 1e-9);
}

TEST_F(Cli, CheckMainWithBetaOneIsUndecided) {
    const std::string path = file("b1.json", R"({"p": 2, "F": [[1,0],[0,1]], "T": [[1,0],[0,1]],
        "Omega": [[1,0],[0,1]], "params": {"beta": 1}})");
    const Proc r = run("check " + path + " --theorem main");
    EXPECT_EQ(r.code, 4) << r.out;
}

TEST_F(Cli, CheckSynthesisWithZeroGammaIsFalsifiedWithWitness) {
    const std::string path = file("g0.json", R"({"p": 2, "F": [[1,0],[0,1]], "T": [[1,0],[0,1]],
        "Omega": [[1,0.5],[0,1]], "params": {"gamma": 0}})");
    const Proc r = run("check " + path + " --theorem main");
    ASSERT_EQ(r.code, 3) << r.out;
    const json j = json::parse(r.out);
    bool witnessed = false;
    for (const auto& v : j.at("verdicts"))
        if (v.at("status") == "FALSIFIED" && v.contains("witness") && !v.at("witness").is_null())
            witnessed = true;
    EXPECT_TRUE(witnessed) << r.out;
}

TEST_F(Cli, CheckMissingParamsNamesTheKey) {
    const std::string path = file("np.json", R"({"p": 2, "F": [[1,0],[0,1]], "T": [[1,0],[0,1]],
        "Omega": [[1,0],[0,1]]})");
    const Proc r = run("check " + path + " --theorem main");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("params"), std::string::npos) << r.out;
}

TEST_F(Cli, CheckUnreadableFileIsUsageError) {
    const Proc r = run("check " + (dir / "absent.json").string() + " --theorem pw1");
    EXPECT_EQ(r.code, 1) << r.out;
}

TEST_F(Cli, UnknownTheoremIsUsageError) {
    const Proc r = run("check " PFRAME_SAMPLES "/worked_example.json --theorem pw9");
    EXPECT_EQ(r.code, 1) << r.out;
}

TEST_F(Cli, VerifyPW1Ensemble) {
    const Proc r = run("verify --theorem pw1 --seeds 1..100 --dim 2 --count 3");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("trials"), 100);
    EXPECT_EQ(j.at("bracket_ok"), 100);
    EXPECT_TRUE(j.at("certified_violations").empty()) << r.out;
}

TEST_F(Cli, VerifyZeroScaleAlwaysBrackets) {
    const Proc r = run("verify --theorem main --seeds 1..20 --scale 0 --p 1.5");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("certified_violations").empty()) << r.out;
    EXPECT_EQ(j.at("bracket_ok"), j.at("certified"));
}

TEST_F(Cli, GenIsDeterministic) {
    const Proc a = run("gen --seed 1");
    const Proc b = run("gen --seed 1");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(run("gen --seed 2").out, a.out);
}

TEST_F(Cli, GenZeroScaleLeavesVectorsUnperturbed) {
    const Proc r = run("gen --seed 1 --scale 0");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("Omega"), j.at("T"));
}

TEST_F(Cli, GenThenCheck) {
    const Proc g = run("gen --seed 1 --dim 2 --count 3 --p 2 --scale 0.1");
    ASSERT_EQ(g.code, 0) << g.out;
    const Proc r = run("check " + file("gen.json", g.out) + " --theorem pw1");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, OutputFlagWritesFile) {
    const std::string out = (dir / "out.json").string();
    const Proc r = run("-o " + out + " gen --seed 3");
    ASSERT_EQ(r.code, 0) << r.out;
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(text, run("gen --seed 3").out);
}
