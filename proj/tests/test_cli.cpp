// Copyright 2026 The mukai-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mukai/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mukai;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome invoke_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    return invoke(std::move(args));
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("mukai_cli_" + name);
    std::ofstream(p) << text;
    return p;
}

const char* kConfig = R"(name        = k3-a2
basis_names = x0 x1 x2
gram        = 0 3 3; 3 0 3; 3 3 0
pg          = 1
class.H     = x0 + x1 + x2
root_kind   = mukai
roots       = v0 v1 v2
root.v0     = 1 | x0 | 1
root.v1     = 1 | x1 | 1
root.v2     = 1 | x2 | 1
polarization = H
twist       = 3 | H | 6
)";

// One invocation per command; each must succeed or return a verified negative.
const std::vector<std::vector<std::string>>& every_command() {
    static const std::vector<std::vector<std::string>> cmds{
        {"classify", "--model", "k3-example1:A2,r=2,a=1"},
        {"reflect", "--v", "1 | 0 | 1", "--i", "v1"},
        {"reduce", "--v", "1 | -H | 0"},
        {"orbit", "--model", "k3-example1:A2,r=1,a=1", "--v", "1 | 0 | 1"},
        {"exists", "--v", "1 | 0 | 1"},
        {"dim", "--v", "1 | 0 | 1"},
        {"dim", "--model", "rational-elliptic-e8", "--v", "1 | 0 | 1"},
        {"poincare", "--n", "2"},
        {"poincare", "--v", "1 | 0 | -1"},
        {"bset", "--model", "k3-example1:A3,r=1,a=1", "--xi", "0 | 0 | 0", "--d", "2"},
        {"verify-lie", "--type", "A2"},
        {"verify-lie", "--type", "A2affine", "--loop", "1", "--samples", "50"},
        {"verify-module", "--kind", "rdp", "--type", "D4"},
        {"verify-module", "--kind", "fiber", "--type", "A2", "--loop", "1"},
        {"verify-weyl", "--v", "1 | 0 | -1", "--trials", "10"},
        {"elliptic-exists", "--D", "f", "--chi", "1"},
        {"elliptic-exists", "--D", "-f", "--chi", "1"},
        {"elliptic-exists", "--rank", "1", "--c1", "sigma", "--chi", "1", "--r", "1", "--d", "1"},
        {"report", "--v", "1 | 0 | 1"},
    };
    return cmds;
}

}  // namespace

TEST(Cli, ClassifyFiniteA2) {
    Outcome o = invoke({"classify", "--model", "k3-example1:A2,r=2,a=1"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "Finite(A2)");
    json j = json::parse(invoke_json({"classify", "--model", "k3-example1:A2,r=2,a=1"}).out);
    EXPECT_EQ(j["configuration"]["label"], "A2");
    EXPECT_EQ(j["configuration"]["cartan"], json::parse("[[2,-1],[-1,2]]"));
}

TEST(Cli, VerifyLieE8AffineLoopThree) {
    Outcome o = invoke_json({"verify-lie", "--type", "E8affine", "--loop", "3", "--samples", "200"});
    ASSERT_EQ(o.code, 0) << o.err;
    json j = json::parse(o.out);
    EXPECT_EQ(j["dim"], 248);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_TRUE(j["affine"]["pass"].get<bool>());
    EXPECT_EQ(j["loop"], 3);
}

TEST(Cli, EllipticExistsFiber) {
    Outcome o = invoke_json({"elliptic-exists", "--D", "f", "--chi", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    json j = json::parse(o.out);
    EXPECT_EQ(j["verdict"], "Exists");
    EXPECT_EQ(j["query"]["chi"], 1);
    EXPECT_FALSE(j.contains("witness"));
}

TEST(Cli, ExitCodes) {
    // verified negatives
    EXPECT_EQ(invoke({"elliptic-exists", "--D", "-f", "--chi", "1"}).code, 1);
    EXPECT_EQ(invoke({"elliptic-exists", "--rank", "1", "--c1", "sigma", "--chi", "1", "--r", "1", "--d", "1"}).code, 1);
    EXPECT_EQ(invoke({"exists", "--v", "1 | 0 | 2"}).code, 1);
    // usage and precondition errors
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"reduce"}).code, 2);
    EXPECT_EQ(invoke({"--format", "yaml", "classify"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--model", "no-such-model"}).code, 2);
    EXPECT_EQ(invoke({"reduce", "--v", "1 | 0"}).code, 2);
    EXPECT_EQ(invoke({"elliptic-exists", "--D", "e9", "--chi", "1"}).code, 2);
    EXPECT_EQ(invoke({"elliptic-exists"}).code, 2);
    EXPECT_EQ(invoke({"verify-module", "--kind", "rdp"}).code, 2);
}

TEST(Cli, ErrorsGoToStderr) {
    Outcome o = invoke({"reduce", "--v", "1 | 0"});
    EXPECT_TRUE(o.out.empty());
    EXPECT_FALSE(o.err.empty());
}

TEST(Cli, EveryReportMatchesItsSchema) {
    for (const auto& args : every_command()) {
        Outcome o = invoke_json(args);
        ASSERT_LE(o.code, 1) << args.front() << ": " << o.err;
        json j = json::parse(o.out);
        EXPECT_EQ(j["command"], args.front());
        auto errs = report_schema_errors(j);
        EXPECT_TRUE(errs.empty()) << args.front() << ": " << (errs.empty() ? "" : errs.front());
        // re-parse round trip
        EXPECT_EQ(json::parse(j.dump()), j);
    }
}

TEST(Cli, SchemaRejectsDamagedReports) {
    json j = json::parse(invoke_json({"poincare", "--n", "1"}).out);
    ASSERT_TRUE(report_schema_errors(j).empty());
    json missing = j;
    missing.erase("euler");
    EXPECT_FALSE(report_schema_errors(missing).empty());
    json wrong = j;
    wrong["n"] = "one";
    EXPECT_FALSE(report_schema_errors(wrong).empty());
    json unknown = j;
    unknown["command"] = "nope";
    EXPECT_FALSE(report_schema_errors(unknown).empty());
    EXPECT_FALSE(report_schema_errors(json::array()).empty());
}

TEST(Cli, PoincareExample) {
    json j = json::parse(invoke_json({"poincare", "--n", "1"}).out);
    EXPECT_EQ(j["poincare"], json::parse("[1,0,22,0,1]"));
    EXPECT_EQ(j["euler"], 24);
}

TEST(Cli, JsonIsDeterministicAndSorted) {
    for (const auto& args : every_command()) {
        const std::string a = invoke_json(args).out;
        const std::string b = invoke_json(args).out;
        EXPECT_EQ(a, b) << args.front();
        json j = json::parse(a);
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end())) << args.front();
    }
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("MUKAI_KIT_SEED", "not-a-number", 1);
    Outcome bad = invoke({"verify-weyl", "--v", "1 | 0 | -1", "--trials", "3"});
    ::unsetenv("MUKAI_KIT_SEED");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("MUKAI_KIT_SEED"), std::string::npos);

    ::setenv("MUKAI_KIT_SEED", "7", 1);
    const std::string a = invoke_json({"verify-weyl", "--v", "1 | 0 | -1", "--trials", "5"}).out;
    const std::string b = invoke_json({"verify-weyl", "--v", "1 | 0 | -1", "--trials", "5"}).out;
    ::unsetenv("MUKAI_KIT_SEED");
    EXPECT_EQ(a, b);
}

TEST(Cli, ModelFromFile) {
    auto p = write_temp("good.cfg", kConfig);
    Outcome o = invoke({"classify", "--model", p.string()});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "Affine(A2^(1))");
    std::filesystem::remove(p);
}

TEST(Cli, MalformedConfigReportsLineAndField) {
    std::string text = kConfig;
    text.replace(text.find("gram        = 0 3 3;"), 20, "gram        = 0 3 x;");
    auto p = write_temp("bad.cfg", text);
    Outcome o = invoke({"classify", "--model", p.string()});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
    EXPECT_NE(o.err.find("gram"), std::string::npos) << o.err;

    auto q = write_temp("unknown.cfg", std::string(kConfig) + "colour = blue\n");
    Outcome u = invoke({"classify", "--model", q.string()});
    EXPECT_EQ(u.code, 2);
    EXPECT_NE(u.err.find("colour"), std::string::npos) << u.err;
    std::filesystem::remove(p);
    std::filesystem::remove(q);
}

TEST(Cli, BinarySmoke) {
    const std::string cmd = std::string(MUKAI_KIT_BINARY) + " --format json elliptic-exists --D f --chi 1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = ::pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(out, invoke_json({"elliptic-exists", "--D", "f", "--chi", "1"}).out);

    const int bad = std::system((std::string(MUKAI_KIT_BINARY) + " nonsense >/dev/null 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(bad), 2);
}
