#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(PERMHARD_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string net(const std::string& name) { return permhard::testing::netlist_path(name); }

}  // namespace

TEST(Cli, VerifyConstantZero) {
    const auto r = run_cli("verify " + net("const0"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("Δ = 2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifyNegativeAndZeroGaps) {
    EXPECT_EQ(run_cli("verify " + net("const1")).status, 0);
    EXPECT_EQ(run_cli("verify " + net("ident")).status, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli("").status, 2);
    EXPECT_EQ(run_cli("frobnicate").status, 2);
    EXPECT_EQ(run_cli("verify /nonexistent/file.net").status, 2);
    EXPECT_EQ(run_cli("split-primes").status, 2);
    EXPECT_EQ(run_cli("mod-p " + net("const0") + " --prime 23").status, 2);
}

TEST(Cli, GadgetCheck) {
    EXPECT_EQ(run_cli("gadget-check").status, 0);
}

TEST(Cli, SplitPrimes) {
    const auto r = run_cli("split-primes --below 250");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "191\n239\n241\n");
}

TEST(Cli, ModP) {
    EXPECT_EQ(run_cli("mod-p " + net("const1") + " --prime 191").status, 0);
}

TEST(Cli, CompileWritesReadableCertificate) {
    const auto path = std::filesystem::temp_directory_path() / "permhard_cli_test.cert";
    const auto r = run_cli("compile " + net("const0") + " -o " + path.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(std::filesystem::exists(path));
    std::filesystem::remove(path);
}

TEST(Cli, PsdDemoAndSearch) {
    EXPECT_EQ(run_cli("psd-demo --n 3 --seed 4").status, 0);
    EXPECT_EQ(run_cli("psd-demo --n 2 --single-call --seed 4").status, 0);
    EXPECT_EQ(run_cli("search " + net("and3")).status, 0);
    EXPECT_EQ(run_cli("search " + net("nand") + " --approx 4 --adversary high").status, 0);
}

TEST(Cli, SeededRunsAreReproducible) {
    const auto a = run_cli("psd-demo --n 2 --estimate 20000 --seed 17");
    const auto b = run_cli("psd-demo --n 2 --estimate 20000 --seed 17");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}
