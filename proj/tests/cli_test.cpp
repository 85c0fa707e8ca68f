#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(MAHLER_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST(Cli, ComputeHigherMeasure) {
    auto r = run("compute mm --poly \"1-x\" --k 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0.822467033"), std::string::npos) << r.out;
}

TEST(Cli, ComputeZeta) {
    auto r = run("compute zeta --poly 1-x --s 2 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"value\": 2"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("compute mm --poly 1-x --k -1").code, 2);
    EXPECT_EQ(run("compute mm --poly \"1+\" --k 1").code, 2);
    EXPECT_EQ(run("closed-form no-such-formula").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("table nope").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ClosedForms) {
    auto r = run("closed-form mm-pair-linear --alpha 0.5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-0.411233516712"), std::string::npos) << r.out;
    r = run("closed-form dyson_z --N 2 --k 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("20"), std::string::npos);
    r = run("closed-form z-4cycle --s 4 --c 10 --json");
    EXPECT_NE(r.out.find("12436"), std::string::npos) << r.out;
}

TEST(Cli, VerifyQuickAndTable) {
    auto r = run("verify --suite quick --json -");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"summary\""), std::string::npos);
    r = run("table paper-examples");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("m6(1-x)"), std::string::npos);
}
