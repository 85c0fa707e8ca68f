// One line per acceptance criterion, built from the "all" suite.
#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "mahler/verifier.hpp"

namespace {

constexpr std::array<const char*, 13> titles{
    "m2(1-x) singular quadrature",
    "m_k(1-x) two routes, k = 2..8, and the k = 6 closed form",
    "linear pair measure and its zero",
    "m2(x+y+1) reduced integral vs published value",
    "m2(1+x+y(1-x)) published value vs reduced integral",
    "Z(s, x-1) Gamma ratio and exact moments",
    "two-parameter measure grid and extracted moments",
    "Z(s, x+1/x+y+1/y+c) series, 3F2 and exact values",
    "x+y+c family: exact moments, m2, m3 and the double series",
    "Dyson family moments and m(1 + 0.1 P_2)",
    "MZV engine, stuffle and permutation sums",
    "Smyth measures",
    "scaling and squaring laws, byte-identical JSON",
};

std::string capture(const std::string& cmd, int& code) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return out;
    }
    char buf[65536];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

} // namespace

int main() {
    auto report = mahler::run_suite("all");
    std::map<int, std::pair<int, int>> tally;  // criterion -> (pass, fail)
    std::map<int, std::string> first_failure;
    for (const auto& c : report.checks) {
        if (c.criterion == 0) continue;
        auto& [p, f] = tally[c.criterion];
        if (c.status == mahler::CheckStatus::Pass) ++p;
        if (c.status == mahler::CheckStatus::Fail) {
            ++f;
            if (!first_failure.count(c.criterion)) first_failure[c.criterion] = c.name;
        }
    }

    const std::string cmd = std::string(MAHLER_CLI) + " verify --suite all --json - 2>/dev/null";
    int code1 = 0, code2 = 0;
    const std::string a = capture(cmd, code1);
    const std::string b = capture(cmd, code2);
    const bool identical = !a.empty() && a == b;

    int failed = 0;
    for (int i = 1; i <= 13; ++i) {
        auto [p, f] = tally[i];
        bool ok = p > 0 && f == 0;
        std::string detail = std::to_string(p) + " pass, " + std::to_string(f) + " fail";
        if (i == 13) {
            ok = ok && identical;
            detail += identical ? ", json identical" : ", json differs";
        }
        if (!ok && first_failure.count(i)) detail += "; first failure: " + first_failure[i];
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i << ": " << titles[static_cast<std::size_t>(i - 1)]
                  << " (" << detail << ")\n";
        if (!ok) ++failed;
    }
    std::cout << (13 - failed) << "/13 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
