#include <gtest/gtest.h>

#include "mahler/verifier.hpp"

using namespace mahler;

TEST(Verifier, QuickSuitePasses) {
    auto r = run_suite("quick");
    EXPECT_GT(r.pass, 0);
    EXPECT_EQ(r.fail, 0);
    EXPECT_EQ(r.pass + r.fail + r.skip, static_cast<int>(r.checks.size()));
}

TEST(Verifier, UnknownSuiteThrows) { EXPECT_THROW(run_suite("nope"), DomainError); }

TEST(Verifier, JsonShape) {
    auto r = run_suite("mzv");
    auto j = to_json(r);
    EXPECT_EQ(j["suite"], "mzv");
    ASSERT_TRUE(j["checks"].is_array());
    const auto& c = j["checks"][0];
    for (const char* key : {"name", "lhs", "rhs", "abs_err", "tol", "status", "paper_ref", "runtime_ms", "note"})
        EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_EQ(j["summary"]["pass"], r.pass);
    EXPECT_EQ(c["runtime_ms"], 0);
}

TEST(Verifier, Deterministic) {
    EXPECT_EQ(to_json(run_suite("mzv")).dump(), to_json(run_suite("mzv")).dump());
}

TEST(Verifier, NonFiniteBecomesNull) {
    IdentityCheck c;
    c.name = "x";
    EXPECT_TRUE(to_json(c)["lhs"].is_null());
}
