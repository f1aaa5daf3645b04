#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twinsieve/cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "twinsieve");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = twinsieve::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Scalars) {
    EXPECT_EQ(run({"phi", "--x", "30", "--n", "3"}).out, "8\n");
    EXPECT_EQ(run({"phi", "--x", "30", "--n", "3", "--method", "direct"}).out, "8\n");
    EXPECT_EQ(run({"phi", "--x", "30", "--n", "3", "--method", "inclusion-exclusion"}).out, "8\n");
    EXPECT_EQ(run({"pi", "--x", "100"}).out, "25\n");
    EXPECT_EQ(run({"pi2", "--x", "49"}).out, "6\n");
    EXPECT_EQ(run({"--convention", "members", "pi2", "--x", "49"}).out, "11\n");
    EXPECT_EQ(run({"nth-prime", "--n", "2001"}).out, "17393\n");
    EXPECT_EQ(run({"twin-residue", "--x", "48", "--n", "3"}).out, "4\n");
    EXPECT_EQ(run({"twin-residue", "--x", "48", "--n", "3", "--method", "integer"}).out, "4\n");
    EXPECT_EQ(run({"ratio-a", "--n", "70"}).out, "6.7514\n");
    EXPECT_EQ(run({"ratio-a2", "--n", "70"}).out, "1.6960\n");
    EXPECT_EQ(run({"ratio-a", "--x", "124609", "--n", "70"}).out, "6.6283\n");
    EXPECT_EQ(run({"ratio-a2", "--x", "124608", "--n", "70"}).out, "1.6501\n");
}

TEST(Cli, ScalarCsvAndJson) {
    EXPECT_EQ(run({"--format", "csv", "phi", "--x", "30", "--n", "3"}).out, "quantity,x,n,value\nphi,30,3,8\n");
    const auto j = nlohmann::json::parse(run({"phi", "--x", "30", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j[0]["value"], 8);
    EXPECT_EQ(j[0]["quantity"], "phi");
}

TEST(Cli, Table2Csv) {
    const auto r = run({"table2", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 13u);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,n,method,computed,paper_value,abs_dev,cross_check,status");
    EXPECT_NE(r.out.find("124608,70,direct-sieve,1.6501,1.6501,"), std::string::npos);
    EXPECT_NE(r.out.find("6469693230,70,direct-sieve,NA,1.6943,NA,none,capacity-skipped"), std::string::npos);
}

TEST(Cli, Table1JsonUsesStringsForX) {
    const auto j = nlohmann::json::parse(run({"table1", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 12u);
    EXPECT_TRUE(j[11]["x"].is_string());
    EXPECT_EQ(j[11]["computed"], 6.7514);
    EXPECT_EQ(j[0]["status"], "discrepancy");
}

TEST(Cli, VerifyThe1) {
    const auto r = run({"verify", "the1", "--n-hi", "300", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("the1,verdict,300,1,300,CONFIRMED"), std::string::npos);
    EXPECT_NE(r.out.find("the1,first_failure,NA,NA,NA,none"), std::string::npos);
}

TEST(Cli, ContradictionDoesNotChangeStatus) {
    const auto r = run({"verify", "th4", "--n", "3", "--x-samples", "48,54", "--format", "csv"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("th4,point,48,6,4,fail"), std::string::npos);
    const auto t = run({"threshold", "a", "--a", "1", "--n-hi", "100", "--format", "csv"});
    EXPECT_EQ(t.status, 0);
    EXPECT_NE(t.out.find("maint33,threshold,19,19,20,discrepancy"), std::string::npos);
}

TEST(Cli, Thresholds) {
    for (auto [b, want] : {std::pair<const char*, const char*>{"2", "12"}, {"3", "23"}, {"4", "35"}}) {
        const auto r = run({"threshold", "b", "--b", b, "--format", "csv"});
        EXPECT_NE(r.out.find(std::string("maint32,threshold,") + want + "," + want + "," + want + ",match"),
                  std::string::npos)
            << b;
    }
}

TEST(Cli, EveryClaimRuns) {
    for (const char* claim : {"the1", "th3", "th4", "maint32", "maint33", "maint133", "l03", "maint31", "catalan"}) {
        const auto r = run({"verify", claim, "--n-hi", "30", "--format", "csv"});
        EXPECT_EQ(r.status, 0) << claim << ": " << r.err;
        EXPECT_NE(r.out.find(std::string(claim) + ",verdict,"), std::string::npos) << claim;
    }
}

TEST(Cli, Bounds) {
    const auto r = run({"bounds", "rosser", "--x", "10000", "--n-hi", "1000", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.find(",fails"), std::string::npos);
    const auto h = run({"bounds", "hl", "--format", "csv"});
    EXPECT_NE(h.out.find("pi2,1000000,NA,8169"), std::string::npos);
    const auto m = run({"bounds", "hl", "--x", "1000", "--n-lo", "3", "--n-hi", "10", "--format", "csv"});
    EXPECT_NE(m.out.find("hl-implies-main,point,3,"), std::string::npos);
}

TEST(Cli, Catalan) {
    EXPECT_NE(run({"catalan", "--n", "5", "--format", "csv"}).out.find("sum-form,NA,5,42"), std::string::npos);
    EXPECT_NE(run({"catalan", "--format", "csv"}).out.find("catalan,verdict,30,1,30,CONFIRMED"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({"phi", "--x", "abc", "--n", "3"}).status, 2);
    EXPECT_EQ(run({"phi", "--n", "3"}).status, 2);
    EXPECT_EQ(run({"phi", "--x", "30", "--n", "3", "--method", "magic"}).status, 2);
    EXPECT_EQ(run({"--format", "xml", "pi", "--x", "10"}).status, 2);
    EXPECT_EQ(run({"--segment-size", "100", "pi", "--x", "10"}).status, 2);
    EXPECT_EQ(run({"verify", "nonsense"}).status, 2);
    EXPECT_EQ(run({"pi", "--x", "400000000"}).status, 3);
    EXPECT_EQ(run({"catalan", "--n", "31"}).status, 3);
    EXPECT_EQ(run({"twin-residue", "--x", "49", "--n", "3"}).status, 4);
    EXPECT_EQ(run({"phi", "--x", "30", "--n", "13", "--method", "inclusion-exclusion"}).status, 4);
    EXPECT_EQ(run({"--tolerance", "0", "table1"}).status, 4);
    const auto cap = run({"pi", "--x", "400000000"});
    EXPECT_NE(cap.err.find("--sieve-limit"), std::string::npos);
    EXPECT_TRUE(cap.out.empty());
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("table2"), std::string::npos);
    EXPECT_NE(r.out.find("--sieve-limit"), std::string::npos);
}

TEST(Cli, WorkerCountDoesNotChangeOutput) {
    for (std::vector<std::string> cmd : {std::vector<std::string>{"table2", "--format", "csv"},
                                         {"verify", "l03", "--format", "json"},
                                         {"verify", "th4", "--format", "csv"}}) {
        auto one = cmd;
        one.insert(one.begin(), {"--workers", "1"});
        auto eight = cmd;
        eight.insert(eight.begin(), {"--workers", "8"});
        EXPECT_EQ(run(one).out, run(eight).out) << cmd[0];
    }
}
