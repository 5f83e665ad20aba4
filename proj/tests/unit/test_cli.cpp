#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerian/cli.hpp"

using namespace eulerian;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "eulerian-cli");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("eulerian-test-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST(Cli, GenJsonForD4) {
    auto r = run_cli({"gen", "--family", "D", "--n", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lp = io::parse_polynomial_json(r.out);
    EXPECT_EQ(lp.family, "D");
    EXPECT_EQ(lp.n, 4);
    // B_4 - 4 * 8 * x * A_2
    EXPECT_EQ(lp.poly, eulerian_b(4) - (Rational(32) * eulerian_a(2)).shifted_up(1));
    EXPECT_EQ(lp.poly, (Polynomial{1, 44, 102, 44, 1}));
    EXPECT_NE(r.out.find("\"schema\": 1"), std::string::npos);
}

TEST(Cli, EmitB2Json) {
    auto s = io::emit_polynomials({{"B", 2, eulerian_b(2)}}, io::Format::json);
    EXPECT_NE(s.find("\"coeffs\": [\n    \"1\",\n    \"6\",\n    \"1\"\n  ]"), std::string::npos) << s;
}

TEST(Cli, ZigzagCsv) {
    auto r = run_cli({"zigzag", "--n", "5", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "E_0,E_1,E_2,E_3,E_4,E_5\n1,1,1,2,5,16\n");
}

TEST(Cli, EmptyReportText) {
    auto s = io::emit_reports({}, io::Format::text);
    EXPECT_EQ(s.rfind("PASS 0 checks", 0), 0u) << s;
}

TEST(Cli, VerifyIdentitiesExitZero) {
    auto r = run_cli({"verify", "--check", "identities", "--n-max", "15"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifyAllSmall) {
    auto r = run_cli({"verify", "--check", "all", "--n-max", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = io::Json::parse(r.out);
    EXPECT_GE(j.size(), 5u);
    for (const auto& rep : j) EXPECT_EQ(rep["status"], "pass");
}

TEST(Cli, ScanStableCubic) {
    auto r = run_cli({"scan", "--conjecture", "stable", "--n", "3", "--width", "1/1000000", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    auto j = io::Json::parse(r.out);
    EXPECT_EQ(j[0]["conjectured"], "-4");
    EXPECT_EQ(j[0]["contains_conjectured"], true);
}

TEST(Cli, ScanRealZeroAndTable) {
    auto r = run_cli({"scan", "--conjecture", "real-zero", "--n", "4", "--k", "-20", "--k", "-1", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out, "check,rank_lo,rank_hi,checks,failures,status\nreal-zero,4,4,2,0,pass\n");
    auto t = run_cli({"scan", "--conjecture", "table", "--n-min", "4", "--n-max", "5", "--format", "csv"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "n,stability_threshold,real_zero_lower,real_zero_upper\n4,-5,-12,-8\n5,-32/5,-20,-8\n");
}

TEST(Cli, OracleMatchesGenerator) {
    auto r = run_cli({"oracle", "--group", "B", "--stat", "des", "--n", "2", "--filter", "last_positive", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::parse_polynomial_json(r.out).poly, (Polynomial{1, 3}));
}

TEST(Cli, UsageAndDomainErrors) {
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"gen", "--family", "D", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"gen", "--family", "E8", "--n", "3"}).code, 2);
    EXPECT_EQ(run_cli({"gen", "--family", "B", "--n", "3", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run_cli({"oracle", "--group", "B", "--n", "9", "--budget", "1000"}).code, 2);
    EXPECT_EQ(run_cli({"scan", "--conjecture", "stable", "--n", "2"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--check", "nonsense", "--n-max", "3"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, DeterministicBytes) {
    std::vector<std::string> argv{"gen", "--family", "AffineB", "--n-min", "1", "--n-max", "12", "--format", "csv"};
    EXPECT_EQ(run_cli(argv).out, run_cli(argv).out);
    std::vector<std::string> v{"verify", "--check", "hyatt", "--n-max", "6", "--format", "json"};
    EXPECT_EQ(run_cli(v).out, run_cli(v).out);
}

TEST(Cli, CacheRoundTrip) {
    auto dir = fresh_dir("cache");
    std::vector<std::string> argv{"gen", "--family", "DPlus", "--n-min", "2", "--n-max", "9", "--format", "json",
                                  "--cache-dir", dir.string()};
    auto first = run_cli(argv);
    ASSERT_EQ(first.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "DPlus-5.json"));
    auto second = run_cli(argv);
    EXPECT_EQ(first.out, second.out);
    for (const auto& e : std::filesystem::directory_iterator(dir))
        EXPECT_EQ(e.path().string().find(".tmp."), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cli, StaleCacheEntryIsRepaired) {
    auto dir = fresh_dir("stale");
    io::PolynomialCache cache(dir);
    cache.store(FamilyId(Family::B, 3), Polynomial{1, 2, 3});
    auto r = run_cli({"gen", "--family", "B", "--n", "3", "--format", "json", "--cache-dir", dir.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(io::parse_polynomial_json(r.out).poly, eulerian_b(3));
    EXPECT_EQ(cache.load(FamilyId(Family::B, 3)), eulerian_b(3));
    std::filesystem::remove_all(dir);
}

TEST(Serialization, JsonRoundTripEveryFamily) {
    for (Family f : kAllFamilies) {
        for (long n = min_rank(f); n <= 20; ++n) {
            Polynomial p = generate(FamilyId(f, n));
            auto text = io::emit_polynomials({{std::string(family_name(f)), n, p}}, io::Format::json);
            auto back = io::parse_polynomial_json(text);
            EXPECT_EQ(back.poly, p);
            EXPECT_EQ(back.n, n);
        }
    }
}

TEST(Serialization, RejectsMalformedJson) {
    EXPECT_THROW(io::parse_polynomial_json(R"({"schema":2,"family":"B","n":1,"coeffs":["1","1"]})"), DomainError);
    EXPECT_THROW(io::parse_polynomial_json(R"({"schema":1,"family":"B","n":1,"coeffs":["1","0"]})"), DomainError);
    EXPECT_THROW(io::parse_polynomial_json(R"({"schema":1,"coeffs":["1"]})"), DomainError);
}

TEST(Serialization, TextShowsApproximateRoots) {
    auto s = io::emit_polynomials({{"A", 2, eulerian_a(2)}}, io::Format::text);
    EXPECT_NE(s.find("A(2) = 1 + 4*x + x^2"), std::string::npos);
    EXPECT_NE(s.find("-3.7320508075688772935"), std::string::npos) << s;
    EXPECT_NE(s.find("-2.6794919243112270647e-1"), std::string::npos) << s;
}
