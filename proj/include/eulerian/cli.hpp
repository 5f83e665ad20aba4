#ifndef EULERIAN_CLI_HPP
#define EULERIAN_CLI_HPP

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulerian/generators.hpp"
#include "eulerian/lab.hpp"
#include "eulerian/oracle.hpp"
#include "eulerian/serialize.hpp"

// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage or domain error.

namespace eulerian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RankRange {
    long lo;
    long hi;
};

namespace detail {

/// --n N alone, or --n-min/--n-max; --n wins when given.
inline RankRange resolve_range(std::optional<long> n, std::optional<long> n_min, std::optional<long> n_max,
                               long default_lo) {
    if (n) return {*n, *n};
    if (!n_max) throw DomainError("give --n or --n-max");
    RankRange r{n_min.value_or(default_lo), *n_max};
    if (r.lo > r.hi) throw DomainError("empty rank range");
    return r;
}

template <class Fn>
auto map_ranks_in_parallel(RankRange r, Fn fn) {
    using Result = decltype(fn(r.lo));
    std::vector<std::future<Result>> futures;
    for (long n = r.lo; n <= r.hi; ++n) futures.push_back(std::async(std::launch::async, fn, n));
    std::vector<Result> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

inline io::Format format_or_throw(const std::string& s) {
    auto f = io::parse_format(s);
    if (!f) throw DomainError("unknown format '" + s + "'");
    return *f;
}

/// Five rationals per rank from a fixed seed, so reports are reproducible.
inline std::vector<Rational> sample_ks(long n) {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(n));
    std::uniform_int_distribution<long> num(-60, 60), den(1, 17);
    std::vector<Rational> ks;
    for (int i = 0; i < 5; ++i) ks.push_back(make_rational(num(rng), den(rng)));
    return ks;
}

struct GenOptions {
    std::string family;
    std::optional<long> n, n_min, n_max;
    std::string format = "text";
    std::string cache_dir;
};

inline int run_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    auto fam = parse_family(o.family);
    if (!fam) throw DomainError("unknown family '" + o.family + "'");
    RankRange r = resolve_range(o.n, o.n_min, o.n_max, min_rank(*fam));
    io::Format fmt = format_or_throw(o.format);

    std::string cache_dir = o.cache_dir;
    if (cache_dir.empty())
        if (const char* env = std::getenv(io::kCacheEnvVar)) cache_dir = env;
    std::optional<io::PolynomialCache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);

    std::vector<io::LabeledPolynomial> polys;
    std::vector<std::size_t> from_cache;
    for (long n = r.lo; n <= r.hi; ++n) {
        FamilyId id(*fam, n);
        std::optional<Polynomial> p;
        if (cache) p = cache->load(id);
        if (p) {
            from_cache.push_back(polys.size());
        } else {
            p = generate(id);
            if (cache) cache->store(id, *p);
        }
        polys.push_back({std::string(family_name(*fam)), n, std::move(*p)});
    }
    if (!from_cache.empty()) {
        std::random_device rd;
        std::size_t pick = from_cache[std::uniform_int_distribution<std::size_t>(0, from_cache.size() - 1)(rd)];
        FamilyId id(*fam, polys[pick].n);
        Polynomial fresh = generate(id);
        if (fresh != polys[pick].poly) {
            err << "warning: cache entry " << cache->path_for(id).string() << " was stale; rewritten\n";
            cache->store(id, fresh);
            polys[pick].poly = std::move(fresh);
        }
    }
    out << io::emit_polynomials(polys, fmt);
    return kExitOk;
}

struct OracleOptions {
    std::string group = "B";
    std::string stat = "des";
    std::string filter = "all";
    long n = 0;
    std::uint64_t budget = oracle::kDefaultBudget;
    std::string format = "text";
};

inline int run_oracle(const OracleOptions& o, std::ostream& out) {
    using namespace oracle;
    Group g;
    if (o.group == "A") g = Group::A;
    else if (o.group == "B") g = Group::B;
    else if (o.group == "D") g = Group::D;
    else throw DomainError("unknown group '" + o.group + "'");
    Statistic s;
    if (o.stat == "des") s = Statistic::des;
    else if (o.stat == "affdes") s = Statistic::affdes;
    else if (o.stat == "des_d") s = Statistic::des_d;
    else throw DomainError("unknown statistic '" + o.stat + "'");
    Filter f;
    if (o.filter == "all") f = Filter::all;
    else if (o.filter == "last_positive") f = Filter::last_positive;
    else if (o.filter == "last_negative") f = Filter::last_negative;
    else throw DomainError("unknown filter '" + o.filter + "'");
    io::Format fmt = format_or_throw(o.format);
    Polynomial p = distribution(g, s, static_cast<int>(o.n), f, o.budget);
    std::string label = "oracle:" + o.group + ":" + o.stat + ":" + o.filter;
    out << io::emit_polynomials({{label, o.n, std::move(p)}}, fmt);
    return kExitOk;
}

struct VerifyOptions {
    std::string check = "all";
    std::optional<long> n, n_min, n_max;
    std::string format = "text";
};

inline std::vector<lab::VerificationReport> run_checks(const std::string& check, std::optional<long> n,
                                                       std::optional<long> n_min, std::optional<long> n_max) {
    std::vector<lab::VerificationReport> reports;
    auto add_all = [&](std::vector<lab::VerificationReport> rs) {
        for (auto& r : rs) reports.push_back(std::move(r));
    };
    bool all = check == "all";
    bool known = all;
    if (all || check == "identities") {
        known = true;
        RankRange r = resolve_range(n, n_min, n_max, 2);
        reports.push_back(lab::verify_identities(r.hi));
    }
    if (all || check == "main") {
        known = true;
        add_all(map_ranks_in_parallel(resolve_range(n, n_min, n_max, 2), [](long k) { return lab::verify_main_theorem(k); }));
    }
    if (all || check == "hyatt") {
        known = true;
        add_all(map_ranks_in_parallel(resolve_range(n, n_min, n_max, 1), [](long k) { return lab::verify_hyatt(k); }));
    }
    if (all || check == "stability") {
        known = true;
        add_all(map_ranks_in_parallel(resolve_range(n, n_min, n_max, 2), [](long k) {
            return lab::verify_stability_theorem(k, lab::half_step_grid(k, 5));
        }));
    }
    if (all || check == "symbol") {
        known = true;
        add_all(map_ranks_in_parallel(resolve_range(n, n_min, n_max, 1), [](long k) {
            lab::VerificationReport rep{"operator-symbol", k, k};
            for (const auto& kk : sample_ks(k)) rep.absorb(lab::operator_symbol_check(k, kk));
            return rep;
        }));
    }
    if (!known) throw DomainError("unknown check '" + check + "'");
    return reports;
}

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
    io::Format fmt = format_or_throw(o.format);
    auto reports = run_checks(o.check, o.n, o.n_min, o.n_max);
    out << io::emit_reports(reports, fmt);
    for (const auto& r : reports)
        if (!r.passed()) return kExitCheckFailed;
    return kExitOk;
}

struct ScanOptions {
    std::string conjecture = "stable";
    std::optional<long> n, n_min, n_max;
    std::string width = "1/1000000";
    std::vector<std::string> ks;
    std::string format = "text";
};

inline io::BracketResult bracket_with_probes(long n, const Rational& width) {
    io::BracketResult r{lab::critical_k(n, width)};
    const Rational& c = r.bracket.conjectured;
    r.stable_above = lab::strictly_stable_at(n, c + Rational(1, 1000));
    r.unstable_below = !lab::strictly_stable_at(n, c - Rational(1, 1000));
    r.stable_at_boundary = lab::strictly_stable_at(n, c);
    return r;
}

inline int run_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
    io::Format fmt = format_or_throw(o.format);
    if (o.conjecture == "stable") {
        RankRange r = resolve_range(o.n, o.n_min, o.n_max, 3);
        if (r.lo < 3) throw DomainError("stability threshold scan needs n >= 3");
        Rational width = parse_rational(o.width);
        if (sgn(width) <= 0) throw DomainError("--width must be positive");
        std::vector<io::BracketResult> results;
        try {
            results = map_ranks_in_parallel(r, [&](long n) { return bracket_with_probes(n, width); });
        } catch (const ConjectureViolation& e) {
            out << "FAIL " << e.what() << '\n';
            return kExitCheckFailed;
        }
        out << io::emit_brackets(results, fmt);
        for (const auto& b : results)
            if (!b.consistent()) return kExitCheckFailed;
        return kExitOk;
    }
    if (o.conjecture == "real-zero") {
        RankRange r = resolve_range(o.n, o.n_min, o.n_max, 4);
        if (r.lo < 4) throw DomainError("real-zero scan needs n >= 4");
        std::vector<Rational> ks;
        for (const auto& s : o.ks) ks.push_back(parse_rational(s));
        auto reports = map_ranks_in_parallel(r, [&](long n) {
            return lab::real_zero_scan(n, ks.empty() ? lab::real_zero_sample_grid(n) : ks);
        });
        out << io::emit_reports(reports, fmt);
        for (const auto& rep : reports)
            if (!rep.passed()) return kExitCheckFailed;
        return kExitOk;
    }
    if (o.conjecture == "table") {
        RankRange r = resolve_range(o.n, o.n_min, o.n_max, 4);
        out << io::emit_threshold_table(lab::threshold_table(r.lo, r.hi), fmt);
        return kExitOk;
    }
    (void)err;
    throw DomainError("unknown conjecture '" + o.conjecture + "' (stable, real-zero, table)");
}

} // namespace detail

/// Parses argv (argv[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Eulerian polynomials: generation, brute-force oracles, exact stability checks"};
    app.require_subcommand(1);

    detail::GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a polynomial family");
    gen_cmd->add_option("--family", gen.family, "A, B, D, AffineB, BPlus, BMinus, DPlus, DMinus")->required();
    gen_cmd->add_option("--n", gen.n, "rank (Coxeter index for A)");
    gen_cmd->add_option("--n-min", gen.n_min);
    gen_cmd->add_option("--n-max", gen.n_max);
    gen_cmd->add_option("--format", gen.format, "text, json or csv");
    gen_cmd->add_option("--cache-dir", gen.cache_dir, std::string("polynomial cache directory (default $") + io::kCacheEnvVar + ")");

    detail::OracleOptions orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force descent distribution");
    oracle_cmd->add_option("--group", orc.group, "A, B or D");
    oracle_cmd->add_option("--stat", orc.stat, "des, affdes or des_d");
    oracle_cmd->add_option("--filter", orc.filter, "all, last_positive or last_negative");
    oracle_cmd->add_option("--n", orc.n, "rank (letters for A)")->required();
    oracle_cmd->add_option("--budget", orc.budget, "maximum number of enumerated elements");
    oracle_cmd->add_option("--format", orc.format);

    detail::VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "run identity and theorem checks");
    verify_cmd->add_option("--check", ver.check, "identities, main, hyatt, stability, symbol or all");
    verify_cmd->add_option("--n", ver.n);
    verify_cmd->add_option("--n-min", ver.n_min);
    verify_cmd->add_option("--n-max", ver.n_max);
    verify_cmd->add_option("--format", ver.format);

    detail::ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "bracket the conjectured stability and real-zero thresholds");
    scan_cmd->add_option("--conjecture", scan.conjecture, "stable, real-zero or table");
    scan_cmd->add_option("--n", scan.n);
    scan_cmd->add_option("--n-min", scan.n_min);
    scan_cmd->add_option("--n-max", scan.n_max);
    scan_cmd->add_option("--width", scan.width, "bracket width target, as p/q");
    scan_cmd->add_option("--k", scan.ks, "explicit k values for the real-zero scan");
    scan_cmd->add_option("--format", scan.format);

    long zig_n = 0;
    std::string zig_format = "text";
    auto* zig_cmd = app.add_subcommand("zigzag", "Euler zigzag numbers E_0..E_n");
    zig_cmd->add_option("--n", zig_n)->required();
    zig_cmd->add_option("--format", zig_format);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("eulerian-cli");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return detail::run_gen(gen, out, err);
        if (*oracle_cmd) return detail::run_oracle(orc, out);
        if (*verify_cmd) return detail::run_verify(ver, out);
        if (*scan_cmd) return detail::run_scan(scan, out, err);
        if (*zig_cmd) {
            out << io::emit_zigzag(zigzag(zig_n), detail::format_or_throw(zig_format));
            return kExitOk;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace eulerian::cli

#endif
