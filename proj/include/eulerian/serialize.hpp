#ifndef EULERIAN_SERIALIZE_HPP
#define EULERIAN_SERIALIZE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerian/generators.hpp"
#include "eulerian/lab.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/stability.hpp"

// Output formats. Machine formats (JSON, CSV) are byte-deterministic and carry
// no timing data; coefficients and rationals are always strings.

namespace eulerian::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json, csv };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return std::nullopt;
}

/// A generated (or enumerated) polynomial with its label.
struct LabeledPolynomial {
    std::string family;
    long n;
    Polynomial poly;
};

inline Json coeffs_to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline Json to_json(const LabeledPolynomial& lp) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = lp.family;
    j["n"] = lp.n;
    j["coeffs"] = coeffs_to_json(lp.poly);
    return j;
}

inline LabeledPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("family") || !j.contains("n"))
        throw DomainError("polynomial JSON needs family, n and coeffs");
    if (j.value("schema", 0) != kSchemaVersion) throw DomainError("unsupported polynomial JSON schema");
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.push_back(parse_rational(s.get<std::string>()));
    Polynomial p(c);
    if (p.size() != c.size()) throw DomainError("polynomial JSON has trailing zero coefficients");
    return {j.at("family").get<std::string>(), j.at("n").get<long>(), std::move(p)};
}

inline LabeledPolynomial parse_polynomial_json(const std::string& text) { return polynomial_from_json(Json::parse(text)); }

inline std::string emit_polynomials(const std::vector<LabeledPolynomial>& polys, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json: {
        if (polys.size() == 1) {
            os << to_json(polys.front()).dump(2) << '\n';
        } else {
            Json a = Json::array();
            for (const auto& p : polys) a.push_back(to_json(p));
            os << a.dump(2) << '\n';
        }
        break;
    }
    case Format::csv: {
        std::size_t width = 0;
        for (const auto& p : polys) width = std::max(width, p.poly.size());
        os << "family,n,degree";
        for (std::size_t i = 0; i < width; ++i) os << ",c" << i;
        os << ",verdict\n";
        for (const auto& p : polys) {
            os << p.family << ',' << p.n << ',' << p.poly.degree();
            for (std::size_t i = 0; i < width; ++i) os << ',' << to_string(p.poly[i]);
            os << ',' << (p.poly.is_zero() ? "zero" : is_real_rooted(p.poly) ? "real_rooted" : "not_real_rooted") << '\n';
        }
        break;
    }
    case Format::text: {
        for (const auto& p : polys) {
            os << p.family << '(' << p.n << ") = " << to_string(p.poly) << '\n';
            if (p.poly.is_zero() || p.poly.is_constant()) continue;
            auto iso = isolate_real_roots(p.poly);
            bool real = iso.count_with_multiplicity() == p.poly.degree();
            os << "  real-rooted: " << (real ? "yes" : "no") << "; real roots (approx.):";
            for (const auto& r : iso.roots) {
                os << ' ' << approximate_root(r);
                if (r.multiplicity > 1) os << " (x" << r.multiplicity << ')';
            }
            os << '\n';
        }
        break;
    }
    }
    return os.str();
}

inline Json to_json(const lab::VerificationReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["check"] = r.check_id;
    j["rank_range"] = Json::array({r.rank_lo, r.rank_hi});
    j["status"] = r.passed() ? "pass" : "fail";
    j["checks"] = r.checks;
    Json f = Json::array();
    for (const auto& x : r.failures) f.push_back(Json{{"rank", x.rank}, {"description", x.description}});
    j["failures"] = f;
    j["notes"] = r.notes;
    return j;
}

inline std::string emit_text(const lab::VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.checks << " checks";
    if (!r.check_id.empty()) os << " [" << r.check_id << " n=" << r.rank_lo << ".." << r.rank_hi << ']';
    os << " in " << std::fixed;
    os.precision(3);
    os << r.elapsed.count() << "s\n";
    for (const auto& f : r.failures) os << "  FAIL n=" << f.rank << ": " << f.description << '\n';
    for (const auto& n : r.notes) os << "  note: " << n << '\n';
    return os.str();
}

inline std::string emit_reports(const std::vector<lab::VerificationReport>& reports, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json: {
        Json a = Json::array();
        for (const auto& r : reports) a.push_back(to_json(r));
        os << a.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "check,rank_lo,rank_hi,checks,failures,status\n";
        for (const auto& r : reports)
            os << r.check_id << ',' << r.rank_lo << ',' << r.rank_hi << ',' << r.checks << ',' << r.failures.size() << ','
               << (r.passed() ? "pass" : "fail") << '\n';
        break;
    case Format::text:
        if (reports.empty()) os << emit_text(lab::VerificationReport{});
        for (const auto& r : reports) os << emit_text(r);
        break;
    }
    return os.str();
}

/// A bracket together with the three pointwise probes reported alongside it.
struct BracketResult {
    lab::ThresholdBracket bracket;
    bool stable_above = false;       ///< strictly stable at conjectured + 1/1000
    bool unstable_below = false;     ///< not strictly stable at conjectured - 1/1000
    bool stable_at_boundary = false; ///< strictly stable at exactly the conjectured value

    bool consistent() const { return bracket.contains_conjectured() && stable_above && unstable_below; }
};

inline std::string emit_brackets(const std::vector<BracketResult>& results, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json: {
        Json a = Json::array();
        for (const auto& r : results) {
            const auto& b = r.bracket;
            Json j;
            j["schema"] = kSchemaVersion;
            j["n"] = b.n;
            j["lower"] = to_string(b.lower);
            j["upper"] = to_string(b.upper);
            j["conjectured"] = to_string(b.conjectured);
            j["width"] = to_string(b.width);
            j["contains_conjectured"] = b.contains_conjectured();
            j["stable_above"] = r.stable_above;
            j["unstable_below"] = r.unstable_below;
            j["stable_at_conjectured"] = r.stable_at_boundary;
            a.push_back(j);
        }
        os << a.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "n,lower,upper,conjectured,width,contains_conjectured,stable_above,unstable_below,stable_at_conjectured\n";
        for (const auto& r : results) {
            const auto& b = r.bracket;
            os << b.n << ',' << to_string(b.lower) << ',' << to_string(b.upper) << ',' << to_string(b.conjectured) << ','
               << to_string(b.width) << ',' << b.contains_conjectured() << ',' << r.stable_above << ','
               << r.unstable_below << ',' << r.stable_at_boundary << '\n';
        }
        break;
    case Format::text:
        for (const auto& r : results) {
            const auto& b = r.bracket;
            os << (r.consistent() ? "PASS" : "FAIL") << " n=" << b.n << " conjectured " << to_string(b.conjectured)
               << " bracket [" << to_string(b.lower) << ", " << to_string(b.upper) << "] width " << to_string(b.width)
               << "; strictly stable at conjectured: " << (r.stable_at_boundary ? "yes" : "no") << '\n';
        }
        break;
    }
    return os.str();
}

inline std::string emit_threshold_table(const std::vector<lab::ThresholdRow>& rows, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json: {
        Json a = Json::array();
        for (const auto& r : rows)
            a.push_back(Json{{"schema", kSchemaVersion},
                             {"n", r.n},
                             {"stability_threshold", to_string(r.stability_threshold)},
                             {"real_zero_lower", to_string(r.real_zero_lower)},
                             {"real_zero_upper", to_string(r.real_zero_upper)}});
        os << a.dump(2) << '\n';
        break;
    }
    case Format::csv:
    case Format::text:
        os << "n,stability_threshold,real_zero_lower,real_zero_upper\n";
        for (const auto& r : rows)
            os << r.n << ',' << to_string(r.stability_threshold) << ',' << to_string(r.real_zero_lower) << ','
               << to_string(r.real_zero_upper) << '\n';
        break;
    }
    return os.str();
}

inline std::string emit_zigzag(const ZigzagTable& t, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json: {
        Json j;
        j["schema"] = kSchemaVersion;
        j["n"] = static_cast<long>(t.values.size()) - 1;
        Json a = Json::array();
        for (const auto& v : t.values) a.push_back(to_string(v));
        j["zigzag"] = a;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << "E_" << i;
        os << '\n';
        for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << to_string(t.values[i]);
        os << '\n';
        break;
    case Format::text:
        for (std::size_t i = 0; i < t.values.size(); ++i) os << "E_" << i << " = " << to_string(t.values[i]) << '\n';
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial cache
// ---------------------------------------------------------------------------

inline constexpr const char* kCacheEnvVar = "EULERIAN_CACHE_DIR";

/// One JSON file per (family, rank). Writes go to a temporary file in the
/// same directory followed by a rename, so readers never see partial files.
class PolynomialCache {
public:
    explicit PolynomialCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

    std::filesystem::path path_for(const FamilyId& id) const {
        return dir_ / (std::string(family_name(id.tag)) + "-" + std::to_string(id.rank) + ".json");
    }

    std::optional<Polynomial> load(const FamilyId& id) const {
        std::ifstream in(path_for(id));
        if (!in) return std::nullopt;
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            auto lp = parse_polynomial_json(ss.str());
            if (lp.family != family_name(id.tag) || lp.n != id.rank) return std::nullopt;
            return lp.poly;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const FamilyId& id, const Polynomial& p) const {
        auto target = path_for(id);
        std::random_device rd;
        auto tmp = target;
        tmp += ".tmp." + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << to_json(LabeledPolynomial{std::string(family_name(id.tag)), id.rank, p}).dump() << '\n';
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace eulerian::io

#endif
