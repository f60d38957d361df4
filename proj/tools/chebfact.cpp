#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebfact/chebyshev.hpp"
#include "chebfact/errors.hpp"
#include "chebfact/factorize.hpp"
#include "chebfact/identities.hpp"
#include "chebfact/psi.hpp"
#include "chebfact/psi_cache.hpp"
#include "chebfact/render.hpp"

namespace {

using namespace chebfact;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCache = 3;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

std::string render_poly(const IntPoly& p, OutputFormat format) {
    return format == OutputFormat::Latex ? to_latex(p) : to_plain(p);
}

ordered_json coeff_array(const std::vector<std::string>& strings) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : strings) arr.push_back(s);
    return arr;
}

void emit_json(const ordered_json& doc) {
    std::cout << doc.dump() << "\n";
}

// ---- gen ----------------------------------------------------------------

int cmd_gen(const std::string& kind_name_arg, int n, OutputFormat format) {
    const auto kind = parse_kind(kind_name_arg);
    if (!kind) return usage_error("unknown kind \"" + kind_name_arg + "\"");
    if (n < 0) return usage_error("n must be >= 0");

    if (*kind == ChebKind::Xbar || *kind == ChebKind::Ybar) {
        const RatPoly p = gen_G({n, *kind == ChebKind::Xbar ? 3 : 5});
        if (format == OutputFormat::Json) {
            ordered_json doc;
            doc["kind"] = kind_name_arg;
            doc["n"] = n;
            doc["coeffs"] = coeff_array(coeff_strings(p));
            emit_json(doc);
        } else {
            std::cout << (format == OutputFormat::Latex ? to_latex(p) : to_plain(p)) << "\n";
        }
        return kExitOk;
    }

    const IntPoly p = gen_int(*kind, n);
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["kind"] = kind_name_arg;
        doc["n"] = n;
        doc["coeffs"] = coeff_array(coeff_strings(p));
        emit_json(doc);
    } else {
        std::cout << render_poly(p, format) << "\n";
    }
    return kExitOk;
}

// ---- psi ----------------------------------------------------------------

int cmd_psi(long long d, OutputFormat format) {
    if (d < 1) return usage_error("d must be >= 1");
    const PsiPoly p = psi(d);
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["d"] = d;
        doc["coeffs"] = coeff_array(coeff_strings(p.poly));
        emit_json(doc);
    } else {
        std::cout << render_poly(p.poly, format) << "\n";
    }
    return kExitOk;
}

// ---- factor -------------------------------------------------------------

std::string source_name(DivisorSource s) {
    return s == DivisorSource::Of2n ? "2n" : "2n+2";
}

int cmd_factor(const std::string& kind_arg, int n, const std::string& variant_arg,
               OutputFormat format) {
    if (kind_arg != "V" && kind_arg != "W")
        return usage_error("factor kind must be V or W");
    const auto variant = parse_variant(variant_arg);
    if (!variant) return usage_error("variant must be plus, minus, or square");
    if (n < 1) return usage_error("n must be >= 1");

    const VwKind kind = kind_arg == "V" ? VwKind::V : VwKind::W;
    const Factorization f =
        *variant == Variant::SquaredMinusOne
            ? factor_squared_minus_one(kind, n)
            : factor_variant(kind, n, *variant == Variant::PlusOne ? +1 : -1);
    const VerifyReport report = verify(f);
    const IntPoly expected = target_poly(f.target);

    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["kind"] = kind_arg;
        doc["n"] = n;
        doc["variant"] = variant_arg;
        ordered_json factors = ordered_json::array();
        for (const PsiFactor& factor : f.factors) {
            ordered_json item;
            item["d"] = factor.term.d;
            item["source"] = source_name(factor.term.source);
            item["quotient"] = factor.term.quotient;
            item["parity"] = factor.term.parity == Parity::Even ? "even" : "odd";
            item["coeffs"] = coeff_array(coeff_strings(factor.psi.poly));
            factors.push_back(std::move(item));
        }
        doc["factors"] = std::move(factors);
        doc["expanded"] = coeff_array(coeff_strings(f.expanded));
        doc["verified"] = report.all_pass();
        if (!report.all_pass()) {
            ordered_json checks = ordered_json::array();
            for (const VerifyCheck& c : report.checks) {
                ordered_json item;
                item["name"] = c.name;
                item["pass"] = c.pass;
                if (!c.detail.empty()) item["detail"] = c.detail;
                checks.push_back(std::move(item));
            }
            doc["checks"] = std::move(checks);
        }
        emit_json(doc);
        return report.all_pass() ? kExitOk : kExitVerifyFailed;
    }

    const bool latex = format == OutputFormat::Latex;
    std::string product_line = target_label(f.target, format) + " = ";
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i > 0) product_line += latex ? " " : " * ";
        product_line += psi_label(f.factors[i].term.d, format);
    }
    if (f.factors.empty()) product_line += "1";
    std::cout << product_line << "\n";
    for (const PsiFactor& factor : f.factors)
        std::cout << psi_label(factor.term.d, format) << " = "
                  << render_poly(factor.psi.poly, format) << "\n";
    std::cout << "expanded = " << render_poly(f.expanded, format) << "\n";

    if (report.all_pass()) {
        std::cout << "verified: exact\n";
        return kExitOk;
    }
    std::cout << "verified: FAILED\n";
    for (const VerifyCheck& c : report.checks)
        if (!c.pass)
            std::cout << "failed check: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                      << "\n";
    std::cout << "expected = " << render_poly(expected, format) << "\n";
    std::cout << "actual   = " << render_poly(f.expanded, format) << "\n";
    return kExitVerifyFailed;
}

// ---- scan ---------------------------------------------------------------

int cmd_scan(const std::string& kind_arg, int n_min, int n_max, const std::string& variant_arg,
             OutputFormat format) {
    const auto kind = parse_kind(kind_arg);
    if (!kind || *kind == ChebKind::Xbar || *kind == ChebKind::Ybar)
        return usage_error("scan kind must be one of U, V, W, X, Y");
    const auto variant = parse_variant(variant_arg);
    if (!variant) return usage_error("variant must be plus, minus, or square");
    if (n_min < 0) return usage_error("n_min must be >= 0");
    if (n_max < n_min) return usage_error("n_max must be >= n_min");

    ordered_json rows = ordered_json::array();
    for (int n = n_min; n <= n_max; ++n) {
        const IntPoly base = gen_int(*kind, n);
        const IntPoly one = IntPoly::constant(1);
        IntPoly p;
        switch (*variant) {
            case Variant::PlusOne: p = base + one; break;
            case Variant::MinusOne: p = base - one; break;
            case Variant::SquaredMinusOne: p = base * base - one; break;
        }

        if (p.is_zero()) {
            if (format == OutputFormat::Json) {
                ordered_json row;
                row["n"] = n;
                row["zero"] = true;
                rows.push_back(std::move(row));
            } else {
                std::cout << "n=" << n << ": zero polynomial\n";
            }
            continue;
        }

        const std::vector<PsiPoly> found = psi_divisor_scan(p);
        const bool complete = psi_product(found) == p;
        if (format == OutputFormat::Json) {
            ordered_json row;
            row["n"] = n;
            ordered_json ds = ordered_json::array();
            for (const PsiPoly& f : found) ds.push_back(f.d);
            row["divisors"] = std::move(ds);
            row["complete"] = complete;
            rows.push_back(std::move(row));
        } else {
            std::string line = "n=" + std::to_string(n) + ": divisors:";
            if (found.empty()) {
                line += " none";
            } else {
                for (const PsiPoly& f : found) line += " " + psi_label(f.d, format);
            }
            line += "; complete: ";
            line += complete ? "yes" : "no";
            std::cout << line << "\n";
        }
    }

    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["kind"] = kind_arg;
        doc["variant"] = variant_arg;
        doc["n_min"] = n_min;
        doc["n_max"] = n_max;
        doc["rows"] = std::move(rows);
        emit_json(doc);
    }
    return kExitOk;
}

// ---- verify-identities ----------------------------------------------------

int cmd_verify_identities(int n_max, OutputFormat format) {
    if (n_max < 1) return usage_error("n_max must be >= 1");
    const auto results = run_identity_suites({n_max, n_max, n_max, n_max});
    const bool all_pass =
        std::all_of(results.begin(), results.end(), [](const FamilyResult& r) { return r.pass; });

    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["n_max"] = n_max;
        ordered_json families = ordered_json::array();
        for (const FamilyResult& r : results) {
            ordered_json item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            if (r.pass) item["first_failure"] = nullptr;
            else item["first_failure"] = r.first_failure;
            if (!r.detail.empty()) item["detail"] = r.detail;
            families.push_back(std::move(item));
        }
        doc["families"] = std::move(families);
        doc["all_pass"] = all_pass;
        emit_json(doc);
    } else {
        const bool latex = format == OutputFormat::Latex;
        for (const FamilyResult& r : results) {
            std::string name = latex ? "\\textbf{" + r.name + "}" : r.name;
            std::string line = name + " (n <= " + std::to_string(r.n_max) + "): ";
            if (r.pass) line += "pass";
            else
                line += "FAIL at n=" + std::to_string(r.first_failure) +
                        (r.detail.empty() ? "" : " (" + r.detail + ")");
            if (latex) line += " \\\\";
            std::cout << line << "\n";
        }
        std::cout << (latex ? "\\textbf{all}: " : "all: ") << (all_pass ? "pass" : "FAIL")
                  << (latex ? " \\\\" : "") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebyshev variants, their cos(2*pi/d) minimal-polynomial factors, "
                 "and divisor scans"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_arg = "plain";
    std::string cache_path;
    app.add_option("--format", format_arg, "output format: plain, json, latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}));
    app.add_option("--cache", cache_path, "psi cache file to read and update");

    std::string gen_kind;
    int gen_n = 0;
    auto* gen = app.add_subcommand("gen", "print one polynomial of a family");
    gen->add_option("kind", gen_kind, "U, V, W, X, Y, Xbar, or Ybar")->required();
    gen->add_option("n", gen_n, "index, n >= 0")->required();

    long long psi_d = 0;
    auto* psi_cmd = app.add_subcommand("psi", "print the scaled minimal polynomial of cos(2*pi/d)");
    psi_cmd->add_option("d", psi_d, "index, d >= 1")->required();

    std::string factor_kind, factor_variant_arg;
    int factor_n = 0;
    auto* factor = app.add_subcommand("factor", "factor V_n or W_n variants into Psi polynomials");
    factor->add_option("kind", factor_kind, "V or W")->required();
    factor->add_option("n", factor_n, "index, n >= 1")->required();
    factor->add_option("variant", factor_variant_arg, "plus, minus, or square")->required();

    std::string scan_kind, scan_variant_arg;
    int scan_min = 0, scan_max = 0;
    auto* scan = app.add_subcommand("scan", "search variants for exact Psi divisors");
    scan->add_option("kind", scan_kind, "U, V, W, X, or Y")->required();
    scan->add_option("n_min", scan_min, "first index, >= 0")->required();
    scan->add_option("n_max", scan_max, "last index, >= n_min")->required();
    scan->add_option("variant", scan_variant_arg, "plus, minus, or square")->required();

    int verify_n_max = 0;
    auto* verify_cmd =
        app.add_subcommand("verify-identities", "run the exact identity sweeps up to n_max");
    verify_cmd->add_option("n_max", verify_n_max, "sweep bound, >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    const OutputFormat format = *parse_format(format_arg);

    std::map<long long, IntPoly> loaded;
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        try {
            loaded = load_psi_cache(cache_path);
            for (const auto& [d, poly] : loaded) psi_preload(d, poly);
        } catch (const std::exception& e) {
            std::cerr << "cache error: " << e.what() << "\n";
            return kExitCache;
        }
    }

    int rc = kExitUsage;
    try {
        if (gen->parsed()) rc = cmd_gen(gen_kind, gen_n, format);
        else if (psi_cmd->parsed()) rc = cmd_psi(psi_d, format);
        else if (factor->parsed()) rc = cmd_factor(factor_kind, factor_n, factor_variant_arg, format);
        else if (scan->parsed()) rc = cmd_scan(scan_kind, scan_min, scan_max, scan_variant_arg, format);
        else if (verify_cmd->parsed()) rc = cmd_verify_identities(verify_n_max, format);
    } catch (const PreconditionViolation& e) {
        return usage_error(e.what());
    }

    if (!cache_path.empty() && rc == kExitOk) {
        const auto snapshot = psi_snapshot();
        if (snapshot != loaded) {
            try {
                save_psi_cache(cache_path, snapshot);
            } catch (const PsiCacheError& e) {
                std::cerr << "cache error: " << e.what() << "\n";
                return kExitCache;
            }
        }
    }
    return rc;
}
