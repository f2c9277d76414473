// Command-line surface: expansion queries, table generation, and the
// verification report runner.
#include <CLI11.hpp>

#include <iostream>

#include "kschur/cache.hpp"
#include "kschur/classical.hpp"
#include "kschur/json_io.hpp"
#include "kschur/kschur.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/tables.hpp"
#include "kschur/verify.hpp"
#include "kschur/version.hpp"

namespace {

using namespace kschur;

constexpr basis_tag schur_tag{basis::schur, 0};

// exit codes: 0 ok, 1 theorem failure in verify, 2 domain error, 3 bad input
constexpr int exit_domain_error = 2;
constexpr int exit_bad_input = 3;

struct cli_options {
    std::string format = "json";
    std::string cache_path_flag; // --cache overrides the env/default path
    bool no_cache = false;
};

std::optional<std::string> resolve_cache_path(const cli_options& opts) {
    if (opts.no_cache) return std::nullopt;
    if (!opts.cache_path_flag.empty()) return opts.cache_path_flag;
    return default_cache_path();
}

void load_cache_if_any(const cli_options& opts) {
    auto path = resolve_cache_path(opts);
    if (!path) return;
    if (auto warning = load_cache(*path)) std::cerr << "warning: " << *warning << '\n';
}

void save_cache_if_any(const cli_options& opts) {
    auto path = resolve_cache_path(opts);
    if (path) save_cache(*path);
}

json with_meta(json doc) {
    json out;
    out["tool"] = "kschur";
    out["version"] = version_string;
    for (auto it = doc.begin(); it != doc.end(); ++it) out[it.key()] = std::move(it.value());
    return out;
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

struct expand_args {
    std::string object;
    std::string index;
    std::string target = "schur";
    int k = 0;
    int target_k = 0;
    bool t1 = false;
};

basis parse_target_basis(const std::string& name) {
    std::string upper;
    for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return basis_from_name(upper);
}

// Conversion router over the full basis set for Laurent expansions given in
// SCHUR form.
expansion<laurent_t> route_laurent(const expansion<laurent_t>& f, basis target, int target_k) {
    switch (target) {
        case basis::schur: return f;
        case basis::monomial:
        case basis::elementary:
        case basis::homogeneous: return to_basis_classical(f, target);
        case basis::power:
            throw unsupported_ring("P-basis output needs RAT_QT; use --object with a qt ring");
        case basis::hall_littlewood: {
            // triangular solve against Hall-Littlewood rows
            expansion<laurent_t> residual = f;
            expansion<laurent_t> out(basis_tag{basis::hall_littlewood, 0});
            for (int d : f.degrees())
                for (const auto& mu : partitions_of(d)) {
                    laurent_t c = residual.coeff(mu);
                    if (c == laurent_t(0)) continue;
                    out.add_term(mu, c);
                    auto row = hall_littlewood(mu);
                    for (const auto& [nu, rc] : row->terms()) residual.add_term(nu, -(c * rc));
                }
            if (!residual.is_zero()) throw not_in_subspace("not a Hall-Littlewood combination");
            return out;
        }
        case basis::k_split: return to_g_basis(target_k, f);
        case basis::k_schur: return to_kschur_basis(target_k, f);
        default: throw unsupported_conversion("unsupported target basis");
    }
}

int cmd_expand(const expand_args& args, const cli_options& opts) {
    basis target = parse_target_basis(args.target);
    int target_k = args.target_k ? args.target_k : args.k;
    if (is_k_indexed(target) && target_k <= 0)
        throw invalid_input("target basis needs --k (or --target-k)");

    json doc;
    if (args.object == "macdonald-j") {
        partition lam = partition::parse(args.index);
        expansion<rat_qt> j = *macdonald_j(lam);
        if (target != basis::schur)
            throw unsupported_conversion("macdonald-j output is Schur-basis only");
        doc = expansion_to_json(j);
    } else if (args.object == "macdonald-h") {
        partition lam = partition::parse(args.index);
        if (target == basis::k_schur) {
            auto kostka = kschur_qt_kostka(target_k, lam);
            expansion<poly_qt> out(basis_tag{basis::k_schur, target_k});
            for (const auto& [mu, c] : kostka) out.add_term(mu, c);
            doc = expansion_to_json(out);
        } else if (target == basis::schur) {
            doc = expansion_to_json(macdonald_h(lam));
        } else {
            throw unsupported_conversion("macdonald-h supports schur or kschur targets");
        }
    } else {
        expansion<laurent_t> f(schur_tag);
        if (args.object == "kschur") {
            if (args.k <= 0) throw invalid_input("kschur needs --k");
            f = *k_schur(args.k, partition::parse(args.index));
        } else if (args.object == "ksplit") {
            if (args.k <= 0) throw invalid_input("ksplit needs --k");
            f = *k_split_poly(args.k, partition::parse(args.index));
        } else if (args.object == "hall") {
            f = *hall_littlewood(partition::parse(args.index));
        } else if (args.object == "hs") {
            f = *h_s(parse_sequence(args.index));
        } else {
            throw invalid_input("unknown object '" + args.object + "'");
        }
        expansion<laurent_t> converted = route_laurent(f, target, target_k);
        if (args.t1) {
            doc = expansion_to_json(specialize_t1(converted));
        } else {
            doc = expansion_to_json(converted);
        }
    }

    if (opts.format == "json") {
        std::cout << with_meta(doc).dump(2) << '\n';
    } else {
        // text and csv render term per line
        for (const auto& term : doc.at("terms")) {
            std::string index;
            for (const auto& x : term.at("index")) {
                if (!index.empty()) index += ',';
                index += std::to_string(x.get<int>());
            }
            const json& c = term.at("coeff");
            std::string coeff;
            if (c.is_string()) {
                coeff = c.get<std::string>();
            } else if (c.contains("num")) {
                coeff = poly_string(rat_qt_from_json(c));
            } else {
                bool qt = !c.empty() && c.begin().key().front() == 'q';
                coeff = qt ? poly_string(poly_qt_from_json(c)) : poly_string(laurent_from_json(c));
            }
            if (opts.format == "csv")
                std::cout << '"' << index << "\",\"" << coeff << "\"\n";
            else
                std::cout << (index.empty() ? "()" : index) << ": " << coeff << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct table_args {
    std::string kind;
    int k = 0;
    int degree = 0;
};

int cmd_table(const table_args& args, const cli_options& opts) {
    if (args.k <= 0 || args.degree < 0) throw invalid_input("table needs --k and --degree");
    coeff_table t = args.kind == "kschur-in-schur" ? make_kschur_in_schur(args.k, args.degree)
                    : args.kind == "mach-in-kschur"
                        ? make_mach_in_kschur(args.k, args.degree)
                        : throw invalid_input("unknown table kind '" + args.kind + "'");
    if (opts.format == "json")
        std::cout << with_meta(t.to_json()).dump(2) << '\n';
    else if (opts.format == "csv")
        std::cout << t.to_csv();
    else
        std::cout << t.to_aligned_text();
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct verify_args {
    std::string check = "all";
    verify_options opts;
};

int cmd_verify(const verify_args& args, const cli_options& opts) {
    std::vector<std::string> checks;
    if (args.check == "all")
        checks = verify_check_names();
    else
        checks.push_back(args.check);

    json reports = json::array();
    bool any_fail = false;
    for (const auto& name : checks) {
        verify_report report = run_verify(name, args.opts);
        any_fail = any_fail || report.theorem_failure();
        reports.push_back(report.to_json());
        if (opts.format != "json") {
            for (const auto& c : report.cases)
                std::cout << report.check << " | " << c.name << " | " << c.verdict
                          << (c.detail.empty() ? "" : " | " + c.detail) << '\n';
        }
    }
    if (opts.format == "json") {
        json doc;
        doc["reports"] = std::move(reports);
        std::cout << with_meta(doc).dump(2) << '\n';
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-Schur function calculator"};
    app.require_subcommand(1);

    cli_options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    app.add_option("--cache", opts.cache_path_flag, "cache file path override");
    app.add_flag("--no-cache", opts.no_cache, "disable the persistent cache");

    expand_args eargs;
    auto* expand = app.add_subcommand("expand", "expand one object in a basis");
    expand->add_option("--object", eargs.object, "kschur|ksplit|hall|hs|macdonald-h|macdonald-j")
        ->required();
    expand->add_option("--index", eargs.index,
                       "partition \"3,2,1\" (sequence elements joined by ';' for hs)");
    expand->add_option("--k", eargs.k, "level for kschur/ksplit");
    expand->add_option("--target", eargs.target, "target basis tag")->capture_default_str();
    expand->add_option("--target-k", eargs.target_k, "level of the target basis when different");
    expand->add_flag("--t1", eargs.t1, "specialize t = 1");

    table_args targs;
    auto* table = app.add_subcommand("table", "full coefficient table for one degree");
    table->add_option("--kind", targs.kind, "kschur-in-schur|mach-in-kschur")->required();
    table->add_option("--k", targs.k, "level")->required();
    table->add_option("--degree", targs.degree, "degree")->required();

    verify_args vargs;
    auto* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("--check", vargs.check, "check name or 'all'")->capture_default_str();
    verify->add_option("--k", vargs.opts.k, "override the default k range");
    verify->add_option("--max-degree", vargs.opts.max_degree, "override the default degree cap");
    verify->add_option("--jobs", vargs.opts.jobs, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_bad_input;
    }

    try {
        load_cache_if_any(opts);
        int rc = 0;
        if (expand->parsed()) rc = cmd_expand(eargs, opts);
        else if (table->parsed()) rc = cmd_table(targs, opts);
        else if (verify->parsed()) rc = cmd_verify(vargs, opts);
        save_cache_if_any(opts);
        return rc;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_domain_error;
    }
}
