#include "cli.hpp"

#include "report.hpp"
#include "scan.hpp"

#include <cullen/cascade.hpp>
#include <cullen/errors.hpp>
#include <cullen/lehmer_search.hpp>
#include <cullen/proof_verifier.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <memory>
#include <thread>

namespace cullen::cli {

namespace {

struct Settings {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t budget = FactorBudget{}.rho_iterations;
    std::string cache_path = "./cullen-factors.txt";
    bool no_cache = false;
    bool csv = false;
    bool json_out = false;
    bool timing = false;
    bool no_factor = false;
    std::string cap = "10000000";
};

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

BigInt parse_cap(const std::string& text)
{
    BigInt cap;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || cap.set_str(text, 10) != 0)
        throw CLI::ValidationError("--cap", "expected a positive integer, got '" + text + "'");
    return cap;
}

// Scan-style commands: header line (run metadata, excluded from comparisons),
// one row per n in ascending order, then a summary record.
int run_scan(const std::string& command, std::uint64_t first, std::uint64_t last, const Settings& s,
             bool factor, std::ostream& out, std::ostream& err)
{
    if (first < 1 || first > last) {
        err << "error: need 1 <= n_min <= n_max\n";
        return exit_usage;
    }

    std::unique_ptr<FactorCache> cache;
    if (!s.no_cache && factor) {
        cache = std::make_unique<FactorCache>(s.cache_path);
        for (const auto& w : cache->warnings())
            err << "warning: skipped cache line " << w << '\n';
    }

    ScanOptions opts;
    opts.factor = factor;
    opts.timing = s.timing;
    opts.budget.rho_iterations = s.budget;

    const auto started = std::chrono::steady_clock::now();
    std::string header_cmd = command + " " + std::to_string(first);
    if (last != first)
        header_cmd += " " + std::to_string(last);
    if (s.csv) {
        out << "# cullen " << header_cmd << " started=" << utc_now() << " workers=" << s.workers
            << " budget=" << s.budget << '\n';
        std::string cols;
        for (const auto& c : csv_columns())
            cols += (cols.empty() ? "" : ",") + c;
        out << cols << (s.timing ? ",elapsed_ms" : "") << '\n';
    } else {
        json h = {{"record", "header"},
                  {"command", header_cmd},
                  {"started", utc_now()},
                  {"workers", s.workers},
                  {"budget", s.budget},
                  {"cache", cache ? s.cache_path : std::string()}};
        out << h.dump() << '\n';
    }

    RatioSummary summary;
    ordered_parallel_for<ScanRow>(
        first, last, s.workers,
        [&](std::uint64_t n) { return compute_row(n, opts, cache.get()); },
        [&](ScanRow&& row) {
            summary.add(row);
            if (s.csv)
                out << csv_row(row) << '\n';
            else
                out << to_json(row).dump() << '\n';
        });

    if (s.csv) {
        const json j = summary.to_json(command);
        out << "# summary";
        for (const auto& [k, v] : j.items())
            if (k != "record")
                out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        out << '\n';
    } else {
        out << summary.to_json(command).dump() << '\n';
    }
    out.flush();
    if (!out)
        return exit_io;

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    err << command << ": " << summary.rows << " rows in " << secs << " s\n";
    return exit_ok;
}

int run_factor(std::uint64_t n, const Settings& s, std::ostream& out, std::ostream& err)
{
    if (n < 1) {
        err << "error: n must be >= 1\n";
        return exit_usage;
    }
    const LehmerSearchResult r = lehmer_constrained_factor(n);
    json j = to_json(r);

    std::unique_ptr<FactorCache> cache;
    if (!s.no_cache)
        cache = std::make_unique<FactorCache>(s.cache_path);
    ScanOptions opts;
    opts.budget.rho_iterations = s.budget;
    const ScanRow row = compute_row(n, opts, cache.get());
    j["factorization"] = to_json(*row.factorization);
    j["ratio"] = row.ratio ? json(to_string(row.ratio->ratio)) : json("unknown");
    j["carmichael"] = row.carmichael ? json(*row.carmichael) : json("unknown");
    out << j.dump(2) << '\n';
    return out ? exit_ok : exit_io;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cullen numbers and the Lehmer property: verification and scans", "cullen"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--workers", s.workers, "Worker threads for range commands")
        ->envname("CULLEN_WORKERS")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--budget", s.budget, "Pollard rho iteration budget per index")->envname("CULLEN_BUDGET");
    app.add_option("--cache", s.cache_path, "Factor cache file")->envname("CULLEN_CACHE");
    app.add_flag("--no-cache", s.no_cache, "Do not read or write the factor cache");
    auto* csv = app.add_flag("--csv", s.csv, "CSV output for range commands");
    auto* js = app.add_flag("--json", s.json_out, "JSON-lines output (default)");
    csv->excludes(js);
    app.add_flag("--timing", s.timing, "Add per-row wall time (breaks byte-identical output)");

    std::uint64_t n = 0, lo = 0, hi = 0, np = 0;

    auto* check = app.add_subcommand("check", "Refutation pipeline for one index");
    check->add_option("n", n)->required();

    auto* scan = app.add_subcommand("scan", "Refutation pipeline over an inclusive range");
    scan->add_option("n_min", lo)->required();
    scan->add_option("n_max", hi)->required();
    scan->add_flag("--no-factor", s.no_factor, "Skip general factoring (no ratio/Carmichael columns)");

    auto* carm = app.add_subcommand("carmichael", "Korselt verdicts over a range");
    carm->add_option("n_min", lo)->required();
    carm->add_option("n_max", hi)->required();

    auto* ratio = app.add_subcommand("ratio", "phi(C_n)/gcd(C_n - 1, phi(C_n)) over a range");
    ratio->add_option("n_min", lo)->required();
    ratio->add_option("n_max", hi)->required();

    auto* bounds = app.add_subcommand("bounds", "Replay the bound cascade");
    bounds->add_option("--cap", s.cap, "Enumeration cap for the 2^a 3^b + 1 product");

    auto* pig = app.add_subcommand("pigeonhole", "Small coprime (u, v) for (n, np)");
    pig->add_option("n", n)->required();
    pig->add_option("np", np)->required();

    auto* prod = app.add_subcommand("product-bound", "Certified bound on prod (1 + 1/(p-1)), p = 2^a 3^b + 1");
    prod->add_option("--cap", s.cap, "Enumeration cap")->required();

    auto* factor = app.add_subcommand("factor", "Constrained search and general factorization of C_n");
    factor->add_option("n", n)->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*check)
            return run_scan("check", n, n, s, true, out, err);
        if (*scan)
            return run_scan("scan", lo, hi, s, !s.no_factor, out, err);
        if (*carm)
            return run_scan("carmichael", lo, hi, s, true, out, err);
        if (*ratio)
            return run_scan("ratio", lo, hi, s, true, out, err);
        if (*factor)
            return run_factor(n, s, out, err);
        if (*pig) {
            const PigeonholePair p = pigeonhole_pair(n, np);
            out << to_json(p).dump(2) << '\n';
            if (n >= 30 && !p.satisfies_invariants())
                return exit_falsified;
            return out ? exit_ok : exit_io;
        }
        if (*prod) {
            const BigInt cap = parse_cap(s.cap);
            const ProductBound pb = two_three_product_bound(cap);
            out << to_json(pb).dump(2) << '\n';
            if (cap >= 1000 && !pb.below_two)
                return exit_falsified;
            return out ? exit_ok : exit_io;
        }
        if (*bounds) {
            const BoundCascade bc = cascade_verify(parse_cap(s.cap));
            out << to_json(bc).dump(2) << '\n';
            if (!bc.all_passed)
                return exit_falsified;
            return out ? exit_ok : exit_io;
        }
    } catch (const ProofViolation& e) {
        err << "FALSIFICATION: " << e.what() << '\n';
        return exit_falsified;
    } catch (const CacheIoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace cullen::cli
