#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler/cache_store.hpp"
#include "qeuler/divisibility.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/report.hpp"

namespace qeuler::cli {

namespace {

/// Error carrying its exit status.
struct Failure : std::runtime_error {
    Failure(ExitCode code, const std::string& what) : std::runtime_error(what), code(code) {}
    ExitCode code;
};

std::optional<std::filesystem::path> cache_path(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv(kCachePathEnv); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

std::filesystem::path require_cache_path(const std::string& flag) {
    auto p = cache_path(flag);
    if (!p) throw Failure(kUsage, std::string("no cache path: pass --cache-path or set ") + kCachePathEnv);
    return *p;
}

/// Store at `path`, or an empty store when the file does not exist yet.
CacheStore load_store_if_present(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    return CacheStore::load(path);
}

void warm_memo(EulerMemo& memo, const std::string& flag) {
    if (auto p = cache_path(flag); p && std::filesystem::exists(*p)) memo.warm_from(CacheStore::load(*p));
}

OutputFormat require_format(const std::string& name) {
    auto f = parse_format(name);
    if (!f) throw Failure(kUsage, "unknown format '" + name + "' (expected plain, json or csv)");
    return *f;
}

void require_period(int k) {
    if (k < 2) throw Failure(kUsage, "k must be >= 2, got " + std::to_string(k));
}

/// Writes to `path` when set, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw Failure(kIoOrFormat, "cannot open output file " + path);
        out_ = &file_;
    }

    std::ostream& stream() { return *out_; }

    void close() {
        out_->flush();
        if (!*out_) throw Failure(kIoOrFormat, "write failed");
    }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::string euler_label(int n, int k) { return "E[" + std::to_string(n) + "|" + std::to_string(k) + "](q)"; }

nlohmann::ordered_json coeff_array(const QPolynomial& p) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

struct ComputeArgs {
    int n = 0;
    int k = 2;
    bool oracle = false;
    bool check = false;
    std::string format = "plain";
    std::string cache;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
    require_period(a.k);
    if (a.n < 0) throw Failure(kUsage, "n must be >= 0");
    const OutputFormat format = require_format(a.format);
    if (format == OutputFormat::csv) throw Failure(kUsage, "compute supports plain and json output");

    EulerMemo memo;
    warm_memo(memo, a.cache);
    const QPolynomial value = a.oracle ? euler_oracle(a.n, a.k) : euler_q(a.n, a.k, memo);
    std::optional<bool> agree;
    if (a.check) agree = (a.oracle ? euler_q(a.n, a.k, memo) : euler_oracle(a.n, a.k)) == value;
    const BigInteger count = eval_int(value, 1);

    if (format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["n"] = a.n;
        j["k"] = a.k;
        j["polynomial"] = to_string(value);
        j["coeffs"] = coeff_array(value);
        j["count"] = count.get_str();
        if (agree) j["oracle_agreement"] = *agree;
        out << j.dump() << "\n";
    } else {
        out << euler_label(a.n, a.k) << " = " << to_string(value) << "\n";
        out << "count = " << count.get_str() << "\n";
        if (agree) out << "oracle agreement: " << (*agree ? "yes" : "no") << "\n";
    }
    return (agree && !*agree) ? kVerificationFailed : kOk;
}

struct TableArgs {
    int k = 2;
    int n_max = 0;
    std::string format = "plain";
    std::string output;
    std::string cache;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    require_period(a.k);
    if (a.n_max < 0) throw Failure(kUsage, "n-max must be >= 0");
    const OutputFormat format = require_format(a.format);

    EulerMemo memo;
    warm_memo(memo, a.cache);
    Sink sink(a.output, out);
    auto& os = sink.stream();
    if (format == OutputFormat::csv) os << "n,k,coeffs,count\n";
    for (int n = 0; n <= a.n_max; ++n) {
        const QPolynomial p = euler_q(n, a.k, memo);
        const std::string count = eval_int(p, 1).get_str();
        switch (format) {
            case OutputFormat::plain:
                os << euler_label(n, a.k) << " = " << to_string(p) << "; count = " << count << "\n";
                break;
            case OutputFormat::csv:
                os << n << "," << a.k << "," << join_coeffs(p) << "," << count << "\n";
                break;
            case OutputFormat::json: {
                nlohmann::ordered_json j;
                j["n"] = n;
                j["k"] = a.k;
                j["coeffs"] = coeff_array(p);
                j["count"] = count;
                os << j.dump() << "\n";
                break;
            }
        }
    }
    sink.close();
    return kOk;
}

struct VerifyArgs {
    std::vector<int> ks;
    int max_n = 0;
    std::vector<std::string> claims;
    std::string format = "plain";
    std::string output;
    std::string cache;
    bool strict_explore = false;
    bool force = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.ks.empty()) throw Failure(kUsage, "--k needs at least one value");
    for (int k : a.ks) require_period(k);
    if (a.max_n < 2) throw Failure(kUsage, "--max-N must be >= 2");
    const OutputFormat format = require_format(a.format);

    std::vector<Claim> claims;
    if (a.claims.empty()) {
        claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
    } else {
        for (const auto& id : a.claims) {
            auto c = parse_claim(id);
            if (!c) throw Failure(kUsage, "unknown claim '" + id + "'");
            claims.push_back(*c);
        }
    }

    EulerMemo memo;
    warm_memo(memo, a.cache);

    // One shard per k; n grows sequentially inside a shard so the memo is reused.
    std::vector<std::future<std::vector<VerificationReport>>> shards;
    for (int k : a.ks) {
        shards.push_back(std::async(std::launch::async, [&, k] {
            std::vector<VerificationReport> reports;
            for (Claim c : claims)
                for (const auto& params : sweep_grid(c, k, a.max_n))
                    reports.push_back(run_claim(c, params, memo, a.force));
            return reports;
        }));
    }

    Sink sink(a.output, out);
    auto& os = sink.stream();
    if (auto header = report_header(format); !header.empty()) os << header << "\n";
    std::map<Verdict, std::size_t> tally;
    bool failed = false;
    for (auto& shard : shards) {
        for (const auto& r : shard.get()) {
            os << format_report(r, format) << "\n";
            ++tally[r.verdict];
            if (r.verdict != Verdict::fails || r.forced) continue;
            if (!is_explorer(r.claim) || a.strict_explore) failed = true;
        }
    }
    sink.close();
    err << "summary: " << tally[Verdict::holds] << " holds, " << tally[Verdict::fails] << " fails, "
        << tally[Verdict::inapplicable] << " inapplicable\n";
    return failed ? kVerificationFailed : kOk;
}

struct CacheArgs {
    std::vector<int> ks;
    int max_n = 0;
    std::string path;
    std::string cache;
};

int cmd_cache_warm(const CacheArgs& a, std::ostream& out) {
    if (a.ks.empty()) throw Failure(kUsage, "--k needs at least one value");
    for (int k : a.ks) require_period(k);
    if (a.max_n < 0) throw Failure(kUsage, "--max-n must be >= 0");
    const auto path = require_cache_path(a.cache);
    CacheStore store = load_store_if_present(path);
    EulerMemo memo;
    memo.warm_from(store);
    for (int k : a.ks) euler_q(a.max_n, k, memo);
    memo.flush_to(store);
    store.save(path);
    for (int k : a.ks)
        out << "warmed k=" << k << " up to n=" << a.max_n << " (" << store.count_for(k) << " entries)\n";
    return kOk;
}

int cmd_cache_stats(const CacheArgs& a, std::ostream& out) {
    const CacheStore store = load_store_if_present(require_cache_path(a.cache));
    out << "entries: " << store.size() << "\n";
    std::map<int, std::size_t> per_k;
    for (const auto& [key, p] : store.entries()) ++per_k[key.k];
    for (const auto& [k, count] : per_k) out << "k=" << k << ": " << count << " entries\n";
    const auto deg = store.max_degree();
    out << "max degree: " << (deg ? std::to_string(*deg) : std::string("none")) << "\n";
    return kOk;
}

int cmd_cache_export(const CacheArgs& a, std::ostream& out) {
    const CacheStore store = load_store_if_present(require_cache_path(a.cache));
    store.save(a.path);
    out << "exported " << store.size() << " entries to " << a.path << "\n";
    return kOk;
}

int cmd_cache_import(const CacheArgs& a, std::ostream& out) {
    const auto path = require_cache_path(a.cache);
    const CacheStore incoming = CacheStore::load(a.path);
    CacheStore store = load_store_if_present(path);
    store.merge(incoming);
    store.save(path);
    out << "imported " << incoming.size() << " entries into " << path.string() << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized q-Euler numbers: compute, tabulate and verify divisibility", "qeuler"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Print E[n|k](q) and its value at q=1");
    c->add_option("n", compute.n, "Permutation length")->required();
    c->add_option("k", compute.k, "Descent period")->required();
    c->add_flag("--oracle", compute.oracle, "Use brute-force enumeration (n <= 10)");
    c->add_flag("--check", compute.check, "Compare recursion and enumeration");
    c->add_option("--format", compute.format, "plain or json");
    c->add_option("--cache-path", compute.cache, "Cache file used to warm the memo");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Rows n = 0..n-max of E[n|k](q)");
    t->add_option("k", table.k, "Descent period")->required();
    t->add_option("n-max", table.n_max, "Largest n")->required();
    t->add_option("--format", table.format, "plain, json or csv");
    t->add_option("--output,-o", table.output, "Write to this file instead of stdout");
    t->add_option("--cache-path", table.cache, "Cache file used to warm the memo");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Sweep divisibility claims over a parameter grid");
    v->add_option("--k", verify.ks, "Periods (comma list)")->delimiter(',')->required();
    v->add_option("--max-N", verify.max_n, "Inclusive bound on nk+i")->required();
    v->add_option("--claims", verify.claims, "Claim identifiers (comma list); default all")->delimiter(',');
    v->add_option("--format", verify.format, "plain, json or csv");
    v->add_option("--output,-o", verify.output, "Write reports to this file instead of stdout");
    v->add_option("--cache-path", verify.cache, "Cache file used to warm the memo");
    v->add_flag("--strict-explore", verify.strict_explore, "Explorer failures also fail the run");
    v->add_flag("--force", verify.force, "Run checks for non-prime k as exploration");

    CacheArgs cache;
    auto* cache_cmd = app.add_subcommand("cache", "Manage the persistent polynomial cache");
    cache_cmd->require_subcommand(1);
    cache_cmd->add_option("--cache-path", cache.cache, std::string("Cache file (default: $") + kCachePathEnv + ")");
    auto* warm = cache_cmd->add_subcommand("warm", "Compute and persist E[n|k](q) for n = 0..max-n");
    warm->add_option("--k", cache.ks, "Periods (comma list)")->delimiter(',')->required();
    warm->add_option("--max-n", cache.max_n, "Largest n")->required();
    warm->add_option("--cache-path", cache.cache, "Cache file");
    auto* stats = cache_cmd->add_subcommand("stats", "Entry count and maximum degree");
    stats->add_option("--cache-path", cache.cache, "Cache file");
    auto* exp = cache_cmd->add_subcommand("export", "Write the cache to a file");
    exp->add_option("path", cache.path, "Destination")->required();
    exp->add_option("--cache-path", cache.cache, "Cache file");
    auto* imp = cache_cmd->add_subcommand("import", "Merge a cache file into the cache");
    imp->add_option("path", cache.path, "Source")->required();
    imp->add_option("--cache-path", cache.cache, "Cache file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out);
        if (t->parsed()) return cmd_table(table, out);
        if (v->parsed()) return cmd_verify(verify, out, err);
        if (warm->parsed()) return cmd_cache_warm(cache, out);
        if (stats->parsed()) return cmd_cache_stats(cache, out);
        if (exp->parsed()) return cmd_cache_export(cache, out);
        if (imp->parsed()) return cmd_cache_import(cache, out);
        return kUsage;
    } catch (const Failure& e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const BudgetExceeded& e) {
        err << "error: enumeration budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const CacheFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kIoOrFormat;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoOrFormat;
    }
}

}  // namespace qeuler::cli
