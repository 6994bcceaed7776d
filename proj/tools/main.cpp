#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <mpfr.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetasum/algebra.hpp"
#include "zetasum/composition.hpp"
#include "zetasum/constants.hpp"
#include "zetasum/errors.hpp"
#include "zetasum/integrals.hpp"
#include "zetasum/numeric.hpp"
#include "zetasum/rational.hpp"
#include "zetasum/reductions.hpp"
#include "zetasum/registry.hpp"
#include "zetasum/wtable.hpp"

namespace fs = std::filesystem;
using namespace zetasum;

namespace {

// Decimal rendering with a fixed number of places after the point, rounded
// to nearest; the engine's budget equals the requested places, which leaves
// several guard digits beyond what is printed.
std::string format_decimal(const HPReal& v, int places) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rf", places, v.raw()) < 0)
        throw std::runtime_error("failed to format value");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    return v;
}

fs::path cache_dir() {
    if (const char* d = std::getenv("ZETASUM_CACHE_DIR")) return fs::path(d);
    if (const char* h = std::getenv("HOME"))
        return fs::path(h) / ".cache" / "zetasum";
    return fs::path(".zetasum-cache");
}

fs::path cache_file(int digits) {
    const std::string name = "constants-em" +
                             std::to_string(em_correction_order) + "-n" +
                             std::to_string(default_cutoff(digits)) + "-d" +
                             std::to_string(digits) + ".json";
    return cache_dir() / name;
}

// Euler-sum atom strings from a loaded cache, keyed by digit budget then by
// atom text ("S(2,6)", "S(2,8)").
std::map<int, std::map<std::string, std::string>> g_cached_atoms;

// Loads the cache file matching the current correction order, cutoff and
// digit budget, if one exists: zeta and gamma go into the process-wide
// memos, Euler-sum atoms are kept for evaluation environments built here.
void load_cache(int digits) {
    static std::set<int> attempted;
    if (!attempted.insert(digits).second) return;
    const fs::path p = cache_file(digits);
    std::ifstream in(p);
    if (!in) return;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.value("em_order", -1) != em_correction_order) return;
        if (j.value("n_max", -1L) != default_cutoff(digits)) return;
        if (j.value("digits", -1) != digits) return;
        if (j.contains("gamma"))
            seed_euler_gamma(
                digits, HPReal::from_string(j["gamma"].get<std::string>(),
                                            digits));
        if (j.contains("zeta"))
            for (const auto& [k, v] : j["zeta"].items())
                seed_riemann_zeta(
                    std::stoi(k), digits,
                    HPReal::from_string(v.get<std::string>(), digits));
        if (j.contains("euler"))
            for (const auto& [k, v] : j["euler"].items())
                g_cached_atoms[digits][k] = v.get<std::string>();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "warning: ignoring cache file %s: %s\n",
                     p.string().c_str(), e.what());
    }
}

NumericEnv make_env(int digits) {
    NumericEnv env(digits);
    if (auto it = g_cached_atoms.find(digits); it != g_cached_atoms.end())
        for (const auto& [atom, text] : it->second)
            env.seed(atom, HPReal::from_string(text, digits));
    return env;
}

int cmd_eval(const std::string& kind, const std::vector<std::string>& args,
             int digits) {
    load_cache(digits);
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("eval " + kind + " expects " +
                                        std::to_string(n) + " argument(s)");
    };
    HPReal v;
    if (kind == "mzv") {
        need(1);
        v = mzv(parse_composition(args[0]), digits);
    } else if (kind == "mzvstar") {
        need(1);
        v = mzv_star(parse_composition(args[0]), digits);
    } else if (kind == "euler") {
        need(2);
        v = euler_sum(parse_composition(args[0]).parts, to_int(args[1]),
                      digits);
    } else if (kind == "zeta") {
        need(1);
        v = riemann_zeta(to_int(args[0]), digits);
    } else if (kind == "hurwitz") {
        need(2);
        v = hurwitz_zeta(to_int(args[0]), rational_from_string(args[1]),
                         digits);
    } else {
        throw std::invalid_argument(
            "unknown eval target '" + kind +
            "' (expected mzv, mzvstar, euler, zeta or hurwitz)");
    }
    std::printf("%s\n", format_decimal(v, digits).c_str());
    return 0;
}

int cmd_closed_form(const std::string& target,
                    const std::vector<std::string>& raw_args, int numeric) {
    std::vector<int> a;
    a.reserve(raw_args.size());
    for (const auto& s : raw_args) a.push_back(to_int(s));
    auto need = [&](size_t n) {
        if (a.size() != n)
            throw std::invalid_argument("closed-form " + target + " expects " +
                                        std::to_string(n) + " argument(s)");
    };
    AlgebraElement e;
    if (target == "W") {
        need(2);
        e = w_integral(a[0], a[1]);
    } else if (target == "hook") {
        need(2);
        e = hook_mzv(a[0], a[1]);
    } else if (target == "I") {
        need(3);
        e = dual_log_moment(a[0], a[1], a[2]);
    } else if (target == "H") {
        need(2);
        e = h_sum(a[0], a[1]);
    } else if (target == "Hstar") {
        need(2);
        e = h_star_sum(a[0], a[1]);
    } else if (target == "powerzeta") {
        need(2);
        e = power_zeta(a[0], a[1]);
    } else if (target == "starhook") {
        need(2);
        e = star_hook(a[0], a[1]);
    } else {
        throw std::invalid_argument(
            "unknown closed-form target '" + target +
            "' (expected W, hook, I, H, Hstar, powerzeta or starhook)");
    }
    std::printf("%s\n", format_algebra(e).c_str());
    if (numeric > 0) {
        load_cache(numeric);
        NumericEnv env = make_env(numeric);
        std::printf("%s\n", format_decimal(eval_algebra(e, env), numeric).c_str());
    }
    return 0;
}

std::map<std::string, int> parse_param_tokens(const std::vector<std::string>& toks) {
    std::map<std::string, int> out;
    for (const auto& t : toks) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected name=value, got '" + t + "'");
        out[t.substr(0, eq)] = to_int(t.substr(eq + 1));
    }
    return out;
}

void print_report(const EvalReport& r, bool full) {
    std::string ps;
    for (const auto& [k, v] : r.params) {
        if (!ps.empty()) ps += ",";
        ps += k + "=" + std::to_string(v);
    }
    std::printf("[%s] %s %s%s%sdigits=%d tol=%g (%ld ms)\n",
                r.pass ? "PASS" : "FAIL", r.id.c_str(), r.mode.c_str(),
                ps.empty() ? "" : (" " + ps).c_str(), " ", r.digits, r.tol,
                r.elapsed_ms);
    if (full || !r.pass) {
        std::printf("  lhs:  %s\n", r.lhs.c_str());
        std::printf("  rhs:  %s\n", r.rhs.c_str());
        std::printf("  diff: %s\n", r.diff.c_str());
    }
    if ((full || !r.pass) && !r.note.empty())
        std::printf("  note: %s\n", r.note.c_str());
}

int effective_digits(const IdentityEntry& e, int cli_digits) {
    if (cli_digits > 0) return cli_digits;
    return e.default_digits > 0 ? e.default_digits : default_direct_digits;
}

int write_json_lines(const std::string& path,
                     const std::vector<EvalReport>& reports) {
    std::ofstream out(path);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return 2;
    }
    for (const auto& r : reports) out << report_to_json(r) << "\n";
    return 0;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& toks,
               int digits, double tol, const std::string& json_path) {
    const auto params = parse_param_tokens(toks);
    if (const IdentityEntry* e = find_identity(id))
        load_cache(effective_digits(*e, digits));
    const EvalReport r = run_identity(id, params, digits, tol);
    print_report(r, true);
    if (!json_path.empty())
        if (int rc = write_json_lines(json_path, {r}); rc != 0) return rc;
    return r.pass ? 0 : 1;
}

int cmd_suite(int digits, double tol, const std::string& json_path, int jobs) {
    const auto& reg = identity_registry();
    for (const auto& e : reg) load_cache(effective_digits(e, digits));
    std::vector<EvalReport> results(reg.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= reg.size()) break;
            try {
                results[i] = run_identity(reg[i].id, {}, digits, tol);
            } catch (const std::exception& ex) {
                EvalReport r;
                r.id = reg[i].id;
                r.mode = check_mode_name(reg[i].mode);
                r.diff = "error";
                r.digits = effective_digits(reg[i], digits);
                r.note = ex.what();
                results[i] = r;
            }
        }
    };
    const int nthreads = std::max(1, std::min(jobs, 32));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    size_t passed = 0;
    for (const auto& r : results) {
        print_report(r, false);
        if (r.pass) ++passed;
    }
    std::printf("%zu/%zu passed\n", passed, results.size());
    if (!json_path.empty())
        if (int rc = write_json_lines(json_path, results); rc != 0) return rc;
    return passed == results.size() ? 0 : 1;
}

int cmd_cache_warm(int digits) {
    const long nmax = default_cutoff(digits);
    nlohmann::ordered_json j;
    j["em_order"] = em_correction_order;
    j["n_max"] = nmax;
    j["digits"] = digits;
    j["gamma"] = euler_gamma(digits).str(digits + 8);
    nlohmann::ordered_json z = nlohmann::ordered_json::object();
    for (int k = 2; k <= 13; ++k)
        z[std::to_string(k)] = riemann_zeta(k, digits).str(digits + 8);
    j["zeta"] = z;
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (unsigned long k = 0; k <= 60; ++k)
        b.push_back(rational_to_string(bernoulli(k)));
    j["bernoulli"] = b;
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    s["S(2,6)"] = linear_sum(2, 6, digits).str(digits + 8);
    s["S(2,8)"] = linear_sum(2, 8, digits).str(digits + 8);
    j["euler"] = s;
    const fs::path p = cache_file(digits);
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    std::ofstream out(p);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", p.string().c_str());
        return 2;
    }
    out << j.dump(2) << "\n";
    std::printf(
        "wrote %s\n  gamma, zeta(2..13), Bernoulli up to B60, S(2,6), S(2,8) "
        "at %d digits (cutoff %ld, correction order %d)\n",
        p.string().c_str(), digits, nmax, em_correction_order);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta value and Euler sum workbench"};
    app.require_subcommand(1);

    std::string eval_kind;
    std::vector<std::string> eval_args;
    int eval_digits = 12;
    long max_n = 0;
    auto* eval = app.add_subcommand(
        "eval", "evaluate mzv | mzvstar | euler | zeta | hurwitz numerically");
    eval->add_option("kind", eval_kind,
                     "mzv s | mzvstar s | euler S q | zeta k | hurwitz t a")
        ->required();
    eval->add_option("args", eval_args, "target arguments");
    eval->add_option("--digits", eval_digits, "decimal places to print")
        ->check(CLI::Range(1, 100));
    eval->add_option("--max-n", max_n, "override the direct-summation cutoff")
        ->check(CLI::Range(16L, max_direct_cutoff));

    std::string cf_target;
    std::vector<std::string> cf_args;
    int cf_numeric = 0;
    auto* cf = app.add_subcommand(
        "closed-form",
        "print a closed form: W m k | hook m k | I n m k | H m p | Hstar m p "
        "| powerzeta p m | starhook p m");
    cf->add_option("target", cf_target, "closed-form family")->required();
    cf->add_option("args", cf_args, "integer arguments");
    cf->add_option("--numeric", cf_numeric,
                   "also print the value to this many decimal places")
        ->check(CLI::Range(1, 100));
    cf->add_option("--max-n", max_n, "override the direct-summation cutoff")
        ->check(CLI::Range(16L, max_direct_cutoff));

    std::string verify_id;
    std::vector<std::string> verify_params;
    int rv_digits = 0;
    double rv_tol = 0.0;
    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run one registry identity");
    verify->add_option("id", verify_id, "identity id (r01..r31)")->required();
    verify->add_option("params", verify_params, "overrides as name=value");
    verify->add_option("--digits", rv_digits,
                       "digit budget (default: per entry)")
        ->check(CLI::Range(1, 100));
    verify->add_option("--tol", rv_tol, "tolerance (default: per entry)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "write the EvalReport to this file");
    verify->add_option("--max-n", max_n, "override the direct-summation cutoff")
        ->check(CLI::Range(16L, max_direct_cutoff));

    int jobs = 1;
    auto* suite =
        app.add_subcommand("suite", "run every registry identity at defaults");
    suite->add_option("--digits", rv_digits,
                      "digit budget (default: per entry)")
        ->check(CLI::Range(1, 100));
    suite->add_option("--tol", rv_tol, "tolerance (default: per entry)")
        ->check(CLI::PositiveNumber);
    suite->add_option("--json", json_path,
                      "write EvalReports, one JSON object per line");
    suite->add_option("--jobs", jobs, "parallel worker count")
        ->check(CLI::Range(1, 32));
    suite->add_option("--max-n", max_n, "override the direct-summation cutoff")
        ->check(CLI::Range(16L, max_direct_cutoff));

    auto* cache = app.add_subcommand("cache", "constants cache maintenance");
    cache->require_subcommand(1);
    int warm_digits = 12;
    auto* warm = cache->add_subcommand(
        "warm", "precompute and store shared constants (dir: $ZETASUM_CACHE_DIR)");
    warm->add_option("--digits", warm_digits, "digit budget for the constants")
        ->check(CLI::Range(1, 100));
    warm->add_option("--max-n", max_n, "override the direct-summation cutoff")
        ->check(CLI::Range(16L, max_direct_cutoff));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (max_n > 0) set_cutoff_override(max_n);
        if (app.got_subcommand(eval)) return cmd_eval(eval_kind, eval_args, eval_digits);
        if (app.got_subcommand(cf)) return cmd_closed_form(cf_target, cf_args, cf_numeric);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_id, verify_params, rv_digits, rv_tol, json_path);
        if (app.got_subcommand(suite))
            return cmd_suite(rv_digits, rv_tol, json_path, jobs);
        if (app.got_subcommand(cache)) return cmd_cache_warm(warm_digits);
    } catch (const precision_error& e) {
        std::fprintf(stderr, "error: %s (achieved %d digits)\n", e.what(),
                     e.achieved_digits);
        return 3;
    } catch (const parse_error& e) {
        std::fprintf(stderr, "error: %s (at offset %zu)\n", e.what(),
                     e.position);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const unsupported_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
