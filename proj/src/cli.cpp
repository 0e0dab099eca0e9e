#include "tetra/cli.hpp"

#include "tetra/binet.hpp"
#include "tetra/genfun.hpp"
#include "tetra/identities.hpp"
#include "tetra/json.hpp"
#include "tetra/matrix.hpp"
#include "tetra/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace tetra::cli {

namespace {

// Larger values are replaced by their digit count in bench output.
constexpr std::size_t kMaxPrintedDigits = 10'000;

struct SpecArgs {
    std::string seq = "M";
    std::vector<std::string> init;
    bool gaussian = false;
    std::string format = "json";

    SeqSpec resolve() const {
        if (!init.empty()) {
            if (init.size() != 4) throw std::invalid_argument("--init needs exactly four values c0,c1,c2,c3");
            std::array<BigInt, 4> c;
            for (std::size_t k = 0; k < 4; ++k) {
                if (c[k].set_str(init[k], 10) != 0) throw std::invalid_argument("--init: not an integer: " + init[k]);
            }
            return {c[0], c[1], c[2], c[3]};
        }
        if (seq == "M") return tetranacci();
        if (seq == "R") return tetranacci_lucas();
        return shifted_tetranacci();
    }
    bool plain() const { return format == "plain"; }
};

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
    cmd->add_option("--seq", a.seq, "Named sequence")->check(CLI::IsMember({"M", "R", "U"}))->capture_default_str();
    cmd->add_option("--init", a.init, "Initial values c0,c1,c2,c3 (overrides --seq)")->delimiter(',')->expected(4);
    cmd->add_flag("--gaussian", a.gaussian, "Use the Gaussian lift GV_n = V_n + i V_{n-1}");
    cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "plain"}))->capture_default_str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string(kSeedEnv) + " is not an unsigned integer: " + env);
    }
    return kDefaultSeed;
}

std::pair<long, long> parse_window(const std::string& text) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw std::invalid_argument("--window expects lo:hi, got '" + text + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        const long lo = std::stol(a, &p1);
        const long hi = std::stol(b, &p2);
        if (p1 == a.size() && p2 == b.size()) return {lo, hi};
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("--window expects lo:hi, got '" + text + "'");
}

void emit_term(std::ostream& out, const SpecArgs& a, const SeqSpec& spec, long n) {
    if (a.gaussian) {
        const GaussianInt g = gterm(spec, n);
        if (a.plain()) {
            out << to_string(g) << '\n';
        } else {
            out << Json{{"n", n}, {"value", to_string(g)}, {"re", g.re().get_str()}, {"im", g.im().get_str()}}.dump()
                << '\n';
        }
        return;
    }
    const BigInt v = term(spec, n);
    if (a.plain())
        out << v.get_str() << '\n';
    else
        out << Json{{"n", n}, {"value", v.get_str()}}.dump() << '\n';
}

template <class F>
double median_ms(int reps, F&& fn) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Tetranacci and Gaussian Tetranacci numbers"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    SpecArgs sa;
    long n = 0;
    long lo = 0, hi = 0;
    std::size_t k = 10;
    bool even = false, odd = false;

    auto* term_cmd = app.add_subcommand("term", "One term V_n (or GV_n)");
    add_spec_options(term_cmd, sa);
    term_cmd->add_option("-n,--index", n, "Index (any integer)")->required();

    auto* range_cmd = app.add_subcommand("range", "Terms lo..hi, one per line");
    add_spec_options(range_cmd, sa);
    range_cmd->add_option("--lo", lo, "First index")->required();
    range_cmd->add_option("--hi", hi, "Last index")->required();

    auto* gf_cmd = app.add_subcommand("genfun", "Generating function and its first k coefficients");
    add_spec_options(gf_cmd, sa);
    gf_cmd->add_option("-k,--count", k, "Number of coefficients")->capture_default_str();
    auto* even_flag = gf_cmd->add_flag("--even", even, "Bisect: even-indexed terms");
    gf_cmd->add_flag("--odd", odd, "Bisect: odd-indexed terms")->excludes(even_flag);

    auto* binet_cmd = app.add_subcommand("binet", "Floating-point Binet evaluation");
    add_spec_options(binet_cmd, sa);
    binet_cmd->add_option("-n,--index", n, "Index (any integer)")->required();
    double guard = kDefaultGuardBand;
    binet_cmd->add_option("--guard", guard, "Rounding guard band: validated needs distance <= 0.5 - guard")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 0.499));

    std::string window = "-32:128";
    std::optional<std::uint64_t> seed;
    std::size_t specs = 16;
    std::string only, source = "recurrence";
    bool serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite (JSON lines, one per identity)");
    verify_cmd->add_option("--window", window, "Index window lo:hi")->capture_default_str();
    verify_cmd->add_option("--seed", seed, std::string("Seed for random specs (default ") +
                                               std::to_string(kDefaultSeed) + ", or $" + kSeedEnv + ")");
    verify_cmd->add_option("--specs", specs, "Number of random specs")->capture_default_str();
    verify_cmd->add_option("--only", only, "Run a single identity id");
    verify_cmd->add_option("--source", source, "Where terms come from")
        ->check(CLI::IsMember({"recurrence", "matrix"}))
        ->capture_default_str();
    verify_cmd->add_flag("--serial", serial, "Disable parallel evaluation");
    verify_cmd->add_option("--format", sa.format, "Output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    bool list_ids = false;
    verify_cmd->add_flag("--list", list_ids, "List identity ids and exit");

    std::vector<long> bench_n{1000, 100000};
    int reps = 5;
    auto* bench_cmd = app.add_subcommand("bench", "Time the O(n) sweep against A^n powering");
    bench_cmd->add_option("--seq", sa.seq, "Named sequence")->check(CLI::IsMember({"M", "R", "U"}));
    bench_cmd->add_option("--init", sa.init, "Initial values c0,c1,c2,c3")->delimiter(',')->expected(4);
    bench_cmd->add_option("-n,--index", bench_n, "Indices, comma separated")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--reps", reps, "Repetitions per path (median reported)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kExitUsage;
    }

    try {
        if (*term_cmd) {
            emit_term(out, sa, sa.resolve(), n);
            return kExitOk;
        }

        if (*range_cmd) {
            const SeqSpec spec = sa.resolve();
            if (lo > hi) throw std::invalid_argument("range: --lo must not exceed --hi");
            if (sa.gaussian) {
                const auto g = gterm_range(spec, lo, hi);
                for (long i = lo; i <= hi; ++i) {
                    const GaussianInt& z = g[static_cast<std::size_t>(i - lo)];
                    if (sa.plain())
                        out << to_string(z) << '\n';
                    else
                        out << Json{{"n", i}, {"value", to_string(z)}, {"re", z.re().get_str()}, {"im", z.im().get_str()}}.dump() << '\n';
                }
            } else {
                const auto v = term_range(spec, lo, hi);
                for (long i = lo; i <= hi; ++i) {
                    const std::string s = v[static_cast<std::size_t>(i - lo)].get_str();
                    if (sa.plain())
                        out << s << '\n';
                    else
                        out << Json{{"n", i}, {"value", s}}.dump() << '\n';
                }
            }
            return kExitOk;
        }

        if (*gf_cmd) {
            RationalGF f = gf_for(sa.resolve(), sa.gaussian);
            std::string parity = "none";
            if (even || odd) {
                f = bisect(f, even ? Parity::Even : Parity::Odd);
                parity = even ? "even" : "odd";
            }
            const auto c = coeffs(f, k);
            std::vector<std::string> text;
            for (const auto& z : c) text.push_back(to_string(z));
            if (sa.plain()) {
                out << "numerator: " << to_string(f.num()) << '\n';
                out << "denominator: " << to_string(f.den()) << '\n';
                out << "coefficients:";
                for (const auto& s : text) out << ' ' << s;
                out << '\n';
            } else {
                out << Json{{"parity", parity},
                            {"numerator", to_string(f.num())},
                            {"denominator", to_string(f.den())},
                            {"coefficients", text}}
                           .dump()
                    << '\n';
            }
            return kExitOk;
        }

        if (*binet_cmd) {
            const SeqSpec spec = sa.resolve();
            const BinetValue v = binet_eval(spec, n, sa.gaussian, guard);
            const GaussianInt exact = sa.gaussian ? gterm(spec, n) : GaussianInt(term(spec, n));
            const GaussianInt rounded = v.rounded();
            if (sa.plain()) {
                out.precision(17);
                out << v.value.real() << ' ' << v.value.imag() << ' ' << to_string(rounded) << ' '
                    << (v.validated ? "validated" : "unvalidated") << '\n';
            } else {
                out << Json{{"n", n},
                            {"value_re", v.value.real()},
                            {"value_im", v.value.imag()},
                            {"rounded", to_string(rounded)},
                            {"validated", v.validated},
                            {"exact", to_string(exact)},
                            {"matches_exact", rounded == exact}}
                           .dump()
                    << '\n';
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            if (list_ids) {
                for (const auto& id : identity_ids()) out << id << '\n';
                return kExitOk;
            }
            SuiteOptions opt;
            std::tie(opt.lo, opt.hi) = parse_window(window);
            opt.seed = seed ? *seed : default_seed();
            opt.random_specs = specs;
            opt.source = source == "matrix" ? TermSource::MatrixPower : TermSource::Recurrence;
            if (!only.empty()) opt.only = only;
            opt.parallel = !serial;
            const auto reports = run_suite(opt);
            std::size_t passed = 0;
            for (const auto& r : reports) {
                if (r.pass()) ++passed;
                if (sa.plain()) {
                    out << (r.pass() ? "PASS " : "FAIL ") << r.id << " checked=" << r.checked
                        << " failures=" << r.failure_count << " observed=" << r.observed_held << '/'
                        << r.observed << '\n';
                    for (const auto& f : r.failures)
                        out << "  " << f.inputs << ": " << f.lhs << " != " << f.rhs << " [" << f.kind << "]\n";
                } else {
                    out << to_json_value(r).dump() << '\n';
                }
            }
            const bool all = passed == reports.size();
            if (sa.plain()) {
                out << (all ? "all " : "") << passed << '/' << reports.size() << " identities pass (seed "
                    << opt.seed << ")\n";
            } else {
                out << Json{{"summary",
                             {{"identities", reports.size()}, {"passed", passed}, {"seed", opt.seed}, {"pass", all}}}}
                           .dump()
                    << '\n';
            }
            return all ? kExitOk : kExitVerifyFailed;
        }

        if (*bench_cmd) {
            const SeqSpec spec = sa.resolve();
            bool mismatch = false;
            for (long idx : bench_n) {
                BigInt iterative, powered;
                const double t_iter = median_ms(reps, [&] { iterative = term(spec, idx); });
                const double t_mat = median_ms(reps, [&] { powered = term_by_power(spec, idx); });
                const bool equal = iterative == powered;
                const std::string digits = BigInt(abs(iterative)).get_str();
                Json row{{"n", idx},
                         {"reps", reps},
                         {"iterative_ms", t_iter},
                         {"matrix_ms", t_mat},
                         {"equal", equal},
                         {"digits", digits.size()}};
                if (digits.size() <= kMaxPrintedDigits) row["value"] = iterative.get_str();
                if (!equal) {
                    mismatch = true;
                    row["matrix_value_digits"] = BigInt(abs(powered)).get_str().size();
                }
                out << row.dump() << '\n';
                if (mismatch) {
                    err << "bench: iterative and matrix results differ at n=" << idx << '\n';
                    return kExitBenchMismatch;
                }
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

}  // namespace tetra::cli
