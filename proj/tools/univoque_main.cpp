#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "univoque/base_solver.hpp"
#include "univoque/dimension.hpp"
#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"
#include "univoque/thue_morse.hpp"
#include "univoque/univoque_x.hpp"
#include "univoque/verify.hpp"

namespace {

using namespace univoque;
using nlohmann::json;

struct GlobalOptions {
    int M = 1;
    unsigned precision_bits = 128;
    std::string tol = "1e-12";
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;
    int jobs = 0; // 0: hardware concurrency

    Alphabet alphabet() const { return Alphabet(M); }
    Rational tolerance() const {
        Rational t = parse_decimal(tol);
        if (t <= 0) throw DomainError("--tol must be positive");
        return t;
    }
    int job_count() const {
        if (jobs > 0) return jobs;
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }
    PrecisionReal real(const std::string& text) const {
        return PrecisionReal::from_decimal(text, precision_bits);
    }
};

void add_global_options(CLI::App* cmd, GlobalOptions& g) {
    cmd->add_option("--M", g.M, "largest digit of the alphabet {0..M}")->check(CLI::PositiveNumber);
    cmd->add_option("--precision-bits", g.precision_bits, "working precision for enclosures");
    cmd->add_option("--tol", g.tol, "tolerance for root finding (decimal string)");
    cmd->add_option("--out", g.out_path, "write output to this path instead of stdout");
    cmd->add_option("--format", g.format, "output format where applicable: csv|json");
    cmd->add_option("--seed", g.seed, "seed for sampled constructions");
    cmd->add_option("--jobs", g.jobs, "worker threads for grid commands (default: cores)");
}

// output sink honoring --out
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DomainError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string fmt_real(const PrecisionReal& v, int digits = 20) {
    return format_decimal(v.value(), digits);
}

json witness_json(const MemberWitness& w) {
    return json{{"base", fmt_real(w.base)},
                {"base_radius", format_decimal(w.base.radius(), 30)},
                {"expansion", format_sequence(w.expansion)},
                {"uniqueness_depth", w.uniqueness_depth}};
}

int run_constants(const GlobalOptions& g) {
    CriticalConstants cc = critical_constants(g.alphabet(), g.tolerance());
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    auto line = [&](const char* name, const PrecisionReal& v) {
        os << name << " = " << fmt_real(v) << " +/- " << format_decimal(v.radius(), 30) << "\n";
    };
    line("q_G", cc.q_G);
    line("q_KL", cc.q_KL);
    line("x_G", cc.x_G);
    line("x_KL", cc.x_KL);
    if (cc.kl_oracle)
        os << "# q_KL derived by the dimension-sign oracle; radius reflects its stall width\n";
    return 0;
}

int run_expand(const GlobalOptions& g, const std::string& xs, const std::string& qs, int n,
               const std::string& kind) {
    PrecisionReal x = g.real(xs), q = g.real(qs);
    ExpansionResult r;
    if (kind == "greedy")
        r = greedy_expand(x, q, n, g.alphabet());
    else if (kind == "quasi")
        r = quasi_greedy_expand(x, q, n, g.alphabet());
    else
        throw CLI::ValidationError("--kind must be greedy or quasi");
    Sink sink(g.out_path);
    sink.stream() << format_word(r.digits) << "\n";
    return 0;
}

int run_alpha(const GlobalOptions& g, const std::string& qs, int n) {
    ExpansionResult r = alpha_expansion(g.real(qs), n, g.alphabet());
    Sink sink(g.out_path);
    sink.stream() << format_word(r.digits) << "\n";
    return 0;
}

int run_invert(const GlobalOptions& g, const std::string& ds, const std::string& xs) {
    EventuallyPeriodicWord d = parse_sequence(ds, g.alphabet());
    PrecisionReal q = invert_base(d, g.real(xs), g.tolerance());
    Sink sink(g.out_path);
    sink.stream() << fmt_real(q) << " +/- " << format_decimal(q.radius(), 30) << "\n";
    return 0;
}

int run_dim_uq(const GlobalOptions& g, const std::string& qs, int N, int n, bool real_line) {
    DimensionEstimate e = real_line ? dim_real_Uq(g.real(qs), g.alphabet(), N, n)
                                    : dim_Uq(g.real(qs), g.alphabet(), N, n);
    Sink sink(g.out_path);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12f %.12f\n", e.lower, e.upper);
    sink.stream() << buf;
    return 0;
}

int run_dim_ux(const GlobalOptions& g, const std::string& xs, int N, int n) {
    DimensionEstimate e = dim_Ux(g.real(xs), g.alphabet(), N, n);
    Sink sink(g.out_path);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12f %.12f\n", e.lower, e.upper);
    sink.stream() << buf;
    return 0;
}

int run_staircase(const GlobalOptions& g, const std::string& kind_s, const std::string& from_s,
                  const std::string& to_s, int steps, int N, int n) {
    if (steps < 2) throw CLI::ValidationError("--steps must be at least 2");
    StaircaseKind kind;
    if (kind_s == "psi")
        kind = StaircaseKind::psi;
    else if (kind_s == "phi")
        kind = StaircaseKind::phi;
    else
        throw CLI::ValidationError("--kind must be psi or phi");
    Rational from = parse_decimal(from_s), to = parse_decimal(to_s);
    if (!(to > from)) throw CLI::ValidationError("--to must exceed --from");
    std::vector<Rational> grid;
    for (int i = 0; i < steps; ++i) grid.push_back(from + (to - from) * i / (steps - 1));
    auto rows = staircase_samples(kind, g.alphabet(), grid, N, n, g.job_count());
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    os << "abscissa,lower,upper\n";
    char buf[128];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.12f,%.12f\n",
                      format_decimal(row.abscissa, 12).c_str(), row.lower, row.upper);
        os << buf;
    }
    return 0;
}

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::full_dim: return "FULL_DIM";
    case Regime::positive_dim: return "POSITIVE_DIM";
    case Regime::countable: return "COUNTABLE";
    case Regime::singleton: return "SINGLETON";
    }
    return "?";
}

int run_classify(const GlobalOptions& g, const std::string& xs) {
    CriticalConstants cc = critical_constants(g.alphabet(), g.tolerance());
    RegimeClassification rc = classify(g.real(xs), g.alphabet(), cc);
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    if (g.format == "json") {
        json j{{"schema_version", "1"},
               {"x", xs},
               {"regime", regime_name(rc.regime)},
               {"x_KL", fmt_real(cc.x_KL)},
               {"x_G", fmt_real(cc.x_G)}};
        j["witnesses"] = json::array();
        for (const auto& w : rc.witnesses) j["witnesses"].push_back(witness_json(w));
        os << j.dump(2) << "\n";
    } else {
        os << regime_name(rc.regime) << "\n";
        for (const auto& w : rc.witnesses)
            os << "witness " << fmt_real(w.base) << " " << format_sequence(w.expansion) << "\n";
    }
    return 0;
}

int run_members(const GlobalOptions& g, const std::string& xs, const std::string& family, int k,
                int sample) {
    PrecisionReal x = g.real(xs);
    std::vector<MemberWitness> witnesses;
    if (family == "golden")
        witnesses = golden_tail_family(x, g.alphabet(), k, g.tolerance());
    else if (family == "dense")
        witnesses = dense_family(x, g.alphabet(), k, sample, g.seed, g.tolerance());
    else
        throw CLI::ValidationError("--family must be golden or dense");
    json j{{"schema_version", "1"}, {"x", xs}, {"family", family}};
    j["witnesses"] = json::array();
    for (const auto& w : witnesses) j["witnesses"].push_back(witness_json(w));
    Sink sink(g.out_path);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

int run_scan_ux(const GlobalOptions& g, const std::string& xs, int steps, int depth) {
    auto rows = enumerate_Ux(g.real(xs), g.alphabet(), steps, depth, std::nullopt, std::nullopt,
                             g.job_count());
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    os << "q_lo,q_hi,verdict\n";
    for (const auto& r : rows)
        os << format_decimal(r.q_lo, 12) << "," << format_decimal(r.q_hi, 12) << ","
           << (r.verdict == ScanVerdict::violated ? "VIOLATED" : "CANDIDATE") << "\n";
    return 0;
}

const char* family_name(CertificateFamily f) {
    switch (f) {
    case CertificateFamily::c_family: return "C";
    case CertificateFamily::d_family: return "D";
    case CertificateFamily::singleton: return "SINGLETON";
    }
    return "?";
}

int run_isolated(const GlobalOptions& g, const std::string& xs, int n_max, int k_max) {
    if (g.M != 1)
        throw DomainError("isolated: only the two-letter alphabet (M = 1) is supported");
    auto cert = isolate(g.real(xs), n_max, k_max, g.tolerance());
    Sink sink(g.out_path);
    if (!cert) {
        sink.stream() << json{{"schema_version", "1"}, {"x", xs}, {"found", false}}.dump(2) << "\n";
        return 0;
    }
    json j{{"schema_version", "1"},
           {"x", xs},
           {"found", true},
           {"p", fmt_real(cert->p)},
           {"p_radius", format_decimal(cert->p.radius(), 30)},
           {"n", cert->n},
           {"k", cert->k},
           {"family", family_name(cert->family)},
           {"expansion", format_sequence(cert->expansion)},
           {"match_length", cert->match_length}};
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

int run_iso_cover(const GlobalOptions& g, int n_max, int k_max) {
    if (g.M != 1)
        throw DomainError("iso-cover: only the two-letter alphabet (M = 1) is supported");
    auto rows = iso_intervals(n_max, k_max, g.tolerance(), g.job_count());
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    os << "lo,hi,n,k,family\n";
    for (const auto& r : rows)
        os << format_decimal(r.lo.value(), 15) << "," << format_decimal(r.hi.value(), 15) << ","
           << r.n << "," << r.k << "," << r.family << "\n";
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& suite) {
    std::vector<std::string> names =
        suite.empty() ? verify_suite_names() : std::vector<std::string>{suite};
    Sink sink(g.out_path);
    std::ostream& os = sink.stream();
    for (const std::string& name : names) {
        for (const CheckResult& r : run_verify_suite(name, g.seed)) {
            os << (r.pass ? "[ok]   " : "[FAIL] ") << r.id;
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            os << "\n";
            if (!r.pass) {
                std::cerr << "verify-paper: invariant failed: " << r.id << "\n";
                return 1;
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique expansions in non-integer bases: expansions, univoque bases,\n"
                 "dimension brackets and isolated-point certificates"};
    app.require_subcommand(1);
    GlobalOptions g;

    std::string xs = "1", qs = "2", ds, kind = "quasi", family = "golden";
    std::string from_s = "1.6", to_s = "2.0", suite;
    int n = 32, N = 16, nn = 48, steps = 50, depth = 40, k = 8, sample = 5;
    int n_max = 6, k_max = 8;

    CLI::App* c_constants = app.add_subcommand("constants", "critical bases and points");
    add_global_options(c_constants, g);

    CLI::App* c_expand = app.add_subcommand("expand", "greedy/quasi-greedy digit expansion");
    add_global_options(c_expand, g);
    c_expand->add_option("--x", xs, "the real to expand")->required();
    c_expand->add_option("--q", qs, "the base")->required();
    c_expand->add_option("--n", n, "number of digits");
    c_expand->add_option("--kind", kind, "greedy|quasi");

    CLI::App* c_alpha = app.add_subcommand("alpha", "quasi-greedy expansion of 1");
    add_global_options(c_alpha, g);
    c_alpha->add_option("--q", qs, "the base")->required();
    c_alpha->add_option("--n", n, "number of digits");

    CLI::App* c_invert = app.add_subcommand("invert", "solve pi_q(d) = x for the base q");
    add_global_options(c_invert, g);
    c_invert->add_option("--d", ds, "digit sequence, e.g. 11(01)")->required();
    c_invert->add_option("--x", xs, "target value")->required();

    CLI::App* c_dim_uq = app.add_subcommand("dim-uq", "dimension bracket of the unique-expansion set");
    add_global_options(c_dim_uq, g);
    c_dim_uq->add_option("--q", qs, "the base")->required();
    c_dim_uq->add_option("--N", N, "window length");
    c_dim_uq->add_option("--n", nn, "counting iterations");
    bool real_line = false;
    c_dim_uq->add_flag("--real-line", real_line, "divide by log q (dimension on the real line)");

    CLI::App* c_dim_ux = app.add_subcommand("dim-ux", "dimension bracket across bases for fixed x");
    add_global_options(c_dim_ux, g);
    c_dim_ux->add_option("--x", xs, "the point")->required();
    c_dim_ux->add_option("--N", N, "window length");
    c_dim_ux->add_option("--n", nn, "counting iterations");

    CLI::App* c_stair = app.add_subcommand("staircase", "staircase CSV over a grid");
    add_global_options(c_stair, g);
    c_stair->add_option("--kind", kind, "psi|phi")->required();
    c_stair->add_option("--from", from_s, "grid start")->required();
    c_stair->add_option("--to", to_s, "grid end")->required();
    c_stair->add_option("--steps", steps, "number of grid points");
    c_stair->add_option("--N", N, "window length");
    c_stair->add_option("--n", nn, "counting iterations");

    CLI::App* c_classify = app.add_subcommand("classify", "critical regime of x");
    add_global_options(c_classify, g);
    c_classify->add_option("--x", xs, "the point")->required();

    CLI::App* c_members = app.add_subcommand("members", "verified member witnesses");
    add_global_options(c_members, g);
    c_members->add_option("--x", xs, "the point")->required();
    c_members->add_option("--family", family, "golden|dense")->required();
    c_members->add_option("--k", k, "family depth (k_max for golden, window index for dense)");
    c_members->add_option("--sample", sample, "sample count for the dense family");

    CLI::App* c_scan = app.add_subcommand("scan-ux", "depth-bounded base scan for x");
    add_global_options(c_scan, g);
    c_scan->add_option("--x", xs, "the point")->required();
    c_scan->add_option("--steps", steps, "grid cells");
    c_scan->add_option("--depth", depth, "digits tested per cell");

    CLI::App* c_iso = app.add_subcommand("isolated", "isolated-base certificate for x");
    add_global_options(c_iso, g);
    c_iso->add_option("--x", xs, "the point (must exceed 1)")->required();
    c_iso->add_option("--n-max", n_max, "component search depth");
    c_iso->add_option("--k-max", k_max, "family search depth");

    CLI::App* c_cover = app.add_subcommand("iso-cover", "interval covers with isolated bases");
    add_global_options(c_cover, g);
    c_cover->add_option("--n-max", n_max, "component range");
    c_cover->add_option("--k-max", k_max, "family range");

    CLI::App* c_verify = app.add_subcommand("verify-paper", "run the built-in property suites");
    add_global_options(c_verify, g);
    c_verify->add_option("--suite", suite,
                         "words|expansion|solver|dimension|families|thue-morse|isolated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_constants)) return run_constants(g);
        if (app.got_subcommand(c_expand)) return run_expand(g, xs, qs, n, kind);
        if (app.got_subcommand(c_alpha)) return run_alpha(g, qs, n);
        if (app.got_subcommand(c_invert)) return run_invert(g, ds, xs);
        if (app.got_subcommand(c_dim_uq)) return run_dim_uq(g, qs, N, nn, real_line);
        if (app.got_subcommand(c_dim_ux)) return run_dim_ux(g, xs, N, nn);
        if (app.got_subcommand(c_stair)) return run_staircase(g, kind, from_s, to_s, steps, N, nn);
        if (app.got_subcommand(c_classify)) return run_classify(g, xs);
        if (app.got_subcommand(c_members)) return run_members(g, xs, family, k, sample);
        if (app.got_subcommand(c_scan)) return run_scan_ux(g, xs, steps, depth);
        if (app.got_subcommand(c_iso)) return run_isolated(g, xs, n_max, k_max);
        if (app.got_subcommand(c_cover)) return run_iso_cover(g, n_max, k_max);
        if (app.got_subcommand(c_verify)) return run_verify(g, suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
