#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sqcomp/analysis.hpp"
#include "sqcomp/constructors.hpp"
#include "sqcomp/counting.hpp"
#include "sqcomp/lemma_engine.hpp"
#include "sqcomp/optimizer.hpp"
#include "sqcomp/report.hpp"
#include "sqcomp/sequence_io.hpp"
#include "sqcomp/verify/acceptance.hpp"

namespace sqcomp::cli {

namespace {

// Thrown for bad combinations of otherwise well-formed flags.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned threads = 1;
    std::string out;
    std::string emit = "text";
    std::uint64_t seed = acceptance::kDefaultSeed;
};

struct InputOptions {
    std::string seq;
    u64 greedy_limit = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--seq", in.seq, "sequence file to read W from");
    cmd->add_option("--greedy-limit", in.greedy_limit, "use greedy_complement(L) as W instead of a file");
}

ComplementCandidate read_input_file(const std::string& path) {
    if (!std::filesystem::is_regular_file(path))
        throw UsageError("cannot read sequence file " + path);
    return load_sequence(path);
}

ComplementCandidate load_input(const InputOptions& in) {
    if (!in.seq.empty() && in.greedy_limit != 0)
        throw UsageError("give either --seq or --greedy-limit, not both");
    if (!in.seq.empty())
        return read_input_file(in.seq);
    if (in.greedy_limit != 0)
        return greedy_complement(in.greedy_limit);
    throw UsageError("an input sequence is required (--seq FILE or --greedy-limit L)");
}

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutDirEnv); dir && *dir)
            return std::filesystem::path(dir) / p;
    }
    return p;
}

void write_output(const Globals& g, std::ostream& out, const std::string& text) {
    if (g.out.empty()) {
        out << text;
        return;
    }
    const auto path = resolve_out(g.out);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + path.string());
    file << text;
}

bool emit_csv(const Globals& g) {
    return g.emit == "csv";
}

// --- construct -----------------------------------------------------------

struct ConstructOptions {
    bool greedy = false;
    bool unit = false;
    bool quadratic = false;
    std::string repair;
    u64 limit = 0;
    u64 n_max = 0;
    long double c = kQuadraticModelConstant;
    std::string rounding = "ceil";
};

int do_construct(const Globals& g, const ConstructOptions& o, std::ostream& out, std::ostream& err) {
    const int modes = int(o.greedy) + int(o.unit) + int(o.quadratic) + int(!o.repair.empty());
    if (modes != 1)
        throw UsageError("construct needs exactly one of --greedy, --unit, --quadratic, --repair");
    ComplementCandidate w;
    if (o.quadratic) {
        if (o.n_max == 0)
            throw UsageError("--quadratic needs --n-max");
        static const std::map<std::string, Rounding> kRounding{
            {"ceil", Rounding::ceil}, {"floor", Rounding::floor}, {"nearest", Rounding::nearest}};
        w = quadratic_model(o.n_max, o.c, kRounding.at(o.rounding));
    } else {
        if (o.limit == 0)
            throw UsageError("construct needs --limit N >= 1");
        if (o.greedy)
            w = greedy_complement(o.limit, GreedyStrategy::largest_square);
        else if (o.unit)
            w = greedy_complement(o.limit, GreedyStrategy::unit_square);
        else {
            const auto base = read_input_file(o.repair);
            w = repair_to_complement(base, o.limit);
            err << "repair added " << (w.size() - base.size()) << " elements\n";
        }
    }
    std::ostringstream text;
    write_sequence(text, w);
    write_output(g, out, text.str());
    return kExitOk;
}

// --- count ---------------------------------------------------------------

struct CountOptions {
    InputOptions input;
    std::vector<u64> at;
    u64 limit = 0;
    bool per_n = false;
};

int do_count(const Globals& g, const CountOptions& o, std::ostream& out, std::ostream& err) {
    const auto w = load_input(o.input);
    std::vector<u64> limits = o.at;
    if (o.limit != 0)
        limits.insert(limits.begin(), o.limit);
    if (limits.empty())
        throw UsageError("count needs --limit N or --at N1,N2,...");

    bool ok = true;
    for (u64 n : limits) {
        if (!sum_identity_check(w, n)) {
            err << "sum identity failed at N=" << n << "\n";
            ok = false;
        }
    }
    if (o.per_n) {
        if (limits.size() != 1)
            throw UsageError("--per-n takes a single --limit");
        write_output(g, out, counts_csv(representation_profile(w, limits.front(), g.threads)));
        return ok ? kExitOk : kExitCheckFailed;
    }
    std::vector<CountingSummary> rows;
    for (u64 n : limits)
        rows.push_back(summarize(w, n, g.threads));
    std::string text;
    if (emit_csv(g)) {
        text = summary_csv(rows);
    } else {
        for (const auto& r : rows)
            text += to_text(r) + "\n";
    }
    write_output(g, out, text);
    return ok ? kExitOk : kExitCheckFailed;
}

// --- coverage ------------------------------------------------------------

struct CoverageOptions {
    InputOptions input;
    u64 limit = 0;
};

int do_coverage(const Globals& g, const CoverageOptions& o, std::ostream& out) {
    if (o.limit == 0)
        throw UsageError("coverage needs --limit N >= 1");
    const auto report = coverage_report(load_input(o.input), o.limit);
    write_output(g, out, emit_csv(g) ? to_csv(report) : to_text(report));
    return kExitOk;
}

// --- lemma / pipeline ----------------------------------------------------

struct LemmaOptions {
    InputOptions input;
    double delta = kReferenceDelta;
    double delta0 = kReferenceDelta0;
    u64 limit = 0;
};

int do_lemma(const Globals& g, const LemmaOptions& o, std::ostream& out) {
    if (o.limit == 0)
        throw UsageError("lemma needs --limit N");
    const auto d = load_input(o.input);
    const auto params = LemmaParameters::make(o.delta, o.delta0, o.limit);
    const auto report = verify_lemma(d, params);
    std::string text;
    if (emit_csv(g)) {
        CsvTable table({"lhs", "rhs", "holds", "witnesses", "degenerate", "witnesses_valid"});
        table.add_row({std::to_string(report.lhs), std::to_string(report.rhs), report.holds ? "true" : "false",
                       std::to_string(report.witnesses.size()), std::to_string(report.degenerate),
                       report.witnesses_valid ? "true" : "false"});
        text = table.str();
    } else {
        text = to_text(report, params);
    }
    write_output(g, out, text);
    return report.holds && report.witnesses_valid ? kExitOk : kExitCheckFailed;
}

int do_pipeline(const Globals& g, const LemmaOptions& o, std::ostream& out) {
    if (o.limit == 0)
        throw UsageError("pipeline needs --limit N");
    const auto report = decomposition_pipeline(load_input(o.input), o.delta, o.delta0, o.limit, g.threads);
    write_output(g, out, emit_csv(g) ? per_class_csv(report) : to_text(report));
    return report.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

// --- optimize ------------------------------------------------------------

struct OptimizeOptions {
    int grid = 2000;
    int refine = 3;
    std::optional<double> delta0;
    bool reference = false;
};

int do_optimize(const Globals& g, const OptimizeOptions& o, std::ostream& out) {
    const auto best = o.delta0 ? optimize_at_delta0(*o.delta0) : optimize_constants(o.grid, o.refine, g.threads);
    std::string text;
    if (emit_csv(g)) {
        text = result_csv_header() + result_csv_row(best);
        if (o.reference)
            text += result_csv_row(evaluate_point(kReferenceDelta, kReferenceDelta0));
    } else {
        text = to_text(best);
        if (o.reference) {
            const auto ref = evaluate_point(kReferenceDelta, kReferenceDelta0);
            text += "reference_delta: " + format_real(ref.delta) + "\nreference_delta0: " + format_real(ref.delta0) +
                    "\nreference_objective: " + format_real(ref.objective) +
                    "\nreference_feasible: " + (ref.feasible ? "true" : "false") + "\n";
        }
    }
    write_output(g, out, text);
    return best.feasible ? kExitOk : kExitCheckFailed;
}

// --- analyze -------------------------------------------------------------

struct AnalyzeOptions {
    bool em_check = false;
    u64 max_n = 10'000;
    u64 residual_max_n = 10'000;
    u64 single = 0;
};

int do_analyze(const Globals& g, const AnalyzeOptions& o, std::ostream& out) {
    if (o.single != 0) {
        StructuredText text;
        text.add("N", o.single);
        text.add("circle_sum", circle_sum(o.single));
        if (is_square(o.single)) {
            text.add("margin", em_bound_margin(o.single));
            text.add("residual", em_identity_residual(o.single));
        } else {
            text.add("margin_relaxed_experimental", em_bound_margin_relaxed(o.single));
        }
        write_output(g, out, text.str());
        return kExitOk;
    }
    if (!o.em_check)
        throw UsageError("analyze needs --em-check or --n N");
    const auto rows = em_sweep(o.max_n, std::min(o.residual_max_n, o.max_n), g.threads);
    bool ok = true;
    double min_margin = rows.empty() ? 0.0 : rows.front().margin;
    double max_residual = 0.0;
    double min_integral = 0.0;
    bool have_integral = false;
    for (const auto& r : rows) {
        ok = ok && r.margin >= 0.0;
        min_margin = std::min(min_margin, r.margin);
        if (r.residual) {
            ok = ok && *r.residual <= 1e-7;
            max_residual = std::max(max_residual, *r.residual);
        }
        if (r.min_integral) {
            ok = ok && *r.min_integral >= -1e-12;
            min_integral = have_integral ? std::min(min_integral, *r.min_integral) : *r.min_integral;
            have_integral = true;
        }
    }
    std::string text;
    if (emit_csv(g)) {
        text = em_csv(rows);
    } else {
        StructuredText t;
        t.add("squares_checked", static_cast<u64>(rows.size()));
        t.add("min_margin", min_margin);
        t.add("max_residual", max_residual);
        t.add("min_integral", min_integral);
        t.add("all_checks_pass", ok);
        text = t.str();
    }
    write_output(g, out, text);
    return ok ? kExitOk : kExitCheckFailed;
}

// --- gaps ----------------------------------------------------------------

struct GapsOptions {
    InputOptions input;
    u64 quadratic_n_max = 0;
    u64 n_max = 0;
    bool long_format = false;
    bool bound_check = false;
    double gamma = 0.0;
    double sigma = 0.0;
    u64 x = 0;
};

int do_gaps(const Globals& g, const GapsOptions& o, std::ostream& out) {
    const auto w = o.quadratic_n_max != 0 ? quadratic_model(o.quadratic_n_max) : load_input(o.input);
    if (o.bound_check) {
        if (o.x == 0)
            throw UsageError("--bound-check needs --x");
        const auto r = conditional_count_bound_check(w, o.gamma, o.sigma, o.x);
        StructuredText t;
        t.add("gamma", o.gamma);
        t.add("sigma", o.sigma);
        t.add("x", o.x);
        t.add("count", r.count);
        t.add("bound", r.bound);
        t.add("hypothesis_holds_up_to_x", r.hypothesis_holds_up_to_x);
        t.add("bound_holds", r.bound_holds);
        t.add("implication_holds", r.implication_holds());
        write_output(g, out, t.str());
        return r.implication_holds() ? kExitOk : kExitCheckFailed;
    }
    const u64 n_max = o.n_max != 0 ? o.n_max : w.size();
    const auto stats = gap_statistics(w, n_max);
    std::string text;
    if (o.long_format) {
        text = gap_long_csv(stats);
    } else if (emit_csv(g)) {
        text = gap_csv(stats);
    } else {
        StructuredText t;
        t.add("n_max", stats.n_max);
        t.add("final_running_max", stats.running_max.empty() ? 0.0 : stats.running_max.back());
        t.add("reference_low", stats.reference_low);
        t.add("reference_high", stats.reference_high);
        t.add("exceeds_reference_high", !stats.running_max.empty() && stats.running_max.back() > stats.reference_high);
        text = t.str();
    }
    write_output(g, out, text);
    for (std::size_t i = 1; i < stats.running_max.size(); ++i)
        if (stats.running_max[i] < stats.running_max[i - 1])
            return kExitCheckFailed;
    return kExitOk;
}

// --- accept --------------------------------------------------------------

int do_accept(const Globals& g, const std::string& artifacts, std::ostream& out) {
    acceptance::Options opts;
    opts.threads = g.threads;
    opts.seed = g.seed;
    std::vector<acceptance::CriterionResult> results;
    std::ostringstream lines;
    const bool ok = acceptance::run_all(opts, lines, &results);
    write_output(g, out, lines.str());
    if (!artifacts.empty()) {
        const auto dir = resolve_out(artifacts);
        std::filesystem::create_directories(dir);
        for (const auto& r : results) {
            std::ofstream f(dir / ("criterion_" + std::to_string(r.id) + ".csv"), std::ios::binary);
            f << r.csv;
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive complements of the squares: construction, counting and verification"};
    app.name("sqcomp");
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; flags override it");

    Globals g;
    app.add_option("--threads", g.threads, "worker threads for data-parallel stages")->check(CLI::Range(1u, 256u));
    app.add_option("--out", g.out, "output path (default: standard output)");
    app.add_option("--emit", g.emit, "output format")->check(CLI::IsMember({"csv", "text"}));
    app.add_option("--seed", g.seed, "seed for randomized harnesses");

    ConstructOptions construct;
    auto* c_construct = app.add_subcommand("construct", "build a complement candidate");
    c_construct->add_flag("--greedy", construct.greedy, "greedy, subtracting the largest square");
    c_construct->add_flag("--unit", construct.unit, "greedy, subtracting 1");
    c_construct->add_flag("--quadratic", construct.quadratic, "round(c n^2) for n <= n_max");
    c_construct->add_option("--repair", construct.repair, "sequence file to repair into a complement of [1, N]");
    c_construct->add_option("--limit", construct.limit, "cover [1, N]");
    c_construct->add_option("--n-max", construct.n_max, "number of quadratic terms");
    c_construct->add_option("--c", construct.c, "quadratic coefficient (default pi^2/16)");
    c_construct->add_option("--rounding", construct.rounding)->check(CLI::IsMember({"ceil", "floor", "nearest"}));

    CountOptions count;
    auto* c_count = app.add_subcommand("count", "representation counts and summaries");
    add_input_options(c_count, count.input);
    c_count->add_option("--limit", count.limit, "N");
    c_count->add_option("--at", count.at, "several N, comma separated")->delimiter(',');
    c_count->add_flag("--per-n", count.per_n, "emit n,count for every n <= N");

    CoverageOptions coverage;
    auto* c_coverage = app.add_subcommand("coverage", "uncovered integers of [0, N]");
    add_input_options(c_coverage, coverage.input);
    c_coverage->add_option("--limit", coverage.limit, "N");

    LemmaOptions lemma;
    auto* c_lemma = app.add_subcommand("lemma", "check the residue-family inequality on one family D");
    add_input_options(c_lemma, lemma.input);
    c_lemma->add_option("--delta", lemma.delta);
    c_lemma->add_option("--delta0", lemma.delta0);
    c_lemma->add_option("--limit", lemma.limit, "N");

    LemmaOptions pipeline;
    auto* c_pipeline = app.add_subcommand("pipeline", "residue-class decomposition of the excess");
    add_input_options(c_pipeline, pipeline.input);
    c_pipeline->add_option("--delta", pipeline.delta);
    c_pipeline->add_option("--delta0", pipeline.delta0);
    c_pipeline->add_option("--limit", pipeline.limit, "N");

    OptimizeOptions optimize;
    auto* c_optimize = app.add_subcommand("optimize", "maximize (4/pi) sqrt(delta0) - 8 delta");
    c_optimize->add_option("--grid", optimize.grid, "grid steps per axis")->check(CLI::Range(100, 1'000'000));
    c_optimize->add_option("--refine", optimize.refine, "refinement rounds")->check(CLI::Range(0, 60));
    c_optimize->add_option("--delta0", optimize.delta0, "hold delta0 fixed and optimize delta only");
    c_optimize->add_flag("--reference", optimize.reference, "also report the point (0.022, 0.084)");

    AnalyzeOptions analyze;
    auto* c_analyze = app.add_subcommand("analyze", "circle-sum bound and identity checks");
    c_analyze->add_flag("--em-check", analyze.em_check, "sweep every square N <= max-n");
    c_analyze->add_option("--max-n", analyze.max_n);
    c_analyze->add_option("--residual-max-n", analyze.residual_max_n, "identity residuals only up to here");
    c_analyze->add_option("--n", analyze.single, "report a single N");

    GapsOptions gaps;
    auto* c_gaps = app.add_subcommand("gaps", "gap functional (pi^2/16 n^2 - w_n)/n");
    add_input_options(c_gaps, gaps.input);
    c_gaps->add_option("--quadratic-n-max", gaps.quadratic_n_max, "use the ceil quadratic model with this many terms");
    c_gaps->add_option("--n-max", gaps.n_max);
    c_gaps->add_flag("--long", gaps.long_format, "series,n,value rows for plotting");
    c_gaps->add_flag("--bound-check", gaps.bound_check, "run the conditional counting bound check");
    c_gaps->add_option("--gamma", gaps.gamma);
    c_gaps->add_option("--sigma", gaps.sigma);
    c_gaps->add_option("--x", gaps.x);

    std::string artifacts;
    auto* c_accept = app.add_subcommand("accept", "run every acceptance criterion");
    c_accept->add_option("--artifacts", artifacts, "directory for per-criterion CSV artifacts");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (c_construct->parsed())
            return do_construct(g, construct, out, err);
        if (c_count->parsed())
            return do_count(g, count, out, err);
        if (c_coverage->parsed())
            return do_coverage(g, coverage, out);
        if (c_lemma->parsed())
            return do_lemma(g, lemma, out);
        if (c_pipeline->parsed())
            return do_pipeline(g, pipeline, out);
        if (c_optimize->parsed())
            return do_optimize(g, optimize, out);
        if (c_analyze->parsed())
            return do_analyze(g, analyze, out);
        if (c_gaps->parsed())
            return do_gaps(g, gaps, out);
        if (c_accept->parsed())
            return do_accept(g, artifacts, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "malformed sequence file: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace sqcomp::cli
