#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "divfree/divfree.hpp"

namespace {

using namespace divfree;

constexpr int kExitAnalysis = 2;
constexpr int kExitParse = 3;

struct CommonOptions {
    std::string file;
    std::string format = "json";
    std::string vars;
    unsigned long seed = 1;
    std::size_t budget = 200;
    std::size_t cap = 8;
    bool timing = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

InputDocument load_document(const CommonOptions& opts) {
    std::vector<std::string> override_names;
    if (!opts.vars.empty()) override_names = detail::split_names(opts.vars);
    return parse_input_document(read_file(opts.file), override_names);
}

ReportFormat format_of(const CommonOptions& opts) {
    if (opts.format == "json") return ReportFormat::Json;
    if (opts.format == "text") return ReportFormat::Text;
    throw ParseError("unknown format '" + opts.format + "' (expected json or text)", 0, 0);
}

PlaneDivisor divisor_of(const InputDocument& doc) {
    switch (doc.kind) {
        case InputDocument::Kind::Divisor:
            return make_divisor(doc.body.front());
        case InputDocument::Kind::Arrangement:
            return arrangement_divisor(make_arrangement(doc.body));
        case InputDocument::Kind::Ideal:
            throw AnalysisError("this command needs a divisor: or lines: input, not an ideal");
    }
    throw AnalysisError("unreachable input kind");
}

// Generator tuple for syzygies/resolve: the Jacobian tuple of a divisor or
// the ideal generators themselves. Works in any number of variables.
std::vector<Polynomial> generator_tuple(const InputDocument& doc) {
    if (doc.kind == InputDocument::Kind::Ideal) return doc.body;
    Polynomial f = doc.kind == InputDocument::Kind::Divisor ? doc.body.front()
                                                            : product(doc.body, doc.context);
    if (!f.is_homogeneous() || f.is_zero())
        throw AnalysisError("the defining polynomial must be homogeneous and nonzero");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < doc.context->size(); ++i) out.push_back(f.derivative(i));
    return out;
}

void finish(Report report, const CommonOptions& opts,
            std::chrono::steady_clock::time_point start) {
    if (opts.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::cout << emit_report(report, format_of(opts));
}

AnalyzeOptions analyze_options(const CommonOptions& opts) {
    AnalyzeOptions a;
    a.search.max_trials = opts.budget;
    a.search.seed = opts.seed;
    a.seed = opts.seed;
    a.resolution_cap = opts.cap;
    return a;
}

int cmd_freeness(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    PlaneDivisor d = divisor_of(doc);
    FreenessReport r = analyze_freeness(d, analyze_options(opts));
    Report report = report_header("freeness", doc, opts.seed);
    report["analysis"] = freeness_to_json(r);
    finish(std::move(report), opts, start);
    return 0;
}

int cmd_syzygies(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    std::vector<Polynomial> gens = generator_tuple(doc);
    SyzygyMatrix m = first_syzygies(gens);

    Report report = report_header("syzygies", doc, opts.seed);
    Report body;
    body["generators"] = reportdetail::polys_to_json(gens);
    body["syzygy_matrix"] = reportdetail::matrix_to_json(m);
    Report degs = Report::array();
    for (unsigned d : m.column_degrees) degs.push_back(d);
    body["syzygy_degrees"] = std::move(degs);

    // Brute-force slice dimensions when the generators share one degree.
    bool common = true;
    for (const auto& g : gens)
        if (g.homogeneous_degree() != gens.front().homogeneous_degree()) common = false;
    if (common && !m.column_degrees.empty()) {
        const unsigned top = *std::max_element(m.column_degrees.begin(), m.column_degrees.end()) + 1;
        BruteForceSyzygies bf = brute_force_syzygies(gens, top);
        Report dims = Report::array();
        for (std::size_t d : bf.dimensions) dims.push_back(d);
        body["brute_force_dimensions"] = std::move(dims);
    }
    report["analysis"] = std::move(body);
    finish(std::move(report), opts, start);
    return 0;
}

int cmd_regular_syzygy(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    PlaneDivisor d = divisor_of(doc);
    SyzygyMatrix m = first_syzygies(jacobian_ideal(d));
    SearchConfig config;
    config.max_trials = opts.budget;
    config.seed = opts.seed;
    SearchOutcome outcome = find_regular_syzygy(d, m, config);

    Report report = report_header("regular-syzygy", doc, opts.seed);
    Report body;
    body["syzygy_matrix"] = reportdetail::matrix_to_json(m);
    body["search"] = reportdetail::search_to_json(outcome);
    report["analysis"] = std::move(body);
    finish(std::move(report), opts, start);
    return 0;
}

int cmd_locus(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    if (doc.kind != InputDocument::Kind::Arrangement)
        throw AnalysisError("locus needs a lines: input");
    LineArrangement a = make_arrangement(doc.body);
    SingularLocus locus = singular_locus(a);
    NearPencilReport np = near_pencil_detect(a, locus);

    Report report = report_header("locus", doc, opts.seed);
    Report body = reportdetail::locus_to_json(locus);
    body["near_pencil"] = np.detected;
    if (np.linear_syzygy)
        body["linear_syzygy"] = reportdetail::syzygy_to_json(*np.linear_syzygy);
    report["analysis"] = std::move(body);
    finish(std::move(report), opts, start);
    return 0;
}

int cmd_bounds(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    if (doc.kind != InputDocument::Kind::Arrangement)
        throw AnalysisError("bounds needs a lines: input");
    PlaneDivisor d = divisor_of(doc);
    FreenessReport r = analyze_freeness(d, analyze_options(opts));

    Report report = report_header("bounds", doc, opts.seed);
    Report body;
    body["is_free"] = r.is_free;
    body["radical_degree"] = r.locus ? Report(r.locus->degree) : Report(nullptr);
    body["near_pencil"] = r.near_pencil;
    body["bounds"] = r.bounds ? reportdetail::bounds_to_json(*r.bounds) : Report(nullptr);
    report["analysis"] = std::move(body);
    finish(std::move(report), opts, start);
    return 0;
}

int cmd_resolve(const CommonOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    InputDocument doc = load_document(opts);
    std::vector<Polynomial> gens = generator_tuple(doc);
    GradedResolution res = free_resolution(gens, ResolveOptions{opts.cap, {}});

    Report report = report_header("resolve", doc, opts.seed);
    report["analysis"] = resolution_to_json(res);
    finish(std::move(report), opts, start);
    return 0;
}

// ---------------------------------------------------------------------------
// verify-corpus: the full example suite with frozen expectations
// ---------------------------------------------------------------------------

struct CorpusFailure {};

void expect(bool ok, const std::string& what, const std::string& entry, bool& entry_ok) {
    if (!ok) {
        std::cout << "  MISMATCH [" << entry << "] " << what << "\n";
        entry_ok = false;
    }
}

int cmd_verify_corpus(const std::string& dir, unsigned long seed) {
    bool all_ok = true;
    auto load = [&](const std::string& name) {
        return parse_input_document(read_file(dir + "/" + name));
    };
    AnalyzeOptions opts;
    opts.seed = seed;
    opts.search.seed = seed;

    auto run_entry = [&](const std::string& name, auto&& body) {
        bool entry_ok = true;
        try {
            body(entry_ok);
        } catch (const std::exception& e) {
            std::cout << "  ERROR [" << name << "] " << e.what() << "\n";
            entry_ok = false;
        }
        std::cout << (entry_ok ? "OK   " : "FAIL ") << name << "\n";
        all_ok = all_ok && entry_ok;
    };

    run_entry("braid.arr", [&](bool& ok) {
        InputDocument doc = load("braid.arr");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.is_free, "is_free", "braid", ok);
        expect(r.exponents == std::optional<std::vector<unsigned>>({1, 2, 3}), "exponents {1,2,3}",
               "braid", ok);
        expect(r.locus && r.locus->degree == 7, "radical degree 7", "braid", ok);
        expect(r.locus && r.locus->alpha == 3, "alpha 3", "braid", ok);
        expect(r.quasihomogeneity && r.quasihomogeneity->quasihomogeneous &&
                   r.quasihomogeneity->tjurina_total == 19,
               "tjurina 19, quasihomogeneous", "braid", ok);
        expect(r.regular_syzygy_search.status == SearchStatus::Found &&
                   r.regular_syzygy_search.witness->degree == 3,
               "degree-3 regular syzygy", "braid", ok);
        expect(!r.near_pencil, "not a near-pencil", "braid", ok);
        expect(r.bounds && r.bounds->regular_degree_bound &&
                   r.bounds->regular_degree_bound->satisfied,
               "7 <= 13", "braid", ok);
        expect(r.bounds && r.bounds->alpha_beta_bound && r.bounds->alpha_beta_bound->attained,
               "alpha = beta + 1 attained", "braid", ok);
        expect(variety_identity_check(d, r.syzygy_matrix).holds, "variety identity", "braid", ok);
    });

    run_entry("xyz.arr", [&](bool& ok) {
        InputDocument doc = load("xyz.arr");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.is_free, "is_free", "xyz", ok);
        expect(r.exponents == std::optional<std::vector<unsigned>>({1, 1, 1}), "exponents {1,1,1}",
               "xyz", ok);
        expect(r.locus && r.locus->degree == 3 && r.locus->alpha == 2, "locus 3, alpha 2", "xyz", ok);
        expect(r.near_pencil, "near-pencil", "xyz", ok);
        expect(variety_identity_check(d, r.syzygy_matrix).holds, "variety identity", "xyz", ok);
    });

    for (unsigned n : {4u, 5u, 6u}) {
        const std::string name = "near_pencil_" + std::to_string(n) + ".arr";
        run_entry(name, [&](bool& ok) {
            InputDocument doc = load(name);
            PlaneDivisor d = divisor_of(doc);
            FreenessReport r = analyze_freeness(d, opts);
            expect(r.is_free, "is_free", name, ok);
            expect(r.locus && r.locus->degree == n, "locus degree n", name, ok);
            expect(r.near_pencil, "near-pencil detected", name, ok);
            std::vector<Polynomial> theta{
                Polynomial::variable(doc.context, 0), Polynomial::variable(doc.context, 1),
                Polynomial::variable(doc.context, 2).scale(-Rational(static_cast<long>(n - 1)))};
            Syzygy s = derivation_to_syzygy(theta, d);
            expect(s.components == theta, "derivation gives (x, y, -(n-1)z)", name, ok);
            expect(s.regular, "the linear syzygy is regular", name, ok);
            expect(r.bounds && !r.bounds->regular_degree_bound &&
                       r.bounds->regular_degree_bound_refused_d1,
                   "degree bound refuses d = 1", name, ok);
        });
    }

    run_entry("braid_sub.arr", [&](bool& ok) {
        InputDocument doc = load("braid_sub.arr");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.is_free, "is_free", "braid_sub", ok);
        expect(r.exponents == std::optional<std::vector<unsigned>>({1, 2, 2}), "exponents {1,2,2}",
               "braid_sub", ok);
        expect(r.regular_syzygy_search.status == SearchStatus::Found &&
                   r.regular_syzygy_search.witness->degree == 2,
               "degree-2 regular syzygy", "braid_sub", ok);
    });

    run_entry("conic_tangent.div", [&](bool& ok) {
        InputDocument doc = load("conic_tangent.div");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.is_free, "is_free", "conic_tangent", ok);
        expect(r.quasihomogeneity && r.quasihomogeneity->quasihomogeneous, "quasihomogeneous",
               "conic_tangent", ok);
        expect(r.regular_syzygy_search.status == SearchStatus::Found &&
                   r.regular_syzygy_search.witness->degree == 1,
               "degree-1 regular syzygy", "conic_tangent", ok);
        GroebnerBasis jf = reduced_groebner_basis(jacobian_ideal(d));
        std::vector<Polynomial> expected{
            parse_polynomial("x*y", doc.context), parse_polynomial("x^2+2*y*z", doc.context),
            parse_polynomial("y^2", doc.context)};
        expect(ideal_equal(jf.generators, expected), "J_F = <xy, x^2+2yz, y^2>", "conic_tangent", ok);
    });

    run_entry("four_lines_conic.div", [&](bool& ok) {
        InputDocument doc = load("four_lines_conic.div");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.is_free, "is_free", "four_lines_conic", ok);
        expect(r.quasihomogeneity && r.quasihomogeneity->tjurina_total == 19 &&
                   r.quasihomogeneity->milnor_total == 20 &&
                   !r.quasihomogeneity->quasihomogeneous,
               "tjurina 19, milnor 20, not quasihomogeneous", "four_lines_conic", ok);
        expect(r.regular_syzygy_search.status == SearchStatus::NoneCertified,
               "definitive negative via entry-ideal height", "four_lines_conic", ok);
        std::vector<unsigned> degs = r.syzygy_matrix.column_degrees;
        std::sort(degs.begin(), degs.end());
        expect(degs == std::vector<unsigned>({2, 3}), "resolution shifts {-7,-8} over R^3(-5)",
               "four_lines_conic", ok);
    });

    run_entry("smooth_conic.div", [&](bool& ok) {
        InputDocument doc = load("smooth_conic.div");
        PlaneDivisor d = divisor_of(doc);
        FreenessReport r = analyze_freeness(d, opts);
        expect(r.smooth && r.is_free, "smooth, free by convention", "smooth_conic", ok);
        expect(r.quasihomogeneity && r.quasihomogeneity->tjurina_total == 0 &&
                   r.quasihomogeneity->milnor_total == 0,
               "empty singular scheme", "smooth_conic", ok);
    });

    run_entry("p3_arrangement.div", [&](bool& ok) {
        InputDocument doc = load("p3_arrangement.div");
        std::vector<Polynomial> gens = generator_tuple(doc);
        expect(ideal_height(gens) == 2, "height 2", "p3_arrangement", ok);
        GradedResolution res = free_resolution(gens);
        BettiTable bt = betti_table(res);
        expect(bt.projective_dimension() == 4, "projective dimension 4 (not free)", "p3_arrangement",
               ok);
        expect(bt.shifts ==
                   std::vector<std::vector<unsigned>>({{0}, {4, 4, 4, 4}, {6, 6, 6, 6, 6, 6},
                                                       {7, 7, 7, 7}, {8}}),
               "golden Betti table", "p3_arrangement", ok);
    });

    std::cout << (all_ok ? "corpus: all entries verified\n" : "corpus: mismatches found\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact freeness analysis for reduced plane divisors and line arrangements"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string corpus_dir = "corpus";

    auto add_common = [&](CLI::App* cmd, bool wants_file = true) {
        if (wants_file) cmd->add_option("file", opts.file, "input file")->required();
        cmd->add_option("--format", opts.format, "output format: json or text");
        cmd->add_option("--vars", opts.vars, "override variable names, comma separated");
        cmd->add_option("--seed", opts.seed, "seed for seeded searches and coordinate changes");
        cmd->add_flag("--timing", opts.timing, "include wall-clock timing in the report");
    };

    CLI::App* freeness = app.add_subcommand("freeness", "full freeness report for a divisor");
    add_common(freeness);
    CLI::App* syzygies = app.add_subcommand("syzygies", "minimal first syzygies of the Jacobian tuple");
    add_common(syzygies);
    CLI::App* regular = app.add_subcommand("regular-syzygy", "search for a regular syzygy");
    add_common(regular);
    regular->add_option("--budget", opts.budget, "trial budget for the search");
    CLI::App* locus = app.add_subcommand("locus", "singular locus of a line arrangement");
    add_common(locus);
    CLI::App* bounds = app.add_subcommand("bounds", "degree bounds and non-freeness criteria");
    add_common(bounds);
    bounds->add_option("--budget", opts.budget, "trial budget for the regular-syzygy search");
    CLI::App* resolve = app.add_subcommand("resolve", "minimal graded free resolution");
    add_common(resolve);
    resolve->add_option("--cap", opts.cap, "maximum resolution length");
    CLI::App* verify = app.add_subcommand("verify-corpus", "run the bundled example corpus");
    verify->add_option("--dir", corpus_dir, "corpus directory");
    verify->add_option("--seed", opts.seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (freeness->parsed()) return cmd_freeness(opts);
        if (syzygies->parsed()) return cmd_syzygies(opts);
        if (regular->parsed()) return cmd_regular_syzygy(opts);
        if (locus->parsed()) return cmd_locus(opts);
        if (bounds->parsed()) return cmd_bounds(opts);
        if (resolve->parsed()) return cmd_resolve(opts);
        if (verify->parsed()) return cmd_verify_corpus(corpus_dir, opts.seed);
    } catch (const divfree::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const divfree::AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
