#include "mckayq/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mckayq;

namespace {

enum Exit {
    Ok = 0,
    Usage = 2,
    NotSmall = 3,
    NotSurjective = 4,
    NotSplit = 5,
    TooLarge = 6,
    AmbiguousExit = 7,
    Internal = 8,
    SelftestFailed = 9,
};

JobSpec load_job(std::string const& source)
{
    if (source.rfind("catalog:", 0) == 0) return catalog_entry(source.substr(8)).job;
    std::ifstream in(source);
    if (!in) throw JobParseError("cannot open " + source);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_job(ss.str());
}

void write_out(std::string const& path, std::string const& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct AnalyzeArgs {
    std::string source;
    std::string json_path;
    std::string dot_path;
    bool explain = false;
    bool show_nu = false;
    std::size_t cap = 0;
    int saturation = -1;
    long norm_bound = -1;
};

int run_analyze(AnalyzeArgs const& a)
{
    JobSpec job = load_job(a.source);
    if (a.cap) job.cap = a.cap;
    if (a.saturation >= 0) job.skew.saturation_iterations = a.saturation;
    if (a.norm_bound >= 0) job.skew.norm_search_bound = a.norm_bound;
    Report r = analyze(job);
    bool any = false;
    if (!a.json_path.empty()) {
        write_out(a.json_path, report_json(r));
        any = true;
    }
    if (!a.dot_path.empty() && r.quiver) {
        write_out(a.dot_path, emit_dot(*r.quiver, a.show_nu));
        any = true;
    }
    if (a.explain) {
        std::cout << explain_text(r);
        any = true;
    }
    if (!any) std::cout << report_json(r);
    if (r.ambiguous()) {
        std::cerr << "ambiguous: some multiplicity a stays undetermined; see candidates in the report\n";
        return AmbiguousExit;
    }
    return Ok;
}

int run_catalog_list()
{
    for (auto const& e : catalog()) {
        std::cout << e.name << "  " << e.summary;
        if (e.expected.surrogate) std::cout << " [surrogate]";
        std::cout << "\n";
    }
    return Ok;
}

int run_catalog_show(std::string const& name)
{
    auto const& e = catalog_entry(name);
    std::cout << "# " << e.summary << "\n" << job_to_json(e.job);
    return Ok;
}

int run_selftest(std::vector<std::string> const& entries, bool subset, bool quiet)
{
    SelftestOptions opt;
    opt.entries = entries;
    opt.subset = subset;
    opt.on_result = [&](CheckResult const& c) {
        if (quiet && c.passed) return;
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty() && !c.passed) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    };
    SelftestSummary s = selftest(opt);
    std::cout << s.results.size() - s.failures() << "/" << s.results.size() << " checks passed\n";
    return s.ok() ? Ok : SelftestFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"McKay and Auslander-Reiten quivers of invariant rings under semilinear group actions"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "run the pipeline on a job file or catalog:NAME");
    analyze_cmd->add_option("source", aa.source, "job JSON path or catalog:NAME")->required();
    analyze_cmd->add_option("--json", aa.json_path, "write the JSON report to PATH (- for stdout)");
    analyze_cmd->add_option("--dot", aa.dot_path, "write the quiver in DOT to PATH (- for stdout)");
    analyze_cmd->add_flag("--explain", aa.explain, "print a human-readable solver trace");
    analyze_cmd->add_flag("--show-nu", aa.show_nu, "draw Nakayama arrows even when nu is the identity");
    analyze_cmd->add_option("--cap", aa.cap, "maximum group order during enumeration");
    analyze_cmd->add_option("--saturation", aa.saturation, "tensor saturation iteration budget");
    analyze_cmd->add_option("--norm-search-bound", aa.norm_bound, "coefficient bound for norm searches");

    auto* catalog_cmd = app.add_subcommand("catalog", "list or show built-in examples");
    catalog_cmd->require_subcommand(1);
    catalog_cmd->add_subcommand("list", "list catalog entries");
    std::string show_name;
    auto* show_cmd = catalog_cmd->add_subcommand("show", "print the job of one entry");
    show_cmd->add_option("name", show_name)->required();

    std::vector<std::string> entries;
    bool quiet = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "run every catalog entry and the property suites");
    auto* entries_opt = selftest_cmd->add_option("--entries", entries, "restrict to these catalog entries")
                            ->expected(0, -1);
    selftest_cmd->add_flag("--quiet", quiet, "print failures only");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    try {
        if (*analyze_cmd) return run_analyze(aa);
        if (*catalog_cmd) return *show_cmd ? run_catalog_show(show_name) : run_catalog_list();
        if (*selftest_cmd) {
            // a bare --entries yields one empty string; it means the empty subset
            std::erase(entries, std::string());
            return run_selftest(entries, entries_opt->count() > 0, quiet);
        }
    } catch (UnknownEntry const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (JobParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (SmallnessViolation const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return NotSmall;
    } catch (NotSurjectiveOntoGalois const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return NotSurjective;
    } catch (SplitFieldTooSmall const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return NotSplit;
    } catch (CapExceeded const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return TooLarge;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    }
    return Ok;
}
