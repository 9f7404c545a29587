// Command-line front end: one job per invocation, one report on stdout.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cgl/cli.hpp"
#include "cgl/error.hpp"
#include "cgl/parallel.hpp"

namespace {

struct Extra {
    bool timing = false;
    std::string job_file;
};

void add_common(CLI::App* sub, cgl::JobSpec& job, Extra& extra) {
    sub->add_option("--space", job.space, "preset such as super(2|1) or a space JSON file");
    sub->add_option("--factor", job.factor, "factor JSON file overriding the inline factor");
    sub->add_option("--format", job.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", job.seed, "seed for sampled checks");
    sub->add_option("--max-words", job.max_words, "cap on (dim V)^r");
    sub->add_flag("--timing", extra.timing, "add wall-clock seconds to the report");
}

}  // namespace

int main(int argc, char** argv) {
    cgl::JobSpec job;
    Extra extra;
    CLI::App app{"Exact computations for general linear Lie colour algebras"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run every invariant suite for a space");
    add_common(verify, job, extra);
    verify->add_option("--level", job.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    auto* sw = app.add_subcommand("schur-weyl", "Schur-Weyl table of V^(x)r");
    add_common(sw, job, extra);
    sw->add_option("--power", job.power, "tensor power r");

    auto* howe = app.add_subcommand("howe-sweep", "Howe dimension sweep of S(V^N)");
    add_common(howe, job, extra);
    howe->add_option("--copies", job.copies, "N");
    howe->add_option("--max-degree", job.max_degree, "largest degree d");
    howe->add_option("--space2", job.space2, "second space V' for the S(V* (x) V') decomposition");

    auto* fft = app.add_subcommand("fft-check", "gl(V) invariants of S(V^N + Vbar^N')");
    add_common(fft, job, extra);
    fft->add_option("--copies", job.copies, "N");
    fft->add_option("--copies2", job.copies2, "N'");
    fft->add_option("--max-degree", job.max_degree, "largest bidegree d");

    auto* glq = app.add_subcommand("glq-check", "defining relations and sweep for glq(m|n)");
    add_common(glq, job, extra);
    glq->add_option("--copies", job.copies, "N");
    glq->add_option("--max-degree", job.max_degree, "largest degree d");

    for (const char* name : {"typicality", "kac-dim", "casimir"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of a highest weight");
        add_common(sub, job, extra);
        sub->add_option("--weight", job.weight, "rational vector such as 1,1/2,-3");
    }

    auto* unit = app.add_subcommand("unitarisable", "classify for a compact star structure");
    add_common(unit, job, extra);
    unit->add_option("--weight", job.weight, "rational vector such as 1,1/2,-3");
    unit->add_option("--type", job.star_type, "I or II")->check(CLI::IsMember({"I", "II"}));

    auto* gram = app.add_subcommand("gram", "Gram matrices of the contravariant form");
    add_common(gram, job, extra);
    gram->add_option("--weight", job.weight, "rational vector such as 1,1/2,-3");
    gram->add_option("--depth", job.depth, "number of odd lowering levels (default: all)");

    auto* tab = app.add_subcommand("tableaux", "(M+,M-)-tableaux counts for partitions of r");
    add_common(tab, job, extra);
    tab->add_option("--power", job.power, "r");

    auto* run = app.add_subcommand("run", "re-run the job echoed in a report or job file");
    run->add_option("job", extra.job_file, "JSON file with a job object or a whole report")->required();
    run->add_flag("--timing", extra.timing, "add wall-clock seconds to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cgl::exit_input;
    }

    try {
        if (run->parsed()) {
            cgl::Json j = cgl::read_json_file(extra.job_file);
            job = cgl::job_from_json(j.contains("job") ? j.at("job") : j);
        } else {
            job.command = app.get_subcommands().front()->get_name();
        }
    } catch (const cgl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cgl::exit_input;
    }

    const auto start = std::chrono::steady_clock::now();
    cgl::RunResult res;
    try {
        res = cgl::run_job(job);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return cgl::exit_failed;
    }
    if (extra.timing) {
        res.report["timing"] = cgl::Json{
            {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
            {"threads", cgl::thread_count()}};
    }
    if (res.report.contains("error")) std::cerr << "error: " << res.report["error"]["message"].get<std::string>() << '\n';
    if (job.format == "tsv") std::cout << cgl::report_tsv(res.report);
    else std::cout << res.report.dump(2) << '\n';
    return res.status;
}
