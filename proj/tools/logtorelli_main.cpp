#include "logtorelli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const logtorelli::Json& report, const std::optional<std::string>& output) {
    std::string text = report.dump(2);
    text += '\n';
    if (output) {
        std::ofstream out(*output);
        if (!out) {
            std::cerr << "error: cannot write '" << *output << "'\n";
            return 1;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logtorelli: logarithmic-bundle invariants and Torelli equivalence for "
                 "arrangements of hyperplanes, conics and quadrics in complex projective space"};
    app.require_subcommand(1);

    logtorelli::CliOptions opt;
    std::optional<std::string> output;
    double tolerance = 0.0;
    app.add_option("--output", output, "write the JSON report to a file instead of stdout");
    app.add_option("--tolerance", tolerance, "numeric-layer tolerance (exact decisions are unaffected)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for the generic-point injectivity witness");

    std::string file_a, file_b, candidates;
    bool scan_self = false;

    auto* analyze = app.add_subcommand("analyze", "crossing checks, resolution, Chern data, stability");
    analyze->add_option("file", file_a, "arrangement file")->required();

    auto* torelli = app.add_subcommand("torelli", "decide whether two arrangements give isomorphic log bundles");
    torelli->add_option("file_a", file_a, "first arrangement")->required();
    torelli->add_option("file_b", file_b, "second arrangement")->required();

    auto* unstable = app.add_subcommand("unstable", "scan candidates for the unstable-hypersurface condition");
    unstable->add_option("file", file_a, "arrangement file")->required();
    unstable->add_option("--candidates", candidates, "arrangement file of extra candidates");
    unstable->add_flag("--self", scan_self, "scan the members themselves");

    auto* pencil = app.add_subcommand("pencil", "analyze the pencil spanned by two quadrics");
    pencil->add_option("file", file_a, "arrangement file with two quadrics")->required();

    auto* jumping = app.add_subcommand("jumping", "section zero locus and jumping lines of a conic pair");
    jumping->add_option("file", file_a, "arrangement file with two conics")->required();
    jumping->add_option("--candidates", candidates, "arrangement file of candidate lines");

    auto* cubic = app.add_subcommand("cubic-lift", "cubic lift of a three-line + conic arrangement");
    cubic->add_option("file", file_a, "arrangement file with three lines and a conic")->required();

    CLI11_PARSE(app, argc, argv);
    if (tolerance > 0.0) opt.tolerance = tolerance;

    try {
        logtorelli::Json report;
        if (analyze->parsed()) report = logtorelli::cmd_analyze(file_a, opt);
        else if (torelli->parsed()) report = logtorelli::cmd_torelli(file_a, file_b, opt);
        else if (unstable->parsed())
            report = logtorelli::cmd_unstable(
                file_a, candidates.empty() ? std::nullopt : std::make_optional(candidates), scan_self, opt);
        else if (pencil->parsed()) report = logtorelli::cmd_pencil(file_a, opt);
        else if (jumping->parsed())
            report = logtorelli::cmd_jumping(
                file_a, candidates.empty() ? std::nullopt : std::make_optional(candidates), opt);
        else if (cubic->parsed()) report = logtorelli::cmd_cubic_lift(file_a, opt);
        return emit(report, output);
    } catch (const std::exception& ex) {
        logtorelli::Json err;
        err["schema_version"] = "1";
        err["error"] = ex.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}
