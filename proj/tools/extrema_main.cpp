#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli_commands.hpp"

using namespace extrema;

int main(int argc, char** argv) {
    CLI::App app{"Exact distance law between local extrema of i.i.d. sequences, and stream audits"};
    app.require_subcommand(1);

    int table_dmax = 29;
    cli::TableFormat table_format = cli::TableFormat::Human;
    const std::map<std::string, cli::TableFormat> table_formats{
        {"human", cli::TableFormat::Human}, {"tsv", cli::TableFormat::Tsv}, {"exact", cli::TableFormat::Exact}};
    auto* table = app.add_subcommand("table", "Exact PMF and CDF of the inter-maximum distance");
    table->add_option("--dmax", table_dmax, "Largest distance to tabulate")->required();
    table->add_option("--format", table_format, "human, tsv or exact")
        ->transform(CLI::CheckedTransformer(table_formats, CLI::ignore_case));

    std::string word;
    auto* eval = app.add_subcommand("eval", "Probability of an up/down pattern such as UDUD");
    eval->add_option("word", word, "Word over {U, D}")->required();

    int oracle_dmax = 7;
    auto* oracle = app.add_subcommand("oracle", "Brute-force permutation check of the closed form");
    oracle->add_option("--dmax", oracle_dmax, "Largest distance to check")->required();

    cli::AnalyzeOptions opts;
    std::string gen, file;
    const std::map<std::string, ExtremumKind> kinds{{"maxima", ExtremumKind::Maxima},
                                                    {"minima", ExtremumKind::Minima}};
    const std::map<std::string, TiePolicy> ties{{"error", TiePolicy::Error}, {"skip", TiePolicy::Skip}};
    auto* analyze = app.add_subcommand("analyze", "Audit a generated or ingested stream");
    auto* gen_opt = analyze->add_option("--gen", gen, "randu, lcg48 or user");
    auto* file_opt = analyze->add_option("--file", file, "Pre-downloaded sample");
    gen_opt->excludes(file_opt);
    analyze->add_option("--format", opts.format, "floats-text or u32-be-binary")->needs(file_opt);
    analyze->add_option("--values", opts.values, "Number of values to generate");
    analyze->add_option("--distances", opts.target_distances,
                        "Generate until this many distances are observed");
    analyze->add_option("--seed", opts.seed, "Generator seed")->needs(gen_opt);
    analyze->add_option("--multiplier", opts.multiplier, "User LCG multiplier");
    analyze->add_option("--increment", opts.increment, "User LCG increment");
    analyze->add_option("--modulus", opts.modulus, "User LCG modulus");
    analyze->add_option("--kind", opts.kind, "maxima or minima")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    analyze->add_option("--ties", opts.ties, "error or skip")
        ->transform(CLI::CheckedTransformer(ties, CLI::ignore_case));
    analyze->add_option("--alpha", opts.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    analyze->add_flag("--tsv", opts.tsv, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    if (*table) return cli::cmd_table(table_dmax, table_format, std::cout, std::cerr);
    if (*eval) return cli::cmd_eval(word, std::cout, std::cerr);
    if (*oracle) return cli::cmd_oracle(oracle_dmax, std::cout, std::cerr);
    if (!gen.empty()) opts.generator = gen;
    if (!file.empty()) opts.file = file;
    return cli::cmd_analyze(opts, std::cout, std::cerr);
}
