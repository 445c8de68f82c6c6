#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "memtune/cli.h"

namespace {

using memtune::ConductanceCurve;

void add_curve_option(CLI::App* cmd, std::vector<double>& curve) {
    cmd->add_option("--curve", curve,
                    "conductance curve as g_min,g_max,kappa")
        ->delimiter(',')
        ->expected(3);
}

ConductanceCurve make_curve(const std::vector<double>& values) {
    if (values.empty()) return ConductanceCurve{};
    return ConductanceCurve{values[0], values[1], values[2]};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"memristor-network melody generator"};
    app.require_subcommand(1);

    memtune::cli::SeedOptions seed_options;
    std::vector<double> seed_curve;
    CLI::App* seed = app.add_subcommand("seed", "build transition graphs from a melody corpus");
    seed->add_option("--corpus", seed_options.corpus,
                     "corpus manifest (.json or flat list) or a single .mel file")
        ->required();
    seed->add_option("--transpose", seed_options.default_transpose,
                     "default semitone shift for melodies without one");
    seed->add_option("--state-per-count", seed_options.state_per_count,
                     "state units added per observed transition");
    seed->add_option("--out", seed_options.out_dir, "output directory");
    add_curve_option(seed, seed_curve);

    memtune::cli::GenerateOptions gen_options;
    std::vector<double> gen_curve;
    CLI::App* generate = app.add_subcommand("generate", "generate a melody from seeded graphs");
    generate->add_option("--pitch-states", gen_options.pitch_states, "pitch state matrix CSV")
        ->required();
    generate->add_option("--tempo-states", gen_options.tempo_states, "duration state matrix CSV")
        ->required();
    generate->add_option("--seed", gen_options.config.rng_seed, "random number generator seed");
    generate->add_option("--notes", gen_options.config.note_count, "number of notes to generate");
    generate->add_flag("!--no-feedback", gen_options.config.feedback,
                       "score transitions without reinforcing them");
    generate->add_option("--out", gen_options.out_dir, "output directory");
    add_curve_option(generate, gen_curve);

    memtune::cli::EvolveOptions evolve_options;
    std::vector<double> evolve_curve;
    CLI::App* evolve = app.add_subcommand("evolve", "run a long generation with state snapshots");
    evolve->add_option("--pitch-states", evolve_options.pitch_states, "pitch state matrix CSV")
        ->required();
    evolve->add_option("--tempo-states", evolve_options.tempo_states, "duration state matrix CSV")
        ->required();
    evolve->add_option("--seed", evolve_options.config.rng_seed, "random number generator seed");
    evolve->add_option("--notes", evolve_options.total_notes,
                       "total notes to generate (default: last snapshot)");
    evolve->add_option("--snapshots", evolve_options.snapshots,
                       "note counts at which to snapshot the graphs")
        ->delimiter(',')
        ->required();
    evolve->add_option("--out", evolve_options.out_dir, "output directory");
    add_curve_option(evolve, evolve_curve);

    memtune::cli::AnalyzeOptions analyze_options;
    std::vector<double> analyze_curve;
    CLI::App* analyze = app.add_subcommand("analyze", "report structural metrics for a state matrix");
    analyze->add_option("--states", analyze_options.states, "state matrix CSV")->required();
    analyze->add_option("--reference", analyze_options.reference,
                        "reference state matrix for drift");
    analyze->add_flag("--json", analyze_options.json_to_stdout, "print the JSON report to stdout");
    analyze->add_option("--out", analyze_options.out_dir, "directory for report.json");
    add_curve_option(analyze, analyze_curve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? memtune::cli::kExitSuccess : memtune::cli::kExitUsage;
    }

    try {
        if (seed->parsed()) {
            seed_options.curve = make_curve(seed_curve);
            return memtune::cli::run_seed(seed_options, std::cout, std::cerr);
        }
        if (generate->parsed()) {
            gen_options.curve = make_curve(gen_curve);
            return memtune::cli::run_generate(gen_options, std::cout, std::cerr);
        }
        if (evolve->parsed()) {
            evolve_options.curve = make_curve(evolve_curve);
            return memtune::cli::run_evolve(evolve_options, std::cout, std::cerr);
        }
        if (analyze->parsed()) {
            analyze_options.curve = make_curve(analyze_curve);
            return memtune::cli::run_analyze(analyze_options, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return memtune::cli::kExitData;
    }
    return memtune::cli::kExitUsage;
}
