#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "memtune/composer.h"
#include "memtune/memristor.h"
#include "memtune/seeder.h"

namespace memtune::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Digits used for the derived effective-weight CSVs; state CSVs use the
/// shortest exact representation and are the round-trip source of truth.
inline constexpr int kWeightDigits = 9;

struct SeedOptions {
    std::string corpus; // manifest (.json or flat text) or single .mel file
    int default_transpose = 0;
    ConductanceCurve curve;
    double state_per_count = 1.0;
    std::string out_dir = ".";
};

struct GenerateOptions {
    std::string pitch_states;
    std::string tempo_states;
    ConductanceCurve curve;
    GeneratorConfig config;
    std::string out_dir = ".";
};

struct EvolveOptions {
    std::string pitch_states;
    std::string tempo_states;
    ConductanceCurve curve;
    GeneratorConfig config;
    long long total_notes = -1; // -1: run to the last snapshot point
    std::vector<long long> snapshots;
    std::string out_dir = ".";
};

struct AnalyzeOptions {
    std::string states;
    std::string reference; // optional states CSV for drift
    ConductanceCurve curve;
    bool json_to_stdout = false;
    std::string out_dir; // when set, report.json is written there
};

/// Load and normalize a corpus. `corpus_path` may be a JSON manifest
/// ([{"file": ..., "transpose": ...}, ...]), a flat text manifest of
/// "file, transpose" lines, or a single melody file (extension .mel).
SeedCorpus load_corpus(const std::string& corpus_path, int default_transpose);

int run_seed(const SeedOptions& options, std::ostream& out, std::ostream& err);
int run_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int run_evolve(const EvolveOptions& options, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

} // namespace memtune::cli
