#pragma once

#include <cstdint>
#include <vector>

#include "memtune/matrix.h"
#include "memtune/melody.h"
#include "memtune/rng.h"
#include "memtune/transition_graph.h"

namespace memtune {

/// Parameters of one generation run. Defaults follow the shipped model:
/// standard-normal draws, unit increment/decrement, 100 notes, feedback on,
/// starting from C4 at crotchet length.
struct GeneratorConfig {
    std::uint64_t rng_seed = 1;
    double gaussian_mu = 0.0;
    double gaussian_sigma = 1.0;
    double inc_step = 1.0;
    double dec_step = 1.0;
    int note_count = 100;
    bool feedback = true;
    int start_pitch = 0;    // pitch alphabet index of C4
    int start_duration = 4; // duration alphabet index of the crotchet

    void validate() const;
};

/// Per-step audit record: the transition chosen on each graph and its
/// winning score.
struct TraceEntry {
    int step = 0; // 1-based
    int from_pitch = 0;
    int to_pitch = 0;
    double pitch_score = 0.0;
    int from_duration = 0;
    int to_duration = 0;
    double duration_score = 0.0;

    bool operator==(const TraceEntry&) const = default;
};

struct GeneratedPiece {
    std::vector<NoteEvent> events;
    TransitionGraph pitch_graph; // post-run state
    TransitionGraph tempo_graph;
    std::vector<TraceEntry> trace;
};

/// Score every transition: score(i,j) = effective_weight(i,j) * |draw|,
/// with one Gaussian draw per transition consumed in row-major order.
/// Draws are consumed for the whole matrix so the stream position never
/// depends on which row is current.
Matrix draw_scores(const TransitionGraph& graph, GaussianStream& rng);

/// Argmax over row `current` of draw_scores (consuming the full matrix of
/// draws); ties break toward the lower column index.
int next_symbol(const TransitionGraph& graph, int current, GaussianStream& rng);

/// Generate config.note_count events. Each step advances relaxation on
/// both graphs, picks the next pitch then the next duration from a single
/// rng stream (pitch matrix drawn first), and, with feedback on, fires the
/// chosen transitions back into the graphs. The first emitted event is the
/// successor of the start symbols, not the start symbols themselves.
/// Inputs are not mutated; post-run graphs are returned in the piece.
GeneratedPiece generate(const TransitionGraph& pitch_graph, const TransitionGraph& tempo_graph,
                        const GeneratorConfig& config);

inline constexpr int kExcerptLength = 100;

struct EvolutionSnapshot {
    long long notes = 0; // feedback notes generated before this snapshot
    Matrix pitch_states;
    Matrix tempo_states;
    std::vector<NoteEvent> excerpt;
};

struct EvolutionResult {
    std::vector<EvolutionSnapshot> snapshots;
    TransitionGraph pitch_graph; // final state after total_notes
    TransitionGraph tempo_graph;
};

/// Run a continuous feedback generation of total_notes steps. At each
/// requested snapshot point (ascending, within [0, total_notes]) the matrix
/// states are recorded and a kExcerptLength-note excerpt is generated on
/// graph copies with feedback off, from a sub-stream seeded with
/// splitmix64(rng_seed ^ splitmix64(point + 1)), so excerpts are comparable
/// and never disturb the main run.
EvolutionResult evolve(const TransitionGraph& pitch_graph, const TransitionGraph& tempo_graph,
                       const GeneratorConfig& config, long long total_notes,
                       const std::vector<long long>& snapshot_at);

} // namespace memtune
