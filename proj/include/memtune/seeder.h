#pragma once

#include <utility>
#include <vector>

#include "memtune/matrix.h"
#include "memtune/melody.h"
#include "memtune/transition_graph.h"

namespace memtune {

/// A set of melodies that has been normalized into the shipped alphabets
/// (pitches folded into C4..B5, durations quantized).
struct SeedCorpus {
    std::vector<Melody> melodies;
};

/// Pitch (24x24) and duration (9x9) transition counts, indexed by alphabet.
struct TransitionCounts {
    Matrix pitch;
    Matrix duration;
};

/// Shift every pitch by `transpose_semitones`, fold it by octaves into
/// C4..B5, and quantize every duration to the nearest alphabet value.
/// Idempotent on already-normalized melodies.
Melody normalize(const Melody& melody, int transpose_semitones);

/// Count consecutive-event transitions per melody; melody boundaries do not
/// contribute. Requires a normalized, non-empty corpus of non-empty
/// melodies.
TransitionCounts count_transitions(const SeedCorpus& corpus);

/// Seed a pitch graph and a tempo graph from the corpus counts. The two
/// matrices are independent: pitch transitions never influence duration
/// weights and vice versa.
std::pair<TransitionGraph, TransitionGraph> seed_graphs(const SeedCorpus& corpus,
                                                        const ConductanceCurve& curve = {},
                                                        double state_per_count = 1.0);

} // namespace memtune
