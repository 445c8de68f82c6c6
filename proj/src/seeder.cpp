#include "memtune/seeder.h"

#include <stdexcept>

#include "memtune/alphabet.h"

namespace memtune {

Melody normalize(const Melody& melody, int transpose_semitones) {
    Melody out;
    out.name = melody.name;
    out.events.reserve(melody.events.size());
    for (NoteEvent event : melody.events) {
        event.midi += transpose_semitones;
        while (event.midi < pitch_alphabet::kBaseMidi) event.midi += 12;
        while (event.midi >= pitch_alphabet::kBaseMidi + pitch_alphabet::kSize) event.midi -= 12;
        event.duration = duration_alphabet::value(duration_alphabet::quantize(event.duration));
        out.events.push_back(event);
    }
    return out;
}

namespace {

// Alphabet indices of an event; throws if the corpus was not normalized.
std::pair<int, int> event_indices(const NoteEvent& event, const std::string& melody_name) {
    int pitch = pitch_alphabet::index_of_midi(event.midi);
    int duration = duration_alphabet::index_of_value(event.duration);
    if (pitch < 0 || duration < 0)
        throw std::invalid_argument("count_transitions: melody '" + melody_name +
                                    "' is not normalized");
    return {pitch, duration};
}

} // namespace

TransitionCounts count_transitions(const SeedCorpus& corpus) {
    if (corpus.melodies.empty())
        throw std::invalid_argument("count_transitions: empty corpus");

    TransitionCounts counts{Matrix(pitch_alphabet::kSize, pitch_alphabet::kSize),
                            Matrix(duration_alphabet::kSize, duration_alphabet::kSize)};
    for (const Melody& melody : corpus.melodies) {
        if (melody.events.empty())
            throw std::invalid_argument("count_transitions: melody '" + melody.name +
                                        "' has no events");
        auto [prev_pitch, prev_duration] = event_indices(melody.events[0], melody.name);
        for (std::size_t k = 1; k < melody.events.size(); ++k) {
            auto [pitch, duration] = event_indices(melody.events[k], melody.name);
            counts.pitch(prev_pitch, pitch) += 1.0;
            counts.duration(prev_duration, duration) += 1.0;
            prev_pitch = pitch;
            prev_duration = duration;
        }
    }
    return counts;
}

std::pair<TransitionGraph, TransitionGraph> seed_graphs(const SeedCorpus& corpus,
                                                        const ConductanceCurve& curve,
                                                        double state_per_count) {
    TransitionCounts counts = count_transitions(corpus);
    TransitionGraph pitch_graph(AlphabetKind::Pitch, curve);
    TransitionGraph tempo_graph(AlphabetKind::Duration, curve);
    pitch_graph.seed_from_counts(counts.pitch, state_per_count);
    tempo_graph.seed_from_counts(counts.duration, state_per_count);
    return {std::move(pitch_graph), std::move(tempo_graph)};
}

} // namespace memtune
