#include "memtune/composer.h"

#include <cmath>
#include <stdexcept>

#include "memtune/alphabet.h"

namespace memtune {

void GeneratorConfig::validate() const {
    if (!(gaussian_sigma > 0.0))
        throw std::invalid_argument("GeneratorConfig: gaussian_sigma must be positive");
    if (!std::isfinite(gaussian_mu))
        throw std::invalid_argument("GeneratorConfig: gaussian_mu must be finite");
    if (note_count < 1) throw std::invalid_argument("GeneratorConfig: note_count must be >= 1");
    if (!(inc_step > 0.0) || !(dec_step > 0.0))
        throw std::invalid_argument("GeneratorConfig: step sizes must be positive");
    if (start_pitch < 0 || start_pitch >= pitch_alphabet::kSize)
        throw std::invalid_argument("GeneratorConfig: start_pitch outside alphabet");
    if (start_duration < 0 || start_duration >= duration_alphabet::kSize)
        throw std::invalid_argument("GeneratorConfig: start_duration outside alphabet");
}

namespace {

struct Pick {
    int symbol;
    double score;
};

// Consume one draw per transition in row-major order; only the current
// row's products are evaluated (skipped draws advance the stream
// identically, see GaussianStream::skip).
Pick pick_transition(const TransitionGraph& graph, int current, GaussianStream& rng) {
    int n = graph.size();
    rng.skip(static_cast<std::uint64_t>(current) * n);
    Pick best{0, -1.0};
    for (int j = 0; j < n; ++j) {
        double score = graph.effective_weight(current, j) * std::abs(rng.next());
        if (score > best.score) best = Pick{j, score};
    }
    rng.skip(static_cast<std::uint64_t>(n - 1 - current) * n);
    return best;
}

// One generation step over both graphs; updates the current symbols.
struct Stepper {
    TransitionGraph& pitch_graph;
    TransitionGraph& tempo_graph;
    GaussianStream& rng;
    const GeneratorConfig& config;
    int pitch;
    int duration;

    TraceEntry step(int step_no, bool feedback) {
        pitch_graph.advance_relaxation();
        tempo_graph.advance_relaxation();
        Pick next_pitch = pick_transition(pitch_graph, pitch, rng);
        Pick next_duration = pick_transition(tempo_graph, duration, rng);
        if (feedback) {
            pitch_graph.apply_spike(pitch, next_pitch.symbol, config.inc_step, config.dec_step);
            tempo_graph.apply_spike(duration, next_duration.symbol, config.inc_step,
                                    config.dec_step);
        }
        TraceEntry entry{step_no,  pitch,    next_pitch.symbol,    next_pitch.score,
                         duration, next_duration.symbol, next_duration.score};
        pitch = next_pitch.symbol;
        duration = next_duration.symbol;
        return entry;
    }
};

} // namespace

Matrix draw_scores(const TransitionGraph& graph, GaussianStream& rng) {
    int n = graph.size();
    Matrix weights = graph.effective_weights();
    Matrix scores(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scores(i, j) = weights(i, j) * std::abs(rng.next());
    return scores;
}

int next_symbol(const TransitionGraph& graph, int current, GaussianStream& rng) {
    if (current < 0 || current >= graph.size())
        throw std::invalid_argument("next_symbol: current symbol outside alphabet");
    return pick_transition(graph, current, rng).symbol;
}

GeneratedPiece generate(const TransitionGraph& pitch_graph, const TransitionGraph& tempo_graph,
                        const GeneratorConfig& config) {
    config.validate();
    GeneratedPiece piece{{}, pitch_graph, tempo_graph, {}};
    GaussianStream rng(config.rng_seed, config.gaussian_mu, config.gaussian_sigma);
    Stepper stepper{piece.pitch_graph, piece.tempo_graph, rng,
                    config,            config.start_pitch, config.start_duration};

    piece.events.reserve(config.note_count);
    piece.trace.reserve(config.note_count);
    for (int step = 1; step <= config.note_count; ++step) {
        TraceEntry entry = stepper.step(step, config.feedback);
        piece.events.push_back(NoteEvent{pitch_alphabet::midi_of_index(entry.to_pitch),
                                         duration_alphabet::value(entry.to_duration)});
        piece.trace.push_back(entry);
    }
    return piece;
}

EvolutionResult evolve(const TransitionGraph& pitch_graph, const TransitionGraph& tempo_graph,
                       const GeneratorConfig& config, long long total_notes,
                       const std::vector<long long>& snapshot_at) {
    config.validate();
    if (total_notes < 0) throw std::invalid_argument("evolve: total_notes must be >= 0");
    for (std::size_t i = 0; i < snapshot_at.size(); ++i) {
        if (snapshot_at[i] < 0 || snapshot_at[i] > total_notes)
            throw std::invalid_argument("evolve: snapshot point outside [0, total_notes]");
        if (i > 0 && snapshot_at[i] <= snapshot_at[i - 1])
            throw std::invalid_argument("evolve: snapshot points must be strictly ascending");
    }

    EvolutionResult result{{}, pitch_graph, tempo_graph};
    GaussianStream rng(config.rng_seed, config.gaussian_mu, config.gaussian_sigma);
    Stepper stepper{result.pitch_graph, result.tempo_graph, rng,
                    config,             config.start_pitch,  config.start_duration};

    auto take_snapshot = [&](long long notes) {
        EvolutionSnapshot snap;
        snap.notes = notes;
        snap.pitch_states = result.pitch_graph.states();
        snap.tempo_states = result.tempo_graph.states();
        GeneratorConfig excerpt_config = config;
        excerpt_config.feedback = false;
        excerpt_config.note_count = kExcerptLength;
        excerpt_config.rng_seed =
            splitmix64(config.rng_seed ^ splitmix64(static_cast<std::uint64_t>(notes) + 1));
        snap.excerpt =
            generate(result.pitch_graph, result.tempo_graph, excerpt_config).events;
        result.snapshots.push_back(std::move(snap));
    };

    std::size_t next_snapshot = 0;
    for (long long n = 0;; ++n) {
        if (next_snapshot < snapshot_at.size() && snapshot_at[next_snapshot] == n) {
            take_snapshot(n);
            ++next_snapshot;
        }
        if (n == total_notes) break;
        stepper.step(0, /*feedback=*/true); // trace entry discarded
    }
    return result;
}

} // namespace memtune
