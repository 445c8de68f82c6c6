#pragma once

#include <vector>

#include "memtune/alphabet.h"
#include "memtune/matrix.h"
#include "memtune/memristor.h"

namespace memtune {

/// Reflexive directed k-graph over one symbol alphabet, stored as an N x N
/// matrix of memristor elements (row = from-symbol, column = to-symbol).
/// 24 pitches give 576 elements, 9 durations give 81.
///
/// Relaxation schedule: a spike at step n leaves the element's readout
/// untouched for the remainder of step n; the following calls to
/// advance_relaxation() (one per generation step) move it through the
/// quarter (0.25x) and half (0.5x) suppression phases, after which the
/// element reads its full new weight again. Reading after each advance
/// thus yields factors 0.25, 0.5, 1.0 on the three steps after a spike.
class TransitionGraph {
public:
    explicit TransitionGraph(AlphabetKind kind, ConductanceCurve curve = {});

    AlphabetKind kind() const { return kind_; }
    int size() const { return n_; }
    const ConductanceCurve& curve() const { return curve_; }

    const MemristorElement& element(int from, int to) const;
    double state(int from, int to) const { return element(from, to).state; }

    /// Conductance times the element's relaxation factor. Does not mutate.
    double effective_weight(int from, int to) const;
    Matrix effective_weights() const;
    Matrix states() const;

    /// Fire the transition from -> to: increment the forward element by
    /// inc_step, decrement the reverse element by dec_step, and schedule
    /// both for quarter/half relaxation. A self transition (from == to)
    /// increments the single diagonal element only. Re-spiking an element
    /// that is still relaxing restarts its schedule.
    void apply_spike(int from, int to, double inc_step, double dec_step);

    /// Advance the relaxation bookkeeping by one generation step.
    void advance_relaxation();

    /// Set every element's state to counts(i,j) * state_per_count and clear
    /// all relaxation. Counts must be non-negative and match the alphabet.
    void seed_from_counts(const Matrix& counts, double state_per_count = 1.0);

    /// Restore raw states (e.g. parsed from a snapshot file); clears
    /// relaxation bookkeeping.
    void set_states(const Matrix& states);

    bool operator==(const TransitionGraph&) const = default;

private:
    // Stage of a pending entry. Fresh marks an element spiked since the
    // last advance; the first advance moves it into Quarter.
    enum class Stage { Fresh, Quarter, Half };
    struct Pending {
        int index;
        Stage stage;
        bool operator==(const Pending&) const = default;
    };

    int flat(int from, int to) const { return from * n_ + to; }
    void check_symbol(int symbol) const;
    void enqueue(int index);

    AlphabetKind kind_;
    int n_;
    ConductanceCurve curve_;
    std::vector<MemristorElement> elems_;
    std::vector<double> base_weights_; // conductance(curve, state) per element
    std::vector<Pending> pending_;
};

} // namespace memtune
