#include "memtune/transition_graph.h"

#include <stdexcept>
#include <string>

namespace memtune {

TransitionGraph::TransitionGraph(AlphabetKind kind, ConductanceCurve curve)
    : kind_(kind), n_(alphabet_size(kind)), curve_(curve) {
    curve_.validate();
    elems_.resize(static_cast<std::size_t>(n_) * n_);
    base_weights_.assign(elems_.size(), conductance(curve_, 0.0));
}

const MemristorElement& TransitionGraph::element(int from, int to) const {
    check_symbol(from);
    check_symbol(to);
    return elems_[flat(from, to)];
}

double TransitionGraph::effective_weight(int from, int to) const {
    check_symbol(from);
    check_symbol(to);
    int i = flat(from, to);
    return base_weights_[i] * relax_factor(elems_[i].relax_phase);
}

Matrix TransitionGraph::effective_weights() const {
    Matrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int k = flat(i, j);
            out(i, j) = base_weights_[k] * relax_factor(elems_[k].relax_phase);
        }
    return out;
}

Matrix TransitionGraph::states() const {
    Matrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = elems_[flat(i, j)].state;
    return out;
}

void TransitionGraph::apply_spike(int from, int to, double inc_step, double dec_step) {
    check_symbol(from);
    check_symbol(to);
    int fwd = flat(from, to);
    elems_[fwd] = increment(elems_[fwd], inc_step);
    base_weights_[fwd] = conductance(curve_, elems_[fwd].state);
    enqueue(fwd);
    if (from == to) return;
    int rev = flat(to, from);
    elems_[rev] = decrement(elems_[rev], dec_step);
    base_weights_[rev] = conductance(curve_, elems_[rev].state);
    enqueue(rev);
}

void TransitionGraph::advance_relaxation() {
    std::size_t kept = 0;
    for (Pending& p : pending_) {
        switch (p.stage) {
            case Stage::Fresh:
                p.stage = Stage::Quarter;
                elems_[p.index].relax_phase = RelaxPhase::Quarter;
                pending_[kept++] = p;
                break;
            case Stage::Quarter:
                p.stage = Stage::Half;
                elems_[p.index].relax_phase = RelaxPhase::Half;
                pending_[kept++] = p;
                break;
            case Stage::Half:
                elems_[p.index].relax_phase = RelaxPhase::None;
                break;
        }
    }
    pending_.resize(kept);
}

void TransitionGraph::seed_from_counts(const Matrix& counts, double state_per_count) {
    if (counts.rows() != n_ || counts.cols() != n_)
        throw std::invalid_argument("seed_from_counts: counts matrix does not match alphabet size");
    if (!(state_per_count > 0.0))
        throw std::invalid_argument("seed_from_counts: state_per_count must be positive");
    Matrix states(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double c = counts(i, j);
            if (c < 0.0)
                throw std::invalid_argument("seed_from_counts: counts must be non-negative");
            states(i, j) = c * state_per_count;
        }
    set_states(states);
}

void TransitionGraph::set_states(const Matrix& states) {
    if (states.rows() != n_ || states.cols() != n_)
        throw std::invalid_argument("set_states: matrix does not match alphabet size");
    for (double s : states.values())
        if (!(s >= 0.0)) throw std::invalid_argument("set_states: states must be non-negative");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double s = states(i, j);
            int k = flat(i, j);
            elems_[k] = MemristorElement{s, RelaxPhase::None};
            base_weights_[k] = conductance(curve_, s);
        }
    pending_.clear();
}

void TransitionGraph::check_symbol(int symbol) const {
    if (symbol < 0 || symbol >= n_)
        throw std::invalid_argument("TransitionGraph: symbol index " + std::to_string(symbol) +
                                    " outside alphabet of size " + std::to_string(n_));
}

void TransitionGraph::enqueue(int index) {
    for (Pending& p : pending_) {
        if (p.index == index) { // re-spike restarts the schedule
            p.stage = Stage::Fresh;
            elems_[index].relax_phase = RelaxPhase::None;
            return;
        }
    }
    pending_.push_back(Pending{index, Stage::Fresh});
}

} // namespace memtune
