#pragma once

#include <optional>
#include <string>
#include <vector>

#include "memtune/matrix.h"

namespace memtune {

/// Matrix-style metrics for one transition graph.
struct StyleReport {
    double symmetry_pct = 0.0;
    int reducibility = 0;
    long long nonzero_transitions = 0;
    std::vector<long long> per_symbol_usage; // in-degree + out-degree per node
    std::optional<double> drift_l1;
};

/// Percentage symmetry of a non-negative square matrix:
/// 100 * (1 - sum|A - A^T| / (2 * sum A)). 100 for symmetric matrices,
/// 0 for a single one-way edge. Undefined (throws) for an all-zero matrix.
double symmetry_pct(const Matrix& weights);

/// Number of nodes with at least one incident transition weight strictly
/// above `threshold` (pruning unused connections down to the used nodes).
int reducibility(const Matrix& weights, double threshold);

/// Count of transitions with weight strictly above `threshold`.
long long used_transitions(const Matrix& weights, double threshold);

/// Per-node incident degree: used outgoing plus used incoming transitions
/// (a used self-loop contributes to both).
std::vector<long long> per_symbol_usage(const Matrix& weights, double threshold);

/// L1 distance between two equally-sized matrices.
double drift_l1(const Matrix& current, const Matrix& reference);

/// Assemble the full report for a weights matrix; drift is included when a
/// reference states matrix is supplied alongside the current states.
StyleReport make_report(const Matrix& weights, double threshold,
                        const Matrix* current_states = nullptr,
                        const Matrix* reference_states = nullptr);

/// JSON rendering of the report fields.
std::string report_to_json(const StyleReport& report);

/// Human-readable table, symbol names taken from `labels` when non-empty.
std::string report_to_table(const StyleReport& report, const std::vector<std::string>& labels);

} // namespace memtune
