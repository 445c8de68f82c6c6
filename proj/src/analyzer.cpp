#include "memtune/analyzer.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace memtune {

namespace {

void require_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument(std::string(who) + ": requires a non-empty square matrix");
}

} // namespace

double symmetry_pct(const Matrix& weights) {
    require_square(weights, "symmetry_pct");
    double total = 0.0;
    double asym = 0.0;
    for (int i = 0; i < weights.rows(); ++i)
        for (int j = 0; j < weights.cols(); ++j) {
            double a = weights(i, j);
            if (a < 0.0)
                throw std::invalid_argument("symmetry_pct: entries must be non-negative");
            total += a;
            asym += std::abs(a - weights(j, i));
        }
    if (total == 0.0) throw std::domain_error("symmetry_pct: undefined for an all-zero matrix");
    return 100.0 * (1.0 - asym / (2.0 * total));
}

int reducibility(const Matrix& weights, double threshold) {
    require_square(weights, "reducibility");
    if (threshold < 0.0) throw std::invalid_argument("reducibility: threshold must be >= 0");
    int used = 0;
    for (int node = 0; node < weights.rows(); ++node) {
        bool incident = false;
        for (int k = 0; k < weights.rows() && !incident; ++k)
            incident = weights(node, k) > threshold || weights(k, node) > threshold;
        if (incident) ++used;
    }
    return used;
}

long long used_transitions(const Matrix& weights, double threshold) {
    long long count = 0;
    for (double w : weights.values())
        if (w > threshold) ++count;
    return count;
}

std::vector<long long> per_symbol_usage(const Matrix& weights, double threshold) {
    require_square(weights, "per_symbol_usage");
    std::vector<long long> usage(weights.rows(), 0);
    for (int i = 0; i < weights.rows(); ++i)
        for (int j = 0; j < weights.cols(); ++j)
            if (weights(i, j) > threshold) {
                ++usage[i]; // outgoing
                ++usage[j]; // incoming
            }
    return usage;
}

double drift_l1(const Matrix& current, const Matrix& reference) {
    if (current.rows() != reference.rows() || current.cols() != reference.cols())
        throw std::invalid_argument("drift_l1: dimension mismatch");
    double sum = 0.0;
    auto a = current.values();
    auto b = reference.values();
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
    return sum;
}

StyleReport make_report(const Matrix& weights, double threshold, const Matrix* current_states,
                        const Matrix* reference_states) {
    StyleReport report;
    report.symmetry_pct = symmetry_pct(weights);
    report.reducibility = reducibility(weights, threshold);
    report.nonzero_transitions = used_transitions(weights, threshold);
    report.per_symbol_usage = per_symbol_usage(weights, threshold);
    if (current_states && reference_states)
        report.drift_l1 = drift_l1(*current_states, *reference_states);
    return report;
}

std::string report_to_json(const StyleReport& report) {
    nlohmann::json j;
    j["symmetry_pct"] = report.symmetry_pct;
    j["reducibility"] = report.reducibility;
    j["nonzero_transitions"] = report.nonzero_transitions;
    j["per_symbol_usage"] = report.per_symbol_usage;
    if (report.drift_l1)
        j["drift_l1"] = *report.drift_l1;
    else
        j["drift_l1"] = nullptr;
    return j.dump(2);
}

std::string report_to_table(const StyleReport& report, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "symmetry:            " << std::setprecision(9) << report.symmetry_pct << " %\n";
    out << "reducibility:        " << report.reducibility << " nodes\n";
    out << "used transitions:    " << report.nonzero_transitions << "\n";
    if (report.drift_l1) out << "drift (L1 vs ref):   " << *report.drift_l1 << "\n";
    out << "per-symbol usage (in+out degree):\n";
    for (std::size_t i = 0; i < report.per_symbol_usage.size(); ++i) {
        std::string label = i < labels.size() ? labels[i] : std::to_string(i);
        out << "  " << std::left << std::setw(18) << label << std::right
            << report.per_symbol_usage[i] << "\n";
    }
    return out.str();
}

} // namespace memtune
