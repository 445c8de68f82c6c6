#pragma once

#include <cmath>
#include <stdexcept>

namespace memtune {

/// Saturating conductance curve of a single memristive connection.
///
/// G(s) = g_min + (g_max - g_min) * (1 - exp(-s / kappa))
///
/// Strictly increasing in the state variable s, G(0) = g_min, and bounded
/// strictly below g_max (the return value is capped one ulp under g_max so
/// the bound survives floating-point saturation at large states).
struct ConductanceCurve {
    double g_min = 0.1;
    double g_max = 1.0;
    double kappa = 4.0;

    ConductanceCurve() = default;
    ConductanceCurve(double g_min_, double g_max_, double kappa_)
        : g_min(g_min_), g_max(g_max_), kappa(kappa_) {
        validate();
    }

    void validate() const {
        if (!(g_min > 0.0) || !(g_max > g_min))
            throw std::invalid_argument("ConductanceCurve: requires 0 < g_min < g_max");
        if (!(kappa > 0.0))
            throw std::invalid_argument("ConductanceCurve: requires kappa > 0");
    }

    bool operator==(const ConductanceCurve&) const = default;
};

inline double conductance(const ConductanceCurve& curve, double state) {
    if (state < 0.0 || std::isnan(state))
        throw std::domain_error("conductance: state must be non-negative");
    double g = curve.g_min + (curve.g_max - curve.g_min) * (-std::expm1(-state / curve.kappa));
    double cap = std::nextafter(curve.g_max, curve.g_min);
    return g < cap ? g : cap;
}

/// Transient post-spike suppression stage of an element.
enum class RelaxPhase { None, Quarter, Half };

inline double relax_factor(RelaxPhase phase) {
    switch (phase) {
        case RelaxPhase::Quarter: return 0.25;
        case RelaxPhase::Half: return 0.5;
        case RelaxPhase::None: break;
    }
    return 1.0;
}

/// One memristive connection: accumulated-charge state plus the transient
/// suppression applied to its readout this step. Pure value type.
struct MemristorElement {
    double state = 0.0;
    RelaxPhase relax_phase = RelaxPhase::None;

    bool operator==(const MemristorElement&) const = default;
};

inline MemristorElement increment(MemristorElement elem, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("increment: step must be positive");
    elem.state += step;
    return elem;
}

inline MemristorElement decrement(MemristorElement elem, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("decrement: step must be positive");
    elem.state = elem.state > step ? elem.state - step : 0.0;
    return elem;
}

inline double effective_weight(const ConductanceCurve& curve, const MemristorElement& elem) {
    return conductance(curve, elem.state) * relax_factor(elem.relax_phase);
}

} // namespace memtune
