#include "memtune/alphabet.h"

#include <cmath>
#include <stdexcept>

namespace memtune {

namespace pitch_alphabet {

namespace {

const std::array<std::string, 12> kClassNames = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                 "Gb", "G",  "Ab", "A",  "Bb", "B"};

const std::array<std::string, kSize>& names() {
    static const std::array<std::string, kSize> table = [] {
        std::array<std::string, kSize> t;
        for (int i = 0; i < kSize; ++i) {
            int octave = 4 + i / 12;
            t[i] = kClassNames[i % 12] + std::to_string(octave);
        }
        return t;
    }();
    return table;
}

} // namespace

int index_of_midi(int midi) {
    int index = midi - kBaseMidi;
    return (index >= 0 && index < kSize) ? index : -1;
}

int midi_of_index(int index) {
    if (index < 0 || index >= kSize)
        throw std::invalid_argument("pitch_alphabet: index out of range");
    return kBaseMidi + index;
}

const std::string& name(int index) {
    if (index < 0 || index >= kSize)
        throw std::invalid_argument("pitch_alphabet: index out of range");
    return names()[index];
}

int index_of_name(std::string_view symbol) {
    for (int i = 0; i < kSize; ++i)
        if (names()[i] == symbol) return i;
    return -1;
}

} // namespace pitch_alphabet

namespace duration_alphabet {

namespace {

const std::array<std::string, kSize> kNames = {
    "semiquaver", "dotted-semiquaver", "quaver",       "dotted-quaver", "crotchet",
    "dotted-crotchet", "minim",        "dotted-minim", "breve"};

} // namespace

const std::string& name(int index) {
    if (index < 0 || index >= kSize)
        throw std::invalid_argument("duration_alphabet: index out of range");
    return kNames[index];
}

double value(int index) {
    if (index < 0 || index >= kSize)
        throw std::invalid_argument("duration_alphabet: index out of range");
    return kValues[index];
}

int index_of_value(double v) {
    for (int i = 0; i < kSize; ++i)
        if (kValues[i] == v) return i;
    return -1;
}

int quantize(double duration) {
    if (!(duration > 0.0))
        throw std::invalid_argument("duration_alphabet: duration must be positive");
    int best = 0;
    double best_gap = std::abs(duration - kValues[0]);
    for (int i = 1; i < kSize; ++i) {
        double gap = std::abs(duration - kValues[i]);
        if (gap < best_gap) { // ties keep the earlier (shorter) value
            best = i;
            best_gap = gap;
        }
    }
    return best;
}

} // namespace duration_alphabet

int alphabet_size(AlphabetKind kind) {
    return kind == AlphabetKind::Pitch ? pitch_alphabet::kSize : duration_alphabet::kSize;
}

const std::string& symbol_name(AlphabetKind kind, int index) {
    return kind == AlphabetKind::Pitch ? pitch_alphabet::name(index)
                                       : duration_alphabet::name(index);
}

} // namespace memtune
