#pragma once

#include <array>
#include <string>
#include <string_view>

namespace memtune {

/// Which of the two shipped symbol alphabets a graph runs over.
enum class AlphabetKind { Pitch, Duration };

/// Two chromatic octaves C4..B5, indexed 0..23 in ascending pitch order.
/// Accidentals are spelled as flats (C, Db, D, Eb, E, F, Gb, G, Ab, A, Bb, B).
namespace pitch_alphabet {

inline constexpr int kSize = 24;
inline constexpr int kBaseMidi = 60; // C4

/// Alphabet index for a MIDI note number, or -1 if outside C4..B5.
int index_of_midi(int midi);
int midi_of_index(int index);

/// Symbol name, e.g. "C4", "Db4", "B5".
const std::string& name(int index);

/// Index of a symbol name, or -1 if not in the alphabet.
int index_of_name(std::string_view name);

} // namespace pitch_alphabet

/// Nine note lengths in crotchet-reduced units (crotchet = 1), indexed in
/// ascending duration order: semiquaver, dotted semiquaver, quaver, dotted
/// quaver, crotchet, dotted crotchet, minim, dotted minim, breve.
namespace duration_alphabet {

inline constexpr int kSize = 9;
inline constexpr std::array<double, kSize> kValues = {0.25, 0.375, 0.5,  0.75, 1.0,
                                                      1.5,  2.0,   3.0, 8.0};

const std::string& name(int index);
double value(int index);

/// Index whose value exactly equals `v`, or -1.
int index_of_value(double v);

/// Nearest alphabet value to a positive duration; ties break toward the
/// shorter duration.
int quantize(double duration);

} // namespace duration_alphabet

int alphabet_size(AlphabetKind kind);
const std::string& symbol_name(AlphabetKind kind, int index);

} // namespace memtune
