#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace memtune {

/// One melody event. `midi` is a MIDI-style note number (C4 = 60); events
/// produced by the parser may lie outside the two-octave alphabet until
/// normalize() folds them in. Duration is in crotchet-reduced units.
struct NoteEvent {
    int midi = 60;
    double duration = 1.0;

    bool operator==(const NoteEvent&) const = default;
};

struct Melody {
    std::string name;
    std::vector<NoteEvent> events;
};

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parse melody text: whitespace-separated `PITCH:DURATION` tokens, e.g.
/// "C4:1 Eb5:0.75". Pitches are a letter A-G, optional accidental (b or #)
/// and an octave digit. `R:d` denotes a rest and is skipped entirely, so
/// the notes on either side become adjacent. Lines starting with `#` are
/// comments.
Melody parse_melody(const std::string& text, const std::string& name = "");

/// Render events back to token text, one token per line (flat spellings).
/// Events must lie within the pitch alphabet.
std::string format_melody(const Melody& melody);

std::string format_note_token(const NoteEvent& event);

} // namespace memtune
