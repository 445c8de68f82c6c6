#include "memtune/melody.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "memtune/alphabet.h"

namespace memtune {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Semitone of each natural letter within an octave (C = 0).
int letter_semitone(char letter) {
    switch (letter) {
        case 'C': return 0;
        case 'D': return 2;
        case 'E': return 4;
        case 'F': return 5;
        case 'G': return 7;
        case 'A': return 9;
        case 'B': return 11;
    }
    return -1;
}

// PITCH := LETTER ACCIDENTAL? OCTAVE, accidental 'b' flat or '#' sharp.
// Returns a MIDI note number (C4 = 60).
int parse_pitch(const std::string& token, int line, int column) {
    std::size_t i = 0;
    int semitone = token.empty() ? -1 : letter_semitone(token[0]);
    if (semitone < 0)
        throw ParseError("unknown pitch token '" + token + "'", line, column);
    ++i;
    if (i < token.size() && (token[i] == 'b' || token[i] == '#')) {
        semitone += token[i] == 'b' ? -1 : 1;
        ++i;
    }
    if (i + 1 != token.size() || !std::isdigit(static_cast<unsigned char>(token[i])))
        throw ParseError("unknown pitch token '" + token + "'", line, column);
    int octave = token[i] - '0';
    return 12 * (octave + 1) + semitone;
}

double parse_duration(const std::string& token, int line, int column) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ParseError("unmappable duration '" + token + "'", line, column);
    if (!(value > 0.0))
        throw ParseError("non-positive duration '" + token + "'", line, column);
    return value;
}

} // namespace

Melody parse_melody(const std::string& text, const std::string& name) {
    Melody melody;
    melody.name = name;

    std::istringstream lines(text);
    std::string line_text;
    int line_no = 0;
    while (std::getline(lines, line_text)) {
        ++line_no;
        std::size_t pos = line_text.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line_text[pos] == '#') continue;

        while (pos < line_text.size()) {
            std::size_t end = line_text.find_first_of(" \t\r", pos);
            if (end == std::string::npos) end = line_text.size();
            std::string token = line_text.substr(pos, end - pos);
            int column = static_cast<int>(pos) + 1;

            std::size_t colon = token.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
                throw ParseError("expected PITCH:DURATION, got '" + token + "'", line_no, column);
            std::string pitch_part = token.substr(0, colon);
            std::string duration_part = token.substr(colon + 1);

            double duration = parse_duration(duration_part, line_no, column);
            if (pitch_part != "R") {
                int midi = parse_pitch(pitch_part, line_no, column);
                melody.events.push_back(NoteEvent{midi, duration});
            }

            pos = line_text.find_first_not_of(" \t\r", end);
            if (pos == std::string::npos) break;
        }
    }
    return melody;
}

std::string format_note_token(const NoteEvent& event) {
    int index = pitch_alphabet::index_of_midi(event.midi);
    if (index < 0)
        throw std::invalid_argument("format_note_token: pitch outside C4..B5");
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), event.duration);
    return pitch_alphabet::name(index) + ":" + std::string(buf, ptr);
}

std::string format_melody(const Melody& melody) {
    std::string out;
    for (const NoteEvent& event : melody.events) {
        out += format_note_token(event);
        out += '\n';
    }
    return out;
}

} // namespace memtune
