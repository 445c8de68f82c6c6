#include "memtune/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "memtune/alphabet.h"
#include "memtune/analyzer.h"
#include "memtune/csv.h"

namespace memtune::cli {

namespace fs = std::filesystem;

namespace {

struct CorpusEntry {
    std::string file;
    int transpose;
};

std::string read_file(const fs::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<CorpusEntry> parse_json_manifest(const std::string& text, int default_transpose,
                                             const std::string& origin) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
    if (doc.is_object() && doc.contains("melodies")) doc = doc["melodies"];
    if (!doc.is_array())
        throw std::runtime_error(origin + ": manifest must be an array of {file, transpose}");
    std::vector<CorpusEntry> entries;
    for (const auto& item : doc) {
        CorpusEntry entry;
        if (item.is_string()) {
            entry.file = item.get<std::string>();
            entry.transpose = default_transpose;
        } else if (item.is_object()) {
            entry.file = item.at("file").get<std::string>();
            entry.transpose = item.value("transpose", default_transpose);
        } else {
            throw std::runtime_error(origin + ": manifest entries must be strings or objects");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CorpusEntry> parse_flat_manifest(const std::string& text, int default_transpose) {
    std::vector<CorpusEntry> entries;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t comma = line.find(',', start);
        CorpusEntry entry;
        entry.transpose = default_transpose;
        if (comma == std::string::npos) {
            entry.file = line.substr(start);
        } else {
            entry.file = line.substr(start, comma - start);
            entry.transpose = std::stoi(line.substr(comma + 1));
        }
        while (!entry.file.empty() && (entry.file.back() == ' ' || entry.file.back() == '\t' ||
                                       entry.file.back() == '\r'))
            entry.file.pop_back();
        if (!entry.file.empty()) entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<std::string> labels_for(int n) {
    std::vector<std::string> labels;
    if (n == pitch_alphabet::kSize) {
        for (int i = 0; i < n; ++i) labels.push_back(pitch_alphabet::name(i));
    } else if (n == duration_alphabet::kSize) {
        for (int i = 0; i < n; ++i) labels.push_back(duration_alphabet::name(i));
    }
    return labels;
}

TransitionGraph load_graph(const fs::path& states_csv, AlphabetKind kind,
                           const ConductanceCurve& curve) {
    Matrix states = read_matrix_csv(states_csv);
    TransitionGraph graph(kind, curve);
    if (states.rows() != graph.size() || states.cols() != graph.size())
        throw std::runtime_error(states_csv.string() + ": expected " +
                                 std::to_string(graph.size()) + "x" +
                                 std::to_string(graph.size()) + " matrix, got " +
                                 std::to_string(states.rows()) + "x" +
                                 std::to_string(states.cols()));
    graph.set_states(states);
    return graph;
}

void write_graph_files(const fs::path& dir, const TransitionGraph& pitch_graph,
                       const TransitionGraph& tempo_graph, const std::string& suffix) {
    write_matrix_csv(dir / ("pitch-states" + suffix + ".csv"), pitch_graph.states(),
                     labels_for(pitch_graph.size()));
    write_matrix_csv(dir / ("tempo-states" + suffix + ".csv"), tempo_graph.states(),
                     labels_for(tempo_graph.size()));
    write_matrix_csv(dir / ("pitch-weights" + suffix + ".csv"), pitch_graph.effective_weights(),
                     labels_for(pitch_graph.size()), kWeightDigits);
    write_matrix_csv(dir / ("tempo-weights" + suffix + ".csv"), tempo_graph.effective_weights(),
                     labels_for(tempo_graph.size()), kWeightDigits);
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path.string());
    file << text;
    if (!file) throw std::runtime_error("write failed: " + path.string());
}

std::string trace_to_csv(const std::vector<TraceEntry>& trace) {
    std::string out = "step,from_pitch,to_pitch,score,from_dur,to_dur,dur_score\n";
    for (const TraceEntry& t : trace) {
        out += std::to_string(t.step);
        out += ',';
        out += pitch_alphabet::name(t.from_pitch);
        out += ',';
        out += pitch_alphabet::name(t.to_pitch);
        out += ',';
        out += format_value(t.pitch_score);
        out += ',';
        out += format_value(duration_alphabet::value(t.from_duration));
        out += ',';
        out += format_value(duration_alphabet::value(t.to_duration));
        out += ',';
        out += format_value(t.duration_score);
        out += '\n';
    }
    return out;
}

int guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitSuccess;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace

SeedCorpus load_corpus(const std::string& corpus_path, int default_transpose) {
    fs::path path(corpus_path);
    std::string text = read_file(path);

    std::vector<CorpusEntry> entries;
    if (path.extension() == ".mel") {
        entries.push_back(CorpusEntry{corpus_path, default_transpose});
    } else if (path.extension() == ".json") {
        entries = parse_json_manifest(text, default_transpose, corpus_path);
    } else {
        entries = parse_flat_manifest(text, default_transpose);
    }
    if (entries.empty()) throw std::runtime_error(corpus_path + ": empty corpus");

    SeedCorpus corpus;
    fs::path base = path.parent_path();
    for (const CorpusEntry& entry : entries) {
        fs::path melody_path(entry.file);
        if (melody_path.is_relative() && entry.file != corpus_path)
            melody_path = base / melody_path;
        std::string melody_text =
            entry.file == corpus_path ? text : read_file(melody_path);
        Melody melody;
        try {
            melody = parse_melody(melody_text, melody_path.stem().string());
        } catch (const ParseError& e) {
            throw std::runtime_error(melody_path.string() + ": " + e.what());
        }
        corpus.melodies.push_back(normalize(melody, entry.transpose));
    }
    return corpus;
}

int run_seed(const SeedOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        options.curve.validate();
        SeedCorpus corpus = load_corpus(options.corpus, options.default_transpose);
        auto [pitch_graph, tempo_graph] =
            seed_graphs(corpus, options.curve, options.state_per_count);
        fs::create_directories(options.out_dir);
        write_graph_files(options.out_dir, pitch_graph, tempo_graph, "");
        out << "seeded " << corpus.melodies.size() << " melodies -> " << options.out_dir << "\n";
    });
}

int run_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        options.curve.validate();
        TransitionGraph pitch_graph =
            load_graph(options.pitch_states, AlphabetKind::Pitch, options.curve);
        TransitionGraph tempo_graph =
            load_graph(options.tempo_states, AlphabetKind::Duration, options.curve);

        GeneratedPiece piece = generate(pitch_graph, tempo_graph, options.config);

        fs::create_directories(options.out_dir);
        fs::path dir(options.out_dir);
        Melody melody{"generated", piece.events};
        write_text_file(dir / "piece.mel", format_melody(melody));
        write_text_file(dir / "trace.csv", trace_to_csv(piece.trace));
        if (options.config.feedback)
            write_graph_files(dir, piece.pitch_graph, piece.tempo_graph, "-post");
        out << "generated " << piece.events.size() << " notes -> " << options.out_dir << "\n";
    });
}

int run_evolve(const EvolveOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        options.curve.validate();
        if (options.snapshots.empty())
            throw std::runtime_error("evolve: at least one snapshot point required");
        long long total = options.total_notes >= 0 ? options.total_notes
                                                   : options.snapshots.back();
        TransitionGraph pitch_graph =
            load_graph(options.pitch_states, AlphabetKind::Pitch, options.curve);
        TransitionGraph tempo_graph =
            load_graph(options.tempo_states, AlphabetKind::Duration, options.curve);

        EvolutionResult result =
            evolve(pitch_graph, tempo_graph, options.config, total, options.snapshots);

        fs::path dir(options.out_dir);
        for (const EvolutionSnapshot& snap : result.snapshots) {
            fs::path snap_dir = dir / ("snapshot-" + std::to_string(snap.notes));
            fs::create_directories(snap_dir);
            write_matrix_csv(snap_dir / "pitch-states.csv", snap.pitch_states,
                             labels_for(snap.pitch_states.rows()));
            write_matrix_csv(snap_dir / "tempo-states.csv", snap.tempo_states,
                             labels_for(snap.tempo_states.rows()));
            Melody excerpt{"excerpt", snap.excerpt};
            write_text_file(snap_dir / "excerpt.mel", format_melody(excerpt));
        }
        out << "evolved " << total << " notes, " << result.snapshots.size() << " snapshots -> "
            << options.out_dir << "\n";
    });
}

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        options.curve.validate();
        Matrix states = read_matrix_csv(options.states);
        if (states.rows() != states.cols())
            throw std::runtime_error(options.states + ": analyze requires a square matrix");

        Matrix weights(states.rows(), states.cols());
        for (int i = 0; i < states.rows(); ++i)
            for (int j = 0; j < states.cols(); ++j)
                weights(i, j) = conductance(options.curve, states(i, j));

        Matrix reference;
        const Matrix* reference_ptr = nullptr;
        if (!options.reference.empty()) {
            reference = read_matrix_csv(options.reference);
            reference_ptr = &reference;
        }
        StyleReport report =
            make_report(weights, options.curve.g_min, &states, reference_ptr);

        out << report_to_table(report, labels_for(states.rows()));
        std::string json = report_to_json(report);
        if (options.json_to_stdout) out << json << "\n";
        if (!options.out_dir.empty()) {
            fs::create_directories(options.out_dir);
            write_text_file(fs::path(options.out_dir) / "report.json", json + "\n");
        }
    });
}

} // namespace memtune::cli
