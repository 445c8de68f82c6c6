#include "memtune/csv.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace memtune {

std::string format_value(double value, int significant_digits) {
    char buf[64];
    std::to_chars_result r =
        significant_digits > 0
            ? std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                            significant_digits)
            : std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, r.ptr);
}

std::string matrix_to_csv(const Matrix& matrix, const std::vector<std::string>& header,
                          int significant_digits) {
    std::string out;
    if (!header.empty()) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += header[i];
        }
        out += '\n';
    }
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            if (j) out += ',';
            out += format_value(matrix(i, j), significant_digits);
        }
        out += '\n';
    }
    return out;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& matrix,
                      const std::vector<std::string>& header, int significant_digits) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path.string());
    file << matrix_to_csv(matrix, header, significant_digits);
    if (!file) throw std::runtime_error("write failed: " + path.string());
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        // trim surrounding blanks and a trailing CR
        std::size_t b = field.find_first_not_of(" \t\r");
        std::size_t e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

bool parse_field(const std::string& field, double& value) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end && !field.empty();
}

} // namespace

Matrix matrix_from_csv(const std::string& text, const std::string& origin) {
    std::istringstream stream(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first_content_line = true;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields = split_fields(line);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size() && numeric; ++i)
            numeric = parse_field(fields[i], row[i]);
        if (!numeric) {
            if (first_content_line) { // header row of symbol names
                first_content_line = false;
                continue;
            }
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": non-numeric field in matrix row");
        }
        first_content_line = false;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": ragged row width");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(origin + ": no matrix rows found");

    Matrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
    return out;
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return matrix_from_csv(buffer.str(), path.string());
}

} // namespace memtune
