#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kcc {

struct StreamItem {
    enum class Kind { Insert, Delete, Marker };
    Kind kind = Kind::Insert;
    std::string id;
    std::vector<double> coords;
    long line = 0;
};

struct Stream {
    std::vector<StreamItem> items;
    std::size_t dim = 0;        // coordinate width; 0 for id-only (matrix) streams
    bool has_coords = false;
};

// Line grammar: `I <id> <x1> ... <xd>` / `I <id>` (matrix row id) / `D <id>` /
// `---` (preprocessing boundary). `#` starts a comment; blank lines ignored.
Stream parse_stream_text(const std::string& text);
Stream parse_stream(const std::string& path);

std::string render_stream(const Stream& s);
void write_stream(const Stream& s, const std::string& path);

struct MatrixData {
    std::size_t n = 0;
    std::vector<double> table;   // row-major n*n
};

// File format: header `matrix <n>` then n*n numbers.
MatrixData load_matrix(const std::string& path);
void write_matrix(const MatrixData& m, const std::string& path);

}  // namespace kcc
