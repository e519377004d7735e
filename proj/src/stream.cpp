#include "kcc/stream.hpp"

#include <fstream>
#include <sstream>

#include "kcc/errors.hpp"
#include "kcc/format.hpp"

namespace kcc {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

double parse_number(const std::string& tok, long line_no) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", line_no);
    }
    if (used != tok.size()) throw ParseError("expected a number, got '" + tok + "'", line_no);
    return v;
}

}  // namespace

Stream parse_stream_text(const std::string& text) {
    Stream s;
    std::istringstream is(text);
    std::string line;
    long line_no = 0;
    bool saw_insert = false;
    while (std::getline(is, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "---") {
            if (toks.size() != 1) throw ParseError("unexpected tokens after marker", line_no);
            s.items.push_back(StreamItem{StreamItem::Kind::Marker, "", {}, line_no});
            continue;
        }
        if (toks[0] == "I") {
            if (toks.size() < 2) throw ParseError("insert needs an id", line_no);
            StreamItem it{StreamItem::Kind::Insert, toks[1], {}, line_no};
            for (std::size_t i = 2; i < toks.size(); ++i)
                it.coords.push_back(parse_number(toks[i], line_no));
            if (!saw_insert) {
                saw_insert = true;
                s.has_coords = !it.coords.empty();
                s.dim = it.coords.size();
            } else if (it.coords.size() != s.dim) {
                throw ParseError("point has " + std::to_string(it.coords.size()) +
                                     " coordinates, stream uses " + std::to_string(s.dim),
                                 line_no);
            }
            s.items.push_back(std::move(it));
            continue;
        }
        if (toks[0] == "D") {
            if (toks.size() != 2) throw ParseError("delete takes exactly one id", line_no);
            s.items.push_back(StreamItem{StreamItem::Kind::Delete, toks[1], {}, line_no});
            continue;
        }
        throw ParseError("unknown operation '" + toks[0] + "'", line_no);
    }
    return s;
}

Stream parse_stream(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open stream file " + path, 0);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_stream_text(buf.str());
}

std::string render_stream(const Stream& s) {
    std::string out;
    for (const auto& it : s.items) {
        switch (it.kind) {
            case StreamItem::Kind::Insert:
                out += "I " + it.id;
                for (double c : it.coords) out += " " + fmt_g(c);
                break;
            case StreamItem::Kind::Delete:
                out += "D " + it.id;
                break;
            case StreamItem::Kind::Marker:
                out += "---";
                break;
        }
        out += "\n";
    }
    return out;
}

void write_stream(const Stream& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write stream file " + path, 0);
    f << render_stream(s);
}

MatrixData load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open matrix file " + path, 0);
    std::string header;
    if (!std::getline(f, header)) throw ParseError("matrix file is empty", 1);
    auto toks = tokenize(header);
    if (toks.size() != 2 || toks[0] != "matrix")
        throw ParseError("matrix file must start with 'matrix <n>'", 1);
    long n_val = static_cast<long>(parse_number(toks[1], 1));
    if (n_val < 1) throw ParseError("matrix size must be positive", 1);
    MatrixData m;
    m.n = static_cast<std::size_t>(n_val);
    m.table.reserve(m.n * m.n);
    std::string line;
    long line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        for (const auto& tok : tokenize(line)) {
            if (m.table.size() == m.n * m.n)
                throw ParseError("matrix has more than n*n entries", line_no);
            m.table.push_back(parse_number(tok, line_no));
        }
    }
    if (m.table.size() != m.n * m.n)
        throw ParseError("matrix has " + std::to_string(m.table.size()) + " entries, expected " +
                             std::to_string(m.n * m.n),
                         line_no);
    return m;
}

void write_matrix(const MatrixData& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write matrix file " + path, 0);
    f << "matrix " << m.n << "\n";
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j) f << " ";
            f << fmt_g(m.table[i * m.n + j]);
        }
        f << "\n";
    }
}

}  // namespace kcc
