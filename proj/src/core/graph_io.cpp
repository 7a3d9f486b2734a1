#include "core/graph_io.hpp"

#include "core/error.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace dominion {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    fail(Errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    if (tok[0] == '-') i = 1;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;

    // header: "n <count>", skipping blank lines
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2 || toks[0] != "n")
            parse_fail(line_no, "expected header \"n <count>\", got \"" + line + "\"");
        if (!parse_int_token(toks[1], n) || n < 0)
            parse_fail(line_no, "bad vertex count \"" + toks[1] + "\"");
        if (n > kMaxVertices)
            fail(Errc::capacity, "line " + std::to_string(line_no) + ": vertex count " +
                                     std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
        break;
    }
    if (n < 0) fail(Errc::parse, "missing header line \"n <count>\"");

    Graph g(static_cast<int>(n));
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        long long u = 0;
        long long v = 0;
        if (toks.size() != 2 || !parse_int_token(toks[0], u) || !parse_int_token(toks[1], v))
            parse_fail(line_no, "expected edge \"u v\", got \"" + line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(line_no, "vertex index out of range 0.." + std::to_string(n - 1) + ": \"" +
                                    line + "\"");
        if (u == v) parse_fail(line_no, "loop edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v)); // duplicates collapse via bitset
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u).members())
            if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

constexpr int kG6Base = 63; // printable graph6 bytes span 63..126

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    // some encoders prefix an optional ">>graph6<<" header
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) fail(Errc::parse, "empty graph6 string");

    for (char c : s)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            fail(Errc::parse, "graph6 byte out of range 63..126: code " +
                                  std::to_string(static_cast<int>(static_cast<unsigned char>(c))));

    std::size_t pos = 0;
    long long n = 0;
    if (s[pos] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            fail(Errc::parse, "graph6 8-byte order encoding exceeds supported range");
        if (pos + 3 > s.size()) fail(Errc::parse, "truncated graph6 order field");
        for (int i = 0; i < 3; ++i) n = (n << 6) | (s[pos + i] - kG6Base);
        pos += 3;
        if (n < 63) fail(Errc::parse, "non-canonical graph6 order field");
    } else {
        n = s[pos] - kG6Base;
        ++pos;
    }
    if (n > kMaxVertices)
        fail(Errc::capacity,
             "graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    const std::size_t bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (s.size() - pos != body)
        fail(Errc::parse, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                              std::to_string(body));

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            const int value = s[pos + bit / 6] - kG6Base;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    // padding bits of the final byte must be zero
    for (; bit < body * 6; ++bit) {
        const int value = s[pos + bit / 6] - kG6Base;
        if ((value >> (5 - bit % 6)) & 1) fail(Errc::parse, "nonzero graph6 padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Base + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kG6Base + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Base + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Base + (n & 63)));
    }
    int value = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            value = (value << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kG6Base + value));
                value = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(kG6Base + (value << (6 - filled))));
    return out;
}

} // namespace dominion
