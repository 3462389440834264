#include "evdeg/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace evdeg {

namespace {

// Splits off comments and whitespace; returns the remaining tokens.
std::vector<std::string> content_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> tokens;
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

bool parse_int64(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) {
        return false;
    }
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph from_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    std::int64_t n = -1;
    std::int64_t m = -1;

    while (n < 0 && std::getline(in, line)) {
        ++line_no;
        auto tokens = content_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        std::int64_t mm = 0;
        std::int64_t nn = 0;
        if (tokens.size() != 2 || !parse_int64(tokens[0], nn) || !parse_int64(tokens[1], mm) ||
            nn < 0 || mm < 0) {
            throw parse_error(line_no, "malformed header, expected \"n m\"");
        }
        if (nn > std::numeric_limits<int>::max()) {
            throw parse_error(line_no, "vertex count " + tokens[0] + " too large");
        }
        n = nn;
        m = mm;
        header_line = line_no;
    }
    if (n < 0) {
        throw parse_error(line_no + 1, "missing header, expected \"n m\"");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<int, int>> seen;
    while (static_cast<std::int64_t>(edges.size()) < m && std::getline(in, line)) {
        ++line_no;
        auto tokens = content_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        std::int64_t u = 0;
        std::int64_t v = 0;
        if (tokens.size() != 2 || !parse_int64(tokens[0], u) || !parse_int64(tokens[1], v)) {
            throw parse_error(line_no, "malformed edge line, expected \"u v\"");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw parse_error(line_no, "vertex id out of range (n=" + std::to_string(n) + ")");
        }
        if (u == v) {
            throw parse_error(line_no, "loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(key).second) {
            throw parse_error(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        edges.push_back(Edge{key.first, key.second});
    }
    if (static_cast<std::int64_t>(edges.size()) < m) {
        throw parse_error(line_no + 1, "edge count mismatch: header says " + std::to_string(m) +
                                           ", found " + std::to_string(edges.size()));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!content_tokens(line).empty()) {
            throw parse_error(line_no, "edge count mismatch: extra content after " +
                                           std::to_string(m) + " edges");
        }
    }
    (void)header_line;
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

void to_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    to_edge_list(g, out);
    return out.str();
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
    if (s.empty()) {
        throw std::invalid_argument("empty graph6 string");
    }

    std::size_t pos = 0;
    std::int64_t n = 0;
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
            throw std::invalid_argument("graph6 size >= 2^18 not supported");
        }
        if (s.size() < 4) {
            throw std::invalid_argument("truncated graph6 size field");
        }
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (c < 63 || c > 126) {
                throw std::invalid_argument("invalid graph6 byte at position " + std::to_string(i));
            }
            n = (n << 6) | (c - 63);
        }
        pos = 4;
    } else {
        if (first < 63 || first > 125) {
            throw std::invalid_argument("invalid graph6 byte at position 0");
        }
        n = first - 63;
        pos = 1;
    }

    std::int64_t nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nbytes) {
        throw std::invalid_argument("truncated graph6 bit stream: need " + std::to_string(nbytes) +
                                    " data bytes, got " + std::to_string(s.size() - pos));
    }
    if (s.size() - pos > nbytes) {
        throw std::invalid_argument("trailing bytes after graph6 bit stream");
    }
    for (std::size_t i = pos; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) {
            throw std::invalid_argument("invalid graph6 byte at position " + std::to_string(i));
        }
    }

    std::vector<Edge> edges;
    std::int64_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(bit / 6)]) - 63;
            if ((c >> (5 - bit % 6)) & 1) {
                edges.push_back(Edge{row, col});
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    std::int64_t n = g.n();
    if (n >= (std::int64_t{1} << 18)) {
        throw std::invalid_argument("graph too large for graph6 (n >= 2^18)");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

}  // namespace evdeg
