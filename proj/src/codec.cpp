#include "hamspec/codec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamspec {

namespace {
constexpr std::string_view g6_header = ">>graph6<<";

[[noreturn]] void bad_g6(const std::string& why) {
    throw std::invalid_argument("graph6: " + why);
}
}  // namespace

std::string to_graph6(const Graph& g) {
    if (g.n > 62)
        throw std::invalid_argument("graph6 short form is limited to 62 vertices, got " +
                                    std::to_string(g.n));
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int bits = 0, acc = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.substr(0, g6_header.size()) == g6_header) line.remove_prefix(g6_header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) bad_g6("empty input");
    if (line[0] == '~') bad_g6("long form (n > 62) not supported");
    int n = static_cast<int>(static_cast<unsigned char>(line[0])) - 63;
    if (n < 0 || n > 62) bad_g6("invalid order byte '" + std::string(1, line[0]) + "'");
    size_t payload_bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t want = (payload_bits + 5) / 6;
    if (line.size() - 1 != want)
        bad_g6("expected " + std::to_string(want) + " payload bytes for n=" + std::to_string(n) +
               ", got " + std::to_string(line.size() - 1));

    Graph g = Graph::empty(n);
    size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            unsigned char ch = static_cast<unsigned char>(line[1 + bit / 6]);
            if (ch < 63 || ch > 126)
                bad_g6("byte " + std::to_string(1 + bit / 6) + " out of range");
            int v = ch - 63;
            if ((v >> (5 - bit % 6)) & 1) {
                g.adj[static_cast<size_t>(row)] |= vbit(col);
                g.adj[static_cast<size_t>(col)] |= vbit(row);
            }
        }
    }
    // padding bits must be zero
    for (size_t b = payload_bits; b < want * 6; ++b) {
        unsigned char ch = static_cast<unsigned char>(line[1 + b / 6]);
        if (ch < 63 || ch > 126) bad_g6("byte " + std::to_string(1 + b / 6) + " out of range");
        if (((ch - 63) >> (5 - b % 6)) & 1) bad_g6("nonzero padding bits");
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph from_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_v = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "n") {
            if (!(ls >> declared_n) || declared_n < 0)
                throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                            ": bad vertex count");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected an integer, got '" + first + "'");
        }
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected 'u v'");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": trailing token '" + extra + "'");
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": negative vertex");
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_v + 1;
    if (max_v >= n)
        throw std::invalid_argument("edge list: vertex " + std::to_string(max_v) +
                                    " exceeds declared count " + std::to_string(n));
    return Graph::build(n, edges);
}

}  // namespace hamspec
