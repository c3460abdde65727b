#include "bridged/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bridged {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_data_line(in, line, line_no)) throw ParseError("missing header line 'n m'", line_no + 1);

    long long n = -1, m = -1;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
            throw ParseError("malformed header, expected 'n m'", line_no);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no)) throw ParseError("expected " + std::to_string(m) + " edges", line_no + 1);
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError("malformed edge line", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex id out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(in, line, line_no)) throw ParseError("trailing data after edge list", line_no);
    try {
        return Graph(static_cast<std::size_t>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file " + path);
    write_graph(out, g);
}

std::uint64_t instance_hash(const Graph& g) {
    std::ostringstream text;
    write_graph(text, g);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace bridged
