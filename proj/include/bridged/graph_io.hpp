#ifndef BRIDGED_GRAPH_IO_HPP
#define BRIDGED_GRAPH_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bridged/graph.hpp"

namespace bridged {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Text format: "n m" on the first line, then m lines "u v" with 0-indexed ids,
// each undirected edge listed once. ParseError positions are 1-based line numbers.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// 64-bit FNV-1a over the canonical text form; identifies an instance across runs.
std::uint64_t instance_hash(const Graph& g);
std::string hash_hex(std::uint64_t h);

}  // namespace bridged

#endif  // BRIDGED_GRAPH_IO_HPP
