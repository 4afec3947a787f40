#include "twcolor/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace twc {

namespace {

// Next non-blank, non-comment line; false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw Error(ErrorKind::ParseError, "empty edge list");
    long long n, m;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw Error(ErrorKind::ParseError, "header must be \"n m\", got \"" + line + "\"");
    }
    if (n < 0 || m < 0)
        throw Error(ErrorKind::ParseError, "negative count in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw Error(ErrorKind::ParseError,
                        "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw Error(ErrorKind::ParseError, "bad edge line \"" + line + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line))
        throw Error(ErrorKind::ParseError, "trailing data after " + std::to_string(m) + " edges");
    Graph g = build_graph(static_cast<int>(n), edges);
    if (g.edge_count() != m)
        throw Error(ErrorKind::ParseError, "duplicate edges in input");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot open " + path + " for writing");
    write_edge_list(out, g);
    if (!out) throw Error(ErrorKind::ParseError, "write failed for " + path);
}

} // namespace twc
