#include "kix/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace kix {

namespace {

// Strips comments and splits into whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

int to_int(const std::string& tok) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

PlaneMultigraph parse_graph(std::istream& in) {
    std::vector<std::string> t = tokenize(in);
    std::size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= t.size()) throw Error(ErrorCode::ParseError, "unexpected end of graph file");
        return t[i++];
    };
    if (next() != "kix-graph" || next() != "1")
        throw Error(ErrorCode::ParseError, "missing 'kix-graph 1' header");
    int n = to_int(next());
    int m = to_int(next());
    if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative V or E");
    std::vector<std::pair<int, int>> edges(m, {-1, -1});
    std::vector<char> seen(m, 0);
    for (int e = 0; e < m; ++e) {
        if (next() != "edge") throw Error(ErrorCode::ParseError, "expected 'edge' line");
        int id = to_int(next());
        int u = to_int(next());
        int v = to_int(next());
        if (id < 0 || id >= m || seen[id])
            throw Error(ErrorCode::ParseError, "edge ids must be 0..E-1, each once");
        seen[id] = 1;
        edges[id] = {u, v};
    }
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen_v(n, 0);
    for (int r = 0; r < n; ++r) {
        if (next() != "rot") throw Error(ErrorCode::ParseError, "expected 'rot' line");
        int v = to_int(next());
        if (v < 0 || v >= n || seen_v[v])
            throw Error(ErrorCode::ParseError, "rot lines must cover each vertex once");
        seen_v[v] = 1;
        // The vertex's degree determines how many ids follow.
        int deg = 0;
        for (int e = 0; e < m; ++e) deg += (edges[e].first == v) + (edges[e].second == v);
        for (int j = 0; j < deg; ++j) rot[v].push_back(to_int(next()));
    }
    if (i != t.size()) throw Error(ErrorCode::ParseError, "trailing tokens in graph file");
    return PlaneMultigraph::build(n, edges, rot);
}

PlaneMultigraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

PlaneMultigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    return parse_graph(in);
}

std::string print_graph(const PlaneMultigraph& g) {
    std::ostringstream out;
    out << "kix-graph 1\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << "edge " << e.id << " " << e.u << " " << e.v << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v;
        for (int e : g.rotation()[v]) out << " " << e;
        out << "\n";
    }
    return out.str();
}

void save_graph(const PlaneMultigraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << print_graph(g);
}

PartialColoring parse_coloring(std::istream& in, const PlaneMultigraph& g) {
    std::vector<std::string> t = tokenize(in);
    std::size_t i = 0;
    PartialColoring phi = PartialColoring::empty(g, 5);
    bool saw_palette = false;
    while (i < t.size()) {
        const std::string& kw = t[i++];
        if (kw == "palette") {
            if (i >= t.size()) throw Error(ErrorCode::ParseError, "palette needs a value");
            phi.palette = to_int(t[i++]);
            if (phi.palette <= 0) throw Error(ErrorCode::ParseError, "palette must be positive");
            saw_palette = true;
        } else if (kw == "color") {
            if (i + 1 >= t.size()) throw Error(ErrorCode::ParseError, "color needs edge and value");
            int e = to_int(t[i++]);
            int c = to_int(t[i++]);
            if (e < 0 || e >= g.edge_count())
                throw Error(ErrorCode::ParseError, "color line for unknown edge " + std::to_string(e));
            if (c <= 0) throw Error(ErrorCode::ParseError, "colors are positive integers");
            phi.color[e] = c;
        } else {
            throw Error(ErrorCode::ParseError, "unknown keyword '" + kw + "' in coloring file");
        }
    }
    if (!saw_palette) throw Error(ErrorCode::ParseError, "coloring file missing 'palette'");
    return phi;
}

PartialColoring parse_coloring_string(const std::string& text, const PlaneMultigraph& g) {
    std::istringstream in(text);
    return parse_coloring(in, g);
}

PartialColoring load_coloring(const std::string& path, const PlaneMultigraph& g) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    return parse_coloring(in, g);
}

std::string print_coloring(const PartialColoring& phi) {
    std::ostringstream out;
    out << "palette " << phi.palette << "\n";
    for (int e = 0; e < static_cast<int>(phi.color.size()); ++e)
        if (phi.color[e] != 0) out << "color " << e << " " << phi.color[e] << "\n";
    return out.str();
}

}  // namespace kix
