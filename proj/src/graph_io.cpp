#include "rainbow/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rainbow {

std::string graph_to_text(const EdgeColoredGraph& g) {
    std::ostringstream out;
    out << "ecg " << g.n() << " " << g.palette_size() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

EdgeColoredGraph graph_from_text(std::istream& in) {
    std::string line;
    int n = -1;
    int declared_palette = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "ecg") {
            if (n >= 0) throw Error(ErrorCode::FormatError, "duplicate header at line " + std::to_string(lineno));
            if (!(ls >> n >> declared_palette))
                throw Error(ErrorCode::FormatError, "malformed header at line " + std::to_string(lineno));
        } else if (tag == "e") {
            Edge e{};
            if (!(ls >> e.u >> e.v >> e.color))
                throw Error(ErrorCode::FormatError, "malformed edge at line " + std::to_string(lineno));
            edges.push_back(e);
        } else {
            throw Error(ErrorCode::FormatError, "unknown record '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw Error(ErrorCode::FormatError, "missing 'ecg' header");
    EdgeColoredGraph g = EdgeColoredGraph::build(n, std::move(edges));
    if (declared_palette != g.palette_size())
        throw Error(ErrorCode::FormatError,
                    "declared palette_size " + std::to_string(declared_palette) +
                        " but graph uses " + std::to_string(g.palette_size()) + " colors");
    return g;
}

EdgeColoredGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return graph_from_text(in);
}

std::string graph_to_json(const EdgeColoredGraph& g) {
    nlohmann::ordered_json j;
    j["format"] = "ecg";
    j["n"] = g.n();
    j["palette_size"] = g.palette_size();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

EdgeColoredGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FormatError, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorCode::FormatError, "graph JSON requires fields 'n' and 'edges'");
    std::vector<Edge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 3)
            throw Error(ErrorCode::FormatError, "each edge must be [u, v, c]");
        edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
    }
    EdgeColoredGraph g = EdgeColoredGraph::build(j["n"].get<int>(), std::move(edges));
    if (j.contains("palette_size") && j["palette_size"].get<int>() != g.palette_size())
        throw Error(ErrorCode::FormatError, "declared palette_size does not match edge colors");
    return g;
}

EdgeColoredGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
    return graph_from_text(text);
}

void save_graph_file(const EdgeColoredGraph& g, const std::string& path, bool json) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << (json ? graph_to_json(g) : graph_to_text(g));
}

} // namespace rainbow
