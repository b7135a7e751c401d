#include "gext/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gext/errors.hpp"

namespace gext {

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size())
{
    for (VertexId v = 0; v < labels_.size(); ++v) {
        if (!ids_.emplace(labels_[v], v).second)
            throw DomainError("duplicate vertex label", labels_[v]);
    }
    for (auto [u, v] : edges) {
        if (u >= labels_.size() || v >= labels_.size())
            throw DomainError("edge endpoint out of range");
        if (u == v)
            throw DomainError("self-loop violates simple graph", labels_[u]);
        if (edge_set_.insert(key(u, v)).second) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return Graph(std::move(labels), edges);
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept
{
    return u != v && edge_set_.count(key(u, v)) != 0;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const
{
    if (v >= adjacency_.size())
        throw DomainError("vertex out of range", std::to_string(v));
    return adjacency_[v];
}

const std::string& Graph::label(VertexId v) const
{
    if (v >= labels_.size())
        throw DomainError("vertex out of range", std::to_string(v));
    return labels_[v];
}

std::optional<VertexId> Graph::find(std::string_view label) const
{
    auto it = ids_.find(std::string(label));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_set_.size());
    for (VertexId u = 0; u < adjacency_.size(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

namespace {

// Incremental builder shared by the two parsers.
struct Ingest
{
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::pair<VertexId, VertexId>> edges;

    VertexId intern(const std::string& label)
    {
        auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    }
};

} // namespace

Graph parse_edge_list(std::string_view text)
{
    Ingest in;
    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;)
            tok.push_back(t);
        if (tok.empty() || tok.front().front() == '#')
            continue;
        if (tok.size() == 1) {
            in.intern(tok[0]);
        } else if (tok.size() == 2) {
            if (tok[0] == tok[1])
                throw ParseError("self-loop '" + tok[0] + " " + tok[1] + "' violates simple graph", lineno);
            VertexId u = in.intern(tok[0]);
            VertexId v = in.intern(tok[1]);
            in.edges.emplace_back(u, v);
        } else {
            throw ParseError("expected 1 or 2 labels, found " + std::to_string(tok.size()), lineno);
        }
    }
    return Graph(std::move(in.labels), in.edges);
}

std::string to_edge_list(const Graph& g)
{
    std::string out;
    for (const auto& label : g.labels())
        out += label + "\n";
    for (auto [u, v] : g.edges())
        out += g.label(u) + " " + g.label(v) + "\n";
    return out;
}

Graph parse_graph_json(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what(), 1);
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("graph JSON needs a \"vertices\" array", 1);

    Ingest in;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string())
            throw ParseError("vertex labels must be strings", 1);
        auto label = v.get<std::string>();
        if (in.ids.count(label))
            throw DomainError("duplicate vertex label", label);
        in.intern(label);
    }
    if (doc.contains("edges")) {
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("edges must be pairs of labels", 1);
            auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
            if (!in.ids.count(a) || !in.ids.count(b))
                throw DomainError("edge references undeclared vertex", a + " " + b);
            if (a == b)
                throw DomainError("self-loop violates simple graph", a);
            in.edges.emplace_back(in.ids[a], in.ids[b]);
        }
    }
    return Graph(std::move(in.labels), in.edges);
}

std::string to_graph_json(const Graph& g)
{
    nlohmann::json doc;
    doc["vertices"] = g.labels();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back({g.label(u), g.label(v)});
    return doc.dump();
}

namespace named {

Graph complete(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId u = 0; u < n; ++u)
        e.emplace_back(u, static_cast<VertexId>((u + 1) % n));
    return Graph::from_edges(n, e);
}

Graph path(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId u = 0; u + 1 < n; ++u)
        e.emplace_back(u, u + 1);
    return Graph::from_edges(n, e);
}

Graph petersen()
{
    // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, e);
}

Graph octahedron()
{
    // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5) are the only non-edges
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2)
                e.emplace_back(u, v);
    return Graph::from_edges(6, e);
}

} // namespace named

} // namespace gext
