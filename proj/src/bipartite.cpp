#include "thrackle/bipartite.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace thrackle {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << '(' << e.left << ',' << e.right << ')';
}

EmbeddedBipartite::EmbeddedBipartite(int s, int t) : s_(s), t_(t) {
    if (s < 1 || t < 1)
        throw std::invalid_argument("EmbeddedBipartite: part sizes must be >= 1");
}

std::vector<Edge> all_edges(const EmbeddedBipartite& g) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int i = 1; i <= g.s(); ++i)
        for (int j = g.s() + 1; j <= g.s() + g.t(); ++j)
            edges.push_back(Edge{i, j});
    return edges;
}

bool crosses(const Edge& e1, const Edge& e2) {
    if (e1.shares_vertex(e2))
        throw std::invalid_argument("crosses: edges share a vertex; use meets()");
    return (e1.left - e2.left) * (e1.right - e2.right) > 0;
}

bool meets(const Edge& e1, const Edge& e2) {
    if (e1.shares_vertex(e2)) return true;
    return (e1.left - e2.left) * (e1.right - e2.right) > 0;
}

int weight(const Edge& e, const EmbeddedBipartite& g) {
    if (!g.contains(e)) throw std::invalid_argument("weight: edge not in graph");
    int w = 0;
    for (const Edge& f : all_edges(g))
        if (f != e && !meets(e, f)) ++w;
    return w;
}

std::string to_dot(const EmbeddedBipartite& g, const std::vector<Edge>& solid,
                   const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  layout=neato;\n  node [shape=circle];\n";
    for (int i = 1; i <= g.s(); ++i)
        os << "  " << i << " [pos=\"0," << i << "!\"];\n";
    // label s+1 at the top (height s), labels increasing downward
    for (int j = g.s() + 1; j <= g.s() + g.t(); ++j)
        os << "  " << j << " [pos=\"1," << (2 * g.s() + 1 - j) << "!\"];\n";
    const bool highlight = !solid.empty();
    for (const Edge& e : all_edges(g)) {
        os << "  " << e.left << " -- " << e.right;
        if (highlight && std::find(solid.begin(), solid.end(), e) == solid.end())
            os << " [style=dotted, color=gray]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const EmbeddedBipartite& g, const std::string& name) {
    return to_dot(g, {}, name);
}

}  // namespace thrackle
