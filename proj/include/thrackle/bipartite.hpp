#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace thrackle {

// An edge (left, right) of the complete bipartite graph K_{s,t}, with
// left in [1,s] and right in [s+1,s+t].  Edges order lexicographically by
// (left, right); that order is the canonical one for serialization.
struct Edge {
    int left = 0;
    int right = 0;

    auto operator<=>(const Edge&) const = default;

    bool shares_vertex(const Edge& other) const {
        return left == other.left || right == other.right;
    }
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// K_{s,t} in the fixed convex embedding: the s left vertices 1..s sit on a
// vertical line labeled bottom to top, the t right vertices s+1..s+t sit on
// a parallel line labeled top to bottom.  All crossing geometry reduces to
// integer sign tests under this labeling.
class EmbeddedBipartite {
public:
    EmbeddedBipartite(int s, int t);

    int s() const { return s_; }
    int t() const { return t_; }
    int vertex_count() const { return s_ + t_; }
    int edge_count() const { return s_ * t_; }

    bool contains(const Edge& e) const {
        return 1 <= e.left && e.left <= s_ && s_ < e.right && e.right <= s_ + t_;
    }

    bool operator==(const EmbeddedBipartite&) const = default;

private:
    int s_;
    int t_;
};

// All s*t edges in (left, right) lexicographic order.
std::vector<Edge> all_edges(const EmbeddedBipartite& g);

// Whether two vertex-disjoint edges cross as closed segments:
// (e1.left - e2.left) * (e1.right - e2.right) > 0.  The left column is
// labeled bottom-up and the right column top-down, so the matching that
// pairs the smaller left label with the smaller right label is the
// crossing one.  Throws if the edges share a vertex (use meets() for the
// inclusive predicate).
bool crosses(const Edge& e1, const Edge& e2);

// True iff the closed segments intersect: shared vertex or crossing.
// meets(e, e) is true.
bool meets(const Edge& e1, const Edge& e2);

// Number of edges of g that do not meet e.
int weight(const Edge& e, const EmbeddedBipartite& g);

// DOT rendering with the embedding's coordinates (left column at x=0,
// heights 1..s bottom-up; right column at x=1, heights decreasing from s so
// labels s+1..s+t read top-down).  Edges in `solid` are drawn solid, the
// remaining edges of g dotted; with an empty `solid` list every edge is
// drawn solid.
std::string to_dot(const EmbeddedBipartite& g, const std::vector<Edge>& solid,
                   const std::string& name);
std::string to_dot(const EmbeddedBipartite& g, const std::string& name = "K");

}  // namespace thrackle
