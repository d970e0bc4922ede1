#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thrackle/bipartite.hpp"
#include "thrackle/numeric.hpp"

namespace thrackle {

// Every pair of edges meets (shares a vertex or crosses); vacuously true
// for at most one edge.
bool is_thrackle(const EmbeddedBipartite& g, const std::vector<Edge>& edges);

// Thrackle with s+t-1 edges covering all s+t vertices.  Such a set is
// automatically acyclic, hence a spanning tree.
bool is_spanning_thrackle(const EmbeddedBipartite& g, const std::vector<Edge>& edges);

// Union-find cycle check, independent of any thrackle structure.
bool is_acyclic(const EmbeddedBipartite& g, const std::vector<Edge>& edges);

// Breakpoint encoding of a spanning thrackle: a non-decreasing sequence
// i_1 <= ... <= i_{s-1} with values in [s+1, s+t].  With i_0 = s+1 and
// i_s = s+t, left vertex k is adjacent to exactly the right vertices
// [i_{k-1}, i_k]; consecutive intervals share their endpoint, so the edge
// total is s+t-1.
struct IntervalRep {
    int s = 0;
    int t = 0;
    std::vector<int> breakpoints;

    IntervalRep(int s, int t, std::vector<int> breakpoints);

    bool operator==(const IntervalRep&) const = default;
};

// A validated spanning thrackle; construction rejects edge sets that are
// not spanning thrackles.  Edges are kept sorted in (left, right) order,
// and the breakpoint encoding is derived once on construction.
class SpanningThrackle {
public:
    SpanningThrackle(const EmbeddedBipartite& g, std::vector<Edge> edges);

    const EmbeddedBipartite& graph() const { return graph_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& breakpoints() const { return breakpoints_; }
    IntervalRep interval() const;

    bool operator==(const SpanningThrackle& other) const {
        return graph_ == other.graph_ && edges_ == other.edges_;
    }
    bool operator<(const SpanningThrackle& other) const { return edges_ < other.edges_; }

private:
    EmbeddedBipartite graph_;
    std::vector<Edge> edges_;
    std::vector<int> breakpoints_;
};

IntervalRep thrackle_to_interval(const SpanningThrackle& h);
SpanningThrackle interval_to_thrackle(const IntervalRep& rep);

// Streams the spanning thrackles of K_{s,t} one at a time, in lexicographic
// order of their breakpoint vectors.  Single-consumer.
class SpanningThrackleEnumerator {
public:
    SpanningThrackleEnumerator(int s, int t);
    std::optional<SpanningThrackle> next();

private:
    int s_;
    int t_;
    std::vector<int> breakpoints_;
    bool done_ = false;
    bool started_ = false;
};

// Materialized enumeration, breakpoint-lex order.
std::vector<SpanningThrackle> enumerate_spanning_thrackles(int s, int t);

// Independent oracle: filters every (s+t-1)-edge subset of K_{s,t} through
// is_spanning_thrackle.  Guarded to s*t <= 30.  Result sorted by edge list.
std::vector<SpanningThrackle> brute_force_spanning_thrackles(int s, int t);

// f(s,t) via the recurrence f(s,t) = sum_{i=0}^{t-1} f(s-1, t-i) with
// f(1,t) = 1.  Memoized; safe for concurrent callers.
BigInt count_recurrence(int s, int t);

// f(s,t) = C(s+t-2, s-1).
BigInt count_closed_form(int s, int t);

// Maps a spanning thrackle to a {0,1} string with s-1 zeros and t-1 ones:
// for each right vertex v from s+1 to s+t-1, emit "0" for every unmarked
// left neighbor w != 1 of v (marking w), then emit "1"; finally emit "0"
// for every unmarked left neighbor w != 1 of s+t.
std::string phi(const SpanningThrackle& h);

// Inverse of phi; rejects strings without exactly s-1 zeros and t-1 ones.
SpanningThrackle phi_inverse(const std::string& bits, int s, int t);

// All inclusion-maximal thrackles inside the given subgraph of g, via
// maximal-clique search on the meets-compatibility graph (thrackles are
// exactly the cliques of the meets relation).  Guarded to 24 edges.
// Each thrackle is sorted; the list is sorted lexicographically.
std::vector<std::vector<Edge>> maximal_thrackles(const EmbeddedBipartite& g,
                                                 const std::vector<Edge>& subgraph);

// {"s":..., "t":..., "edges":[[i,j],...], "breakpoints":[...]}
nlohmann::json to_json(const SpanningThrackle& h);

}  // namespace thrackle
