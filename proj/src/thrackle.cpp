#include "thrackle/thrackle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace thrackle {

namespace {

void require_edges_of(const EmbeddedBipartite& g, const std::vector<Edge>& edges,
                      const char* who) {
    for (const Edge& e : edges)
        if (!g.contains(e))
            throw std::invalid_argument(std::string(who) + ": edge not in graph");
}

}  // namespace

bool is_thrackle(const EmbeddedBipartite& g, const std::vector<Edge>& edges) {
    require_edges_of(g, edges, "is_thrackle");
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (!meets(edges[a], edges[b])) return false;
    return true;
}

bool is_spanning_thrackle(const EmbeddedBipartite& g, const std::vector<Edge>& edges) {
    require_edges_of(g, edges, "is_spanning_thrackle");
    const int n = g.vertex_count();
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (const Edge& e : sorted) {
        covered[static_cast<std::size_t>(e.left)] = true;
        covered[static_cast<std::size_t>(e.right)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!covered[static_cast<std::size_t>(v)]) return false;
    // n-1 edges + covering + thrackle forces acyclicity (every cycle of a
    // bipartite graph is even and an even cycle contains a non-meeting pair).
    return is_thrackle(g, sorted);
}

bool is_acyclic(const EmbeddedBipartite& g, const std::vector<Edge>& edges) {
    require_edges_of(g, edges, "is_acyclic");
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : edges) {
        int a = find(e.left), b = find(e.right);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

IntervalRep::IntervalRep(int s_in, int t_in, std::vector<int> bp)
    : s(s_in), t(t_in), breakpoints(std::move(bp)) {
    if (s < 1 || t < 1) throw std::invalid_argument("IntervalRep: part sizes must be >= 1");
    if (static_cast<int>(breakpoints.size()) != s - 1)
        throw std::invalid_argument("IntervalRep: expected s-1 breakpoints");
    int prev = s + 1;
    for (int b : breakpoints) {
        if (b < prev || b > s + t)
            throw std::invalid_argument("IntervalRep: breakpoints must be non-decreasing in [s+1, s+t]");
        prev = b;
    }
}

SpanningThrackle::SpanningThrackle(const EmbeddedBipartite& g, std::vector<Edge> edges)
    : graph_(g), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    if (!is_spanning_thrackle(graph_, edges_))
        throw std::invalid_argument("SpanningThrackle: edge set is not a spanning thrackle");
    // Derive the breakpoints: right-neighborhoods are contiguous intervals
    // and consecutive intervals share exactly their endpoint.
    const int s = graph_.s(), t = graph_.t();
    std::vector<int> lo(static_cast<std::size_t>(s) + 1, 0);
    std::vector<int> hi(static_cast<std::size_t>(s) + 1, 0);
    std::vector<int> deg(static_cast<std::size_t>(s) + 1, 0);
    for (const Edge& e : edges_) {
        auto k = static_cast<std::size_t>(e.left);
        if (deg[k] == 0) lo[k] = e.right;
        hi[k] = e.right;  // edges sorted, so the last right seen is the max
        ++deg[k];
    }
    for (int k = 1; k <= s; ++k) {
        auto ks = static_cast<std::size_t>(k);
        if (hi[ks] - lo[ks] + 1 != deg[ks])
            throw std::logic_error("SpanningThrackle: neighborhood not an interval");
        if (k < s && hi[ks] != lo[ks + 1])
            throw std::logic_error("SpanningThrackle: intervals do not chain at breakpoints");
    }
    if (lo[1] != s + 1 || hi[static_cast<std::size_t>(s)] != s + t)
        throw std::logic_error("SpanningThrackle: intervals do not span the right side");
    breakpoints_.reserve(static_cast<std::size_t>(s) - 1);
    for (int k = 1; k < s; ++k) breakpoints_.push_back(hi[static_cast<std::size_t>(k)]);
}

IntervalRep SpanningThrackle::interval() const {
    return IntervalRep(graph_.s(), graph_.t(), breakpoints_);
}

IntervalRep thrackle_to_interval(const SpanningThrackle& h) { return h.interval(); }

SpanningThrackle interval_to_thrackle(const IntervalRep& rep) {
    EmbeddedBipartite g(rep.s, rep.t);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(rep.s + rep.t) - 1);
    for (int k = 1; k <= rep.s; ++k) {
        int lo = (k == 1) ? rep.s + 1 : rep.breakpoints[static_cast<std::size_t>(k) - 2];
        int hi = (k == rep.s) ? rep.s + rep.t : rep.breakpoints[static_cast<std::size_t>(k) - 1];
        for (int j = lo; j <= hi; ++j) edges.push_back(Edge{k, j});
    }
    return SpanningThrackle(g, std::move(edges));
}

SpanningThrackleEnumerator::SpanningThrackleEnumerator(int s, int t) : s_(s), t_(t) {
    EmbeddedBipartite g(s, t);  // validates s,t >= 1
    breakpoints_.assign(static_cast<std::size_t>(s) - 1, s + 1);
}

std::optional<SpanningThrackle> SpanningThrackleEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // advance to the next non-decreasing vector in lex order
        int i = static_cast<int>(breakpoints_.size()) - 1;
        while (i >= 0 && breakpoints_[static_cast<std::size_t>(i)] == s_ + t_) --i;
        if (i < 0) {
            done_ = true;
            return std::nullopt;
        }
        int v = breakpoints_[static_cast<std::size_t>(i)] + 1;
        for (std::size_t k = static_cast<std::size_t>(i); k < breakpoints_.size(); ++k)
            breakpoints_[k] = v;
    }
    started_ = true;
    return interval_to_thrackle(IntervalRep(s_, t_, breakpoints_));
}

std::vector<SpanningThrackle> enumerate_spanning_thrackles(int s, int t) {
    SpanningThrackleEnumerator en(s, t);
    std::vector<SpanningThrackle> result;
    while (auto h = en.next()) result.push_back(std::move(*h));
    return result;
}

std::vector<SpanningThrackle> brute_force_spanning_thrackles(int s, int t) {
    EmbeddedBipartite g(s, t);
    if (g.edge_count() > 30)
        throw std::invalid_argument("brute_force_spanning_thrackles: s*t must be <= 30");
    const std::vector<Edge> edges = all_edges(g);
    const int m = g.edge_count();
    const int k = g.vertex_count() - 1;
    std::vector<SpanningThrackle> found;
    if (k > m) return found;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Edge> subset(static_cast<std::size_t>(k));
    while (true) {
        for (std::size_t a = 0; a < idx.size(); ++a)
            subset[a] = edges[static_cast<std::size_t>(idx[a])];
        if (is_spanning_thrackle(g, subset)) found.emplace_back(g, subset);
        // next k-combination of {0..m-1}
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int a = i + 1; a < k; ++a)
            idx[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a) - 1] + 1;
    }
    std::sort(found.begin(), found.end());
    return found;
}

BigInt count_recurrence(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("count_recurrence: s,t must be >= 1");
    static std::map<std::pair<int, int>, BigInt> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto eval = [](auto&& self, int a, int b) -> const BigInt& {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        BigInt value;
        if (a == 1) {
            value = 1;
        } else {
            value = 0;
            for (int j = 1; j <= b; ++j) value += self(self, a - 1, j);
        }
        return memo.emplace(std::make_pair(a, b), std::move(value)).first->second;
    };
    return eval(eval, s, t);
}

BigInt count_closed_form(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("count_closed_form: s,t must be >= 1");
    return binomial(s + t - 2, s - 1);
}

std::string phi(const SpanningThrackle& h) {
    const int s = h.graph().s(), t = h.graph().t();
    // left neighbor lists per right vertex, ascending
    std::vector<std::vector<int>> left_of(static_cast<std::size_t>(s + t) + 1);
    for (const Edge& e : h.edges())
        left_of[static_cast<std::size_t>(e.right)].push_back(e.left);
    for (auto& v : left_of) std::sort(v.begin(), v.end());
    std::vector<bool> marked(static_cast<std::size_t>(s) + 1, false);
    std::string out;
    out.reserve(static_cast<std::size_t>(s + t) - 2);
    for (int v = s + 1; v <= s + t - 1; ++v) {
        for (int w : left_of[static_cast<std::size_t>(v)]) {
            if (w == 1 || marked[static_cast<std::size_t>(w)]) continue;
            out.push_back('0');
            marked[static_cast<std::size_t>(w)] = true;
        }
        out.push_back('1');
    }
    for (int w : left_of[static_cast<std::size_t>(s + t)]) {
        if (w == 1 || marked[static_cast<std::size_t>(w)]) continue;
        out.push_back('0');
        marked[static_cast<std::size_t>(w)] = true;
    }
    return out;
}

SpanningThrackle phi_inverse(const std::string& bits, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("phi_inverse: s,t must be >= 1");
    int zeros = 0, ones = 0;
    for (char c : bits) {
        if (c == '0')
            ++zeros;
        else if (c == '1')
            ++ones;
        else
            throw std::invalid_argument("phi_inverse: string must be over {0,1}");
    }
    if (zeros != s - 1 || ones != t - 1)
        throw std::invalid_argument("phi_inverse: expected s-1 zeros and t-1 ones");
    // A zero emitted after m ones was emitted while visiting right vertex
    // s+1+m, which is exactly a breakpoint.
    std::vector<int> breakpoints;
    breakpoints.reserve(static_cast<std::size_t>(s) - 1);
    int seen_ones = 0;
    for (char c : bits) {
        if (c == '1')
            ++seen_ones;
        else
            breakpoints.push_back(s + 1 + seen_ones);
    }
    return interval_to_thrackle(IntervalRep(s, t, std::move(breakpoints)));
}

namespace {

// Bron-Kerbosch with pivoting over edge-index bitmasks.
void bron_kerbosch(std::uint32_t r, std::uint32_t p, std::uint32_t x,
                   const std::vector<std::uint32_t>& adj, std::vector<std::uint32_t>& cliques) {
    if (p == 0 && x == 0) {
        cliques.push_back(r);
        return;
    }
    std::uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint32_t m = px; m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        int cnt = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    std::uint32_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (std::uint32_t m = candidates; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint32_t vbit = std::uint32_t{1} << v;
        bron_kerbosch(r | vbit, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], adj, cliques);
        p &= ~vbit;
        x |= vbit;
    }
}

}  // namespace

std::vector<std::vector<Edge>> maximal_thrackles(const EmbeddedBipartite& g,
                                                 const std::vector<Edge>& subgraph) {
    require_edges_of(g, subgraph, "maximal_thrackles");
    std::vector<Edge> edges = subgraph;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() > 24)
        throw std::invalid_argument("maximal_thrackles: subgraph limited to 24 edges");
    if (edges.empty()) return {};
    const auto m = edges.size();
    std::vector<std::uint32_t> adj(m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && meets(edges[a], edges[b])) adj[a] |= std::uint32_t{1} << b;
    std::vector<std::uint32_t> cliques;
    std::uint32_t all = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
    bron_kerbosch(0, all, 0, adj, cliques);
    std::vector<std::vector<Edge>> result;
    result.reserve(cliques.size());
    for (std::uint32_t c : cliques) {
        std::vector<Edge> th;
        for (std::uint32_t mask = c; mask != 0; mask &= mask - 1)
            th.push_back(edges[static_cast<std::size_t>(std::countr_zero(mask))]);
        result.push_back(std::move(th));
    }
    std::sort(result.begin(), result.end());
    return result;
}

nlohmann::json to_json(const SpanningThrackle& h) {
    nlohmann::json j;
    j["s"] = h.graph().s();
    j["t"] = h.graph().t();
    auto edges = nlohmann::json::array();
    for (const Edge& e : h.edges()) edges.push_back({e.left, e.right});
    j["edges"] = std::move(edges);
    j["breakpoints"] = h.breakpoints();
    return j;
}

}  // namespace thrackle
