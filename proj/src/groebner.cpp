#include "thrackle/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace thrackle {

Monomial Monomial::variable(const Edge& e) {
    Monomial m;
    m.exponents_[e] = 1;
    return m;
}

Monomial Monomial::product(const std::vector<Edge>& edges) {
    Monomial m;
    for (const Edge& e : edges) ++m.exponents_[e];
    return m;
}

int Monomial::exponent(const Edge& e) const {
    auto it = exponents_.find(e);
    return it == exponents_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [e, a] : exponents_) d += a;
    return d;
}

std::vector<Edge> Monomial::support() const {
    std::vector<Edge> edges;
    edges.reserve(exponents_.size());
    for (const auto& [e, a] : exponents_) edges.push_back(e);
    return edges;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m = *this;
    for (const auto& [e, a] : other.exponents_) m.exponents_[e] += a;
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    for (const auto& [e, a] : exponents_)
        if (m.exponent(e) < a) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
    Monomial m = *this;
    for (const auto& [e, a] : d.exponents_) {
        auto it = m.exponents_.find(e);
        if (it == m.exponents_.end() || it->second < a)
            throw std::invalid_argument("Monomial::divide_by: not divisible");
        it->second -= a;
        if (it->second == 0) m.exponents_.erase(it);
    }
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (const auto& [e, x] : b.exponents_) {
        int& cur = m.exponents_[e];
        cur = std::max(cur, x);
    }
    return m;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : exponents_) {
        for (int i = 0; i < a; ++i) {
            if (!first) os << '*';
            os << "x[" << e.left << ',' << e.right << ']';
            first = false;
        }
    }
    return os.str();
}

std::string Binomial::str() const { return plus.str() + " - " + minus.str(); }

std::strong_ordering var_compare(const Edge& e1, const Edge& e2) {
    if (e1.left != e2.left)
        return e1.left < e2.left ? std::strong_ordering::greater : std::strong_ordering::less;
    if (e1.right != e2.right)
        return e1.right > e2.right ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

namespace {

// Edges in decreasing variable precedence: small left first, then large
// right first.
bool precedes(const Edge& a, const Edge& b) {
    return var_compare(a, b) == std::strong_ordering::greater;
}

std::strong_ordering lex_compare(const Monomial& m1, const Monomial& m2) {
    std::vector<Edge> support;
    for (const auto& [e, a] : m1.exponents()) support.push_back(e);
    for (const auto& [e, a] : m2.exponents()) support.push_back(e);
    std::sort(support.begin(), support.end(), precedes);
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const Edge& e : support) {
        int a = m1.exponent(e), b = m2.exponent(e);
        if (a != b) return a > b ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

long long total_weight(const Monomial& m, const EmbeddedBipartite& g) {
    long long w = 0;
    for (const auto& [e, a] : m.exponents())
        w += static_cast<long long>(a) * weight(e, g);
    return w;
}

}  // namespace

std::strong_ordering mono_compare(const Monomial& m1, const Monomial& m2, const TermOrder& o) {
    if (o.kind == TermOrder::Kind::weight_lex) {
        if (!o.graph.has_value())
            throw std::invalid_argument("mono_compare: weight order needs a graph");
        long long w1 = total_weight(m1, *o.graph), w2 = total_weight(m2, *o.graph);
        if (w1 != w2)
            return w1 > w2 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return lex_compare(m1, m2);
}

std::vector<Binomial> generate_cg(int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("generate_cg: need 1 <= r < n");
    std::vector<Binomial> cg;
    if (r < 2 || n - r < 2) return cg;
    [[maybe_unused]] const TermOrder order = TermOrder::lex();
    for (int i = 1; i <= r; ++i)
        for (int k = i + 1; k <= r; ++k)
            for (int j1 = r + 1; j1 <= n; ++j1)
                for (int j2 = j1 + 1; j2 <= n; ++j2) {
                    // the non-crossing matching on {i,k} x {j1,j2} pairs the
                    // smaller left vertex with the larger right vertex
                    Binomial b;
                    b.plus = Monomial::product({Edge{i, j2}, Edge{k, j1}});
                    b.minus = Monomial::product({Edge{i, j1}, Edge{k, j2}});
                    assert(!crosses(Edge{i, j2}, Edge{k, j1}));
                    assert(crosses(Edge{i, j1}, Edge{k, j2}));
                    assert(mono_compare(b.plus, b.minus, order) == std::strong_ordering::greater);
                    cg.push_back(std::move(b));
                }
    return cg;
}

Monomial reduce(Monomial m, const std::vector<Binomial>& basis,
                [[maybe_unused]] const TermOrder& o) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Binomial& b : basis) {
            if (b.plus.divides(m)) {
                Monomial next = m.divide_by(b.plus) * b.minus;
                assert(mono_compare(next, m, o) == std::strong_ordering::less);
                m = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return m;
}

bool s_poly_reduces_to_zero(const Binomial& b1, const Binomial& b2,
                            const std::vector<Binomial>& basis, const TermOrder& o) {
    const Monomial l = Monomial::lcm(b1.plus, b2.plus);
    if (l == b1.plus * b2.plus) return true;  // coprime initial terms
    Monomial m1 = l.divide_by(b1.plus) * b1.minus;
    Monomial m2 = l.divide_by(b2.plus) * b2.minus;
    return reduce(std::move(m1), basis, o) == reduce(std::move(m2), basis, o);
}

bool is_reduced_basis(const std::vector<Binomial>& basis) {
    for (const Binomial& b : basis)
        for (const Binomial& g : basis) {
            if (&g != &b && g.plus.divides(b.plus)) return false;
            if (g.plus.divides(b.minus)) return false;
        }
    return true;
}

bool check_groebner(const std::vector<Binomial>& basis, const TermOrder& o) {
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!s_poly_reduces_to_zero(basis[a], basis[b], basis, o)) return false;
    return is_reduced_basis(basis);
}

bool buchberger_check(int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("buchberger_check: need 1 <= r < n");
    if (r * (n - r) > 20)
        throw std::invalid_argument("buchberger_check: limited to r*(n-r) <= 20");
    return check_groebner(generate_cg(r, n), TermOrder::lex());
}

bool is_standard(const Monomial& m, const std::vector<Binomial>& cg) {
    for (const Binomial& b : cg)
        if (b.plus.divides(m)) return false;
    return true;
}

bool is_standard(const Monomial& m, int r, int n) { return is_standard(m, generate_cg(r, n)); }

Binomial walk_binomial(const std::vector<int>& walk, int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("walk_binomial: need 1 <= r < n");
    if (walk.size() < 3 || walk.front() != walk.back())
        throw std::invalid_argument("walk_binomial: walk must be closed");
    const std::size_t len = walk.size() - 1;  // number of edges
    if (len % 2 != 0) throw std::invalid_argument("walk_binomial: walk must have even length");
    for (std::size_t i = 0; i < len; ++i) {
        int v = walk[i];
        bool left = (i % 2 == 0);
        if (left && (v < 1 || v > r))
            throw std::invalid_argument("walk_binomial: odd positions must be left vertices");
        if (!left && (v <= r || v > n))
            throw std::invalid_argument("walk_binomial: even positions must be right vertices");
    }
    Binomial b;
    for (std::size_t i = 0; i < len; i += 2)
        b.plus = b.plus * Monomial::variable(Edge{walk[i], walk[i + 1]});
    for (std::size_t i = 1; i < len; i += 2)
        b.minus = b.minus * Monomial::variable(Edge{walk[i + 1], walk[i]});
    return b;
}

bool in_kernel(const Binomial& b, int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("in_kernel: need 1 <= r < n");
    auto degrees = [n, r](const Monomial& m) {
        std::vector<long long> deg(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [e, a] : m.exponents()) {
            if (e.left < 1 || e.left > r || e.right <= r || e.right > n)
                throw std::invalid_argument("in_kernel: edge outside K_{r,n-r}");
            deg[static_cast<std::size_t>(e.left)] += a;
            deg[static_cast<std::size_t>(e.right)] += a;
        }
        return deg;
    };
    return degrees(b.plus) == degrees(b.minus);
}

nlohmann::json cg_to_json(const std::vector<Binomial>& cg) {
    auto edges_of = [](const Monomial& m) {
        auto arr = nlohmann::json::array();
        for (const auto& [e, a] : m.exponents())
            for (int i = 0; i < a; ++i) arr.push_back({e.left, e.right});
        return arr;
    };
    auto out = nlohmann::json::array();
    for (const Binomial& b : cg)
        out.push_back({{"initial", edges_of(b.plus)}, {"trailing", edges_of(b.minus)}});
    return out;
}

}  // namespace thrackle
