#include "thrackle/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "thrackle/thrackle.hpp"

namespace thrackle {

MatroidBases::MatroidBases(int n, int r, std::vector<std::vector<int>> bases,
                           bool validate_exchange)
    : n_(n), r_(r), bases_(std::move(bases)) {
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("MatroidBases: need 1 <= r <= n");
    if (bases_.empty()) throw std::invalid_argument("MatroidBases: basis list is empty");
    for (auto& b : bases_) {
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("MatroidBases: basis has repeated elements");
        if (static_cast<int>(b.size()) != r)
            throw std::invalid_argument("MatroidBases: basis cardinality differs from rank");
        if (b.front() < 1 || b.back() > n)
            throw std::invalid_argument("MatroidBases: basis element outside 1..n");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (validate_exchange && !validate_bases(*this))
        throw std::invalid_argument("MatroidBases: basis-exchange property fails");
}

bool MatroidBases::contains(std::vector<int> basis) const {
    std::sort(basis.begin(), basis.end());
    return std::binary_search(bases_.begin(), bases_.end(), basis);
}

MatroidBases uniform_bases(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("uniform_bases: need 1 <= r <= n");
    std::vector<std::vector<int>> bases;
    std::vector<int> cur(static_cast<std::size_t>(r));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        bases.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + 1 + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int a = i + 1; a < r; ++a)
            cur[static_cast<std::size_t>(a)] = cur[static_cast<std::size_t>(a) - 1] + 1;
    }
    return MatroidBases(n, r, std::move(bases), false);
}

bool validate_bases(const MatroidBases& m) {
    for (const auto& b1 : m.bases())
        for (const auto& b2 : m.bases()) {
            for (int i : b1) {
                if (std::binary_search(b2.begin(), b2.end(), i)) continue;
                bool exchanged = false;
                for (int j : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), j)) continue;
                    std::vector<int> candidate;
                    candidate.reserve(b1.size());
                    for (int x : b1)
                        if (x != i) candidate.push_back(x);
                    candidate.push_back(j);
                    if (m.contains(std::move(candidate))) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return false;
            }
        }
    return true;
}

namespace {

std::vector<int> sorted_basis(std::vector<int> B) {
    std::sort(B.begin(), B.end());
    return B;
}

void require_basis(const std::vector<int>& B, const MatroidBases& m, const char* who) {
    if (!m.contains(B)) throw std::invalid_argument(std::string(who) + ": B is not a basis");
}

}  // namespace

std::vector<std::vector<int>> adjacent_bases(const std::vector<int>& B, const MatroidBases& m) {
    const std::vector<int> base = sorted_basis(B);
    require_basis(base, m, "adjacent_bases");
    std::vector<std::vector<int>> adjacent;
    for (const auto& other : m.bases()) {
        std::vector<int> diff;
        std::set_symmetric_difference(base.begin(), base.end(), other.begin(), other.end(),
                                      std::back_inserter(diff));
        if (diff.size() == 2) adjacent.push_back(other);
    }
    return adjacent;
}

TangentSubgraph tangent_subgraph(const std::vector<int>& B, const MatroidBases& m) {
    TangentSubgraph sub;
    sub.base = sorted_basis(B);
    require_basis(sub.base, m, "tangent_subgraph");
    sub.left_labels = sub.base;
    for (int x = 1; x <= m.n(); ++x)
        if (!std::binary_search(sub.base.begin(), sub.base.end(), x))
            sub.right_labels.push_back(x);
    const int r = m.r();
    for (std::size_t a = 0; a < sub.left_labels.size(); ++a)
        for (std::size_t b = 0; b < sub.right_labels.size(); ++b) {
            std::vector<int> candidate;
            candidate.reserve(sub.base.size());
            for (int x : sub.base)
                if (x != sub.left_labels[a]) candidate.push_back(x);
            candidate.push_back(sub.right_labels[b]);
            if (m.contains(std::move(candidate)))
                sub.edges.push_back(Edge{static_cast<int>(a) + 1, r + 1 + static_cast<int>(b)});
        }
    std::sort(sub.edges.begin(), sub.edges.end());
    return sub;
}

ThrackleCountReport tangent_cone_simplex_count(const std::vector<int>& B,
                                               const MatroidBases& m) {
    ThrackleCountReport report;
    report.subgraph = tangent_subgraph(B, m);
    if (report.subgraph.edges.size() > 24)
        throw std::invalid_argument("tangent_cone_simplex_count: subgraph limited to 24 edges");
    if (m.r() == m.n()) {
        report.count = 0;  // single-vertex polytope, no tangent cone rays
        return report;
    }
    EmbeddedBipartite g(m.r(), m.n() - m.r());
    report.thrackles = maximal_thrackles(g, report.subgraph.edges);
    report.count = BigInt(report.thrackles.size());
    for (const auto& th : report.thrackles)
        report.max_cardinality = std::max(report.max_cardinality, static_cast<int>(th.size()));
    report.equal_cardinality =
        std::all_of(report.thrackles.begin(), report.thrackles.end(), [&](const auto& th) {
            return static_cast<int>(th.size()) == report.max_cardinality;
        });
    return report;
}

std::vector<int> incidence_vector(const std::vector<int>& B, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int x : B) {
        if (x < 1 || x > n) throw std::invalid_argument("incidence_vector: element outside 1..n");
        v[static_cast<std::size_t>(x) - 1] = 1;
    }
    return v;
}

MatroidBases matroid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("bases"))
        throw std::invalid_argument("matroid input: expected {\"n\", \"r\", \"bases\"}");
    int n = j.at("n").get<int>();
    int r = j.at("r").get<int>();
    auto bases = j.at("bases").get<std::vector<std::vector<int>>>();
    return MatroidBases(n, r, std::move(bases));
}

nlohmann::json to_json(const MatroidBases& m) {
    return nlohmann::json{{"n", m.n()}, {"r", m.r()}, {"bases", m.bases()}};
}

nlohmann::json report_to_json(const ThrackleCountReport& report) {
    nlohmann::json j;
    j["basis"] = report.subgraph.base;
    j["left_labels"] = report.subgraph.left_labels;
    j["right_labels"] = report.subgraph.right_labels;
    auto edges = nlohmann::json::array();
    for (const Edge& e : report.subgraph.edges) edges.push_back({e.left, e.right});
    j["edges"] = std::move(edges);
    j["maximal_thrackle_count"] = report.count.convert_to<long long>();
    j["equal_cardinality"] = report.equal_cardinality;
    j["max_cardinality"] = report.max_cardinality;
    auto ths = nlohmann::json::array();
    for (const auto& th : report.thrackles) {
        auto arr = nlohmann::json::array();
        for (const Edge& e : th) arr.push_back({e.left, e.right});
        ths.push_back(std::move(arr));
    }
    j["maximal_thrackles"] = std::move(ths);
    return j;
}

}  // namespace thrackle
