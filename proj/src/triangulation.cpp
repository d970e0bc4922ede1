#include "thrackle/triangulation.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "thrackle/exact_linalg.hpp"

namespace thrackle {

Triangulation build_triangulation(int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("build_triangulation: need 1 <= r < n");
    if (n > 12) throw std::invalid_argument("build_triangulation: limited to n <= 12");
    Triangulation t;
    t.r = r;
    t.n = n;
    t.thrackles = enumerate_spanning_thrackles(r, n - r);
    t.simplices.reserve(t.thrackles.size());
    for (const SpanningThrackle& h : t.thrackles) {
        Simplex sx;
        sx.vertices.reserve(h.edges().size());
        for (const Edge& e : h.edges()) sx.vertices.push_back(b_point_for_edge(e, r, n));
        t.simplices.push_back(std::move(sx));
    }
    return t;
}

bool verify_unimodular(const Triangulation& t) {
    for (const Simplex& sx : t.simplices)
        if (normalized_simplex_volume(sx, t.r, t.n) != 1) return false;
    return true;
}

bool verify_volume(const Triangulation& t) {
    if (t.n > 8) throw std::invalid_argument("verify_volume: Ehrhart oracle limited to n <= 8");
    BigInt total = 0;
    for (const Simplex& sx : t.simplices) total += normalized_simplex_volume(sx, t.r, t.n);
    BigInt oracle = ehrhart_normalized_volume(ehrhart_fit(t.r, t.n), t.n - 2);
    return total == oracle;
}

namespace {

std::vector<Rational> chart_project_rational(const std::vector<Rational>& q, int r, int n) {
    if (q.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("locate_point: wrong point dimension");
    Rational left_sum = 0, right_sum = 0;
    for (int i = 0; i < r; ++i) left_sum += q[static_cast<std::size_t>(i)];
    for (int j = r; j < n; ++j) right_sum += q[static_cast<std::size_t>(j)];
    if (left_sum != 1 || right_sum != 1)
        throw std::invalid_argument("locate_point: point outside the affine span");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) - 2);
    for (int i = 1; i < n; ++i)
        if (i != r) out.push_back(q[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace

std::vector<Rational> barycentric_coordinates(const std::vector<Rational>& q,
                                              const Simplex& sx, int r, int n) {
    const std::vector<Rational> qc = chart_project_rational(q, r, n);
    const std::size_t d = static_cast<std::size_t>(n) - 2;
    if (sx.vertices.size() != d + 1)
        throw std::invalid_argument("barycentric_coordinates: expected n-1 vertices");
    std::vector<std::vector<std::int64_t>> charts;
    charts.reserve(sx.vertices.size());
    for (const LatticePoint& v : sx.vertices) charts.push_back(chart_project(v, r, n));
    // columns are vertex differences against vertex 0
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    std::vector<Rational> rhs(d);
    for (std::size_t row = 0; row < d; ++row) {
        for (std::size_t col = 0; col < d; ++col)
            a[row][col] = Rational(charts[col + 1][row] - charts[0][row]);
        rhs[row] = qc[row] - Rational(charts[0][row]);
    }
    auto solved = solve_rational(std::move(a), std::move(rhs));
    if (!solved) throw std::domain_error("barycentric_coordinates: degenerate simplex");
    std::vector<Rational> lambda(d + 1);
    Rational rest = 0;
    for (std::size_t i = 0; i < d; ++i) {
        lambda[i + 1] = (*solved)[i];
        rest += (*solved)[i];
    }
    lambda[0] = Rational(1) - rest;
    return lambda;
}

std::vector<std::size_t> locate_point(const std::vector<Rational>& q, const Triangulation& t) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        auto lambda = barycentric_coordinates(q, t.simplices[i], t.r, t.n);
        bool inside = std::all_of(lambda.begin(), lambda.end(),
                                  [](const Rational& x) { return x >= 0; });
        if (inside) hits.push_back(i);
    }
    return hits;
}

CoveringSampleReport sample_covering(const Triangulation& t, int samples, std::uint64_t seed) {
    const std::vector<LatticePoint> verts = b_points(t.r, t.n);
    std::mt19937_64 rng(seed);
    CoveringSampleReport report;
    for (int s = 0; s < samples; ++s) {
        // strictly positive weights keep the point in the relative interior
        std::vector<std::uint64_t> w(verts.size());
        std::uint64_t total = 0;
        for (auto& wi : w) {
            wi = rng() % 1000 + 1;
            total += wi;
        }
        std::vector<Rational> q(static_cast<std::size_t>(t.n), Rational(0));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t c = 0; c < q.size(); ++c)
                if (verts[i][c] != 0) q[c] += Rational(w[i], total);
        bool on_face = false;
        int containing = 0;
        for (const Simplex& sx : t.simplices) {
            auto lambda = barycentric_coordinates(q, sx, t.r, t.n);
            bool nonneg = true, zero = false;
            for (const Rational& x : lambda) {
                if (x < 0) nonneg = false;
                if (x == 0) zero = true;
            }
            if (nonneg) {
                ++containing;
                if (zero) on_face = true;
            }
        }
        if (on_face) {
            ++report.skipped;
            continue;
        }
        ++report.tested;
        if (containing != 1) ++report.failures;
    }
    return report;
}

std::vector<ConeDescription> tangent_cone_view(const Triangulation& t) {
    LatticePoint apex(static_cast<std::size_t>(t.n), 0);
    for (int i = 0; i < t.r; ++i) apex[static_cast<std::size_t>(i)] = 1;
    std::vector<ConeDescription> cones;
    cones.reserve(t.simplices.size());
    for (const Simplex& sx : t.simplices) {
        ConeDescription cone;
        cone.apex = apex;
        cone.generators.reserve(sx.vertices.size());
        for (const LatticePoint& v : sx.vertices)
            cone.generators.push_back(involution_map(v, t.r));
        cones.push_back(std::move(cone));
    }
    return cones;
}

nlohmann::json to_json(const Triangulation& t) {
    nlohmann::json j;
    j["r"] = t.r;
    j["n"] = t.n;
    j["count"] = t.simplices.size();
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        nlohmann::json cell;
        auto edges = nlohmann::json::array();
        for (const Edge& e : t.thrackles[i].edges()) edges.push_back({e.left, e.right});
        cell["thrackle"] = std::move(edges);
        auto verts = nlohmann::json::array();
        for (const LatticePoint& v : t.simplices[i].vertices) verts.push_back(v);
        cell["vertices"] = std::move(verts);
        cell["volume"] = normalized_simplex_volume(t.simplices[i], t.r, t.n).convert_to<long long>();
        arr.push_back(std::move(cell));
    }
    j["simplices"] = std::move(arr);
    return j;
}

std::string to_csv(const Triangulation& t) {
    std::ostringstream os;
    os << "index,thrackle,volume\n";
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        os << i << ',';
        const auto& edges = t.thrackles[i].edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (e) os << ';';
            os << edges[e].left << '-' << edges[e].right;
        }
        os << ',' << normalized_simplex_volume(t.simplices[i], t.r, t.n) << '\n';
    }
    return os.str();
}

}  // namespace thrackle
