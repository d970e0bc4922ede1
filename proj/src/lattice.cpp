#include "thrackle/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "thrackle/exact_linalg.hpp"

namespace thrackle {

namespace {

void require_rn(int r, int n, const char* who) {
    if (r < 1 || r >= n)
        throw std::invalid_argument(std::string(who) + ": need 1 <= r < n");
}

}  // namespace

std::vector<LatticePoint> b_points(int r, int n) {
    require_rn(r, n, "b_points");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(n - r));
    for (int i = 1; i <= r; ++i)
        for (int j = r + 1; j <= n; ++j) {
            LatticePoint p(static_cast<std::size_t>(n), 0);
            p[static_cast<std::size_t>(i) - 1] = 1;
            p[static_cast<std::size_t>(j) - 1] = 1;
            pts.push_back(std::move(p));
        }
    return pts;
}

std::vector<LatticePoint> e_points(int r, int n) {
    require_rn(r, n, "e_points");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(n - r));
    for (int i = 1; i <= r; ++i)
        for (int j = r + 1; j <= n; ++j) {
            LatticePoint p(static_cast<std::size_t>(n), 0);
            p[static_cast<std::size_t>(i) - 1] = -1;
            p[static_cast<std::size_t>(j) - 1] = 1;
            pts.push_back(std::move(p));
        }
    return pts;
}

LatticePoint b_point_for_edge(const Edge& e, int r, int n) {
    require_rn(r, n, "b_point_for_edge");
    if (e.left < 1 || e.left > r || e.right <= r || e.right > n)
        throw std::invalid_argument("b_point_for_edge: edge not in K_{r,n-r}");
    LatticePoint p(static_cast<std::size_t>(n), 0);
    p[static_cast<std::size_t>(e.left) - 1] = 1;
    p[static_cast<std::size_t>(e.right) - 1] = 1;
    return p;
}

LatticePoint involution_map(const LatticePoint& p, int r) {
    if (r < 0 || static_cast<std::size_t>(r) > p.size())
        throw std::invalid_argument("involution_map: r out of range");
    LatticePoint q = p;
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) q[i] = -q[i];
    return q;
}

int affine_dim(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::invalid_argument("affine_dim: empty point list");
    const std::size_t n = points[0].size();
    IntMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != n) throw std::invalid_argument("affine_dim: mixed dimensions");
        std::vector<BigInt> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    if (diffs.empty()) return 0;
    return rank_bareiss(std::move(diffs));
}

std::vector<std::int64_t> chart_project(const LatticePoint& p, int r, int n) {
    require_rn(r, n, "chart_project");
    if (p.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("chart_project: wrong point dimension");
    std::int64_t left_sum = 0, right_sum = 0;
    for (int i = 0; i < r; ++i) left_sum += p[static_cast<std::size_t>(i)];
    for (int j = r; j < n; ++j) right_sum += p[static_cast<std::size_t>(j)];
    if (left_sum != 1 || right_sum != 1)
        throw std::invalid_argument("chart_project: point violates the unit sum constraints");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n) - 2);
    for (int i = 1; i < n; ++i)
        if (i != r) out.push_back(p[static_cast<std::size_t>(i)]);
    return out;
}

BigInt normalized_simplex_volume(const Simplex& sx, int r, int n) {
    require_rn(r, n, "normalized_simplex_volume");
    if (sx.vertices.size() != static_cast<std::size_t>(n) - 1)
        throw std::invalid_argument("normalized_simplex_volume: expected n-1 vertices");
    std::vector<std::vector<std::int64_t>> charts;
    charts.reserve(sx.vertices.size());
    for (const LatticePoint& v : sx.vertices) charts.push_back(chart_project(v, r, n));
    const std::size_t d = static_cast<std::size_t>(n) - 2;
    IntMatrix m(d, std::vector<BigInt>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = charts[i + 1][j] - charts[0][j];
    BigInt det = det_bareiss(std::move(m));
    return det < 0 ? -det : det;
}

std::vector<LatticePoint> enumerate_lattice_points(int r, int n, int k) {
    require_rn(r, n, "enumerate_lattice_points");
    if (k < 0) throw std::invalid_argument("enumerate_lattice_points: k must be >= 0");
    // weak compositions of k into r parts, crossed with weak compositions of
    // k into n-r parts
    auto compositions = [](int total, int parts) {
        std::vector<std::vector<std::int64_t>> out;
        std::vector<std::int64_t> cur(static_cast<std::size_t>(parts), 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == parts - 1) {
                cur[static_cast<std::size_t>(pos)] = remaining;
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        rec(rec, 0, total);
        return out;
    };
    const auto lefts = compositions(k, r);
    const auto rights = compositions(k, n - r);
    std::vector<LatticePoint> pts;
    pts.reserve(lefts.size() * rights.size());
    for (const auto& a : lefts)
        for (const auto& b : rights) {
            LatticePoint p;
            p.reserve(static_cast<std::size_t>(n));
            p.insert(p.end(), a.begin(), a.end());
            p.insert(p.end(), b.begin(), b.end());
            pts.push_back(std::move(p));
        }
    return pts;
}

BigInt count_lattice_points(int r, int n, int k) {
    return BigInt(enumerate_lattice_points(r, n, k).size());
}

EhrhartPoly::EhrhartPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) coefficients_.push_back(Rational(0));
}

int EhrhartPoly::degree() const {
    for (std::size_t i = coefficients_.size(); i-- > 0;)
        if (coefficients_[i] != 0) return static_cast<int>(i);
    return 0;
}

Rational EhrhartPoly::leading_coefficient() const {
    return coefficients_[static_cast<std::size_t>(degree())];
}

Rational EhrhartPoly::eval(long long k) const {
    Rational acc = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * k + coefficients_[i];
    return acc;
}

EhrhartPoly ehrhart_fit(int r, int n) {
    require_rn(r, n, "ehrhart_fit");
    if (n > 10) throw std::invalid_argument("ehrhart_fit: limited to n <= 10");
    const int degree = n - 2;
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) values.push_back(count_lattice_points(r, n, k));

    // Lagrange interpolation through (k, values[k]) for k = 0..degree.
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (int i = 0; i <= degree; ++i) {
        // basis polynomial prod_{j != i} (x - j) as integer coefficients
        std::vector<BigInt> basis{1};
        BigInt denom = 1;
        for (int j = 0; j <= degree; ++j) {
            if (j == i) continue;
            std::vector<BigInt> next(basis.size() + 1, BigInt(0));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                next[c + 1] += basis[c];
                next[c] -= basis[c] * j;
            }
            basis = std::move(next);
            denom *= i - j;
        }
        const BigInt sign = denom < 0 ? -1 : 1;  // cpp_rational wants den > 0
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const BigInt numer = sign * values[static_cast<std::size_t>(i)] * basis[c];
            coeffs[c] += Rational(numer, sign * denom);
        }
    }
    return EhrhartPoly(std::move(coeffs));
}

BigInt ehrhart_normalized_volume(const EhrhartPoly& poly, int dim) {
    if (dim < 0) throw std::invalid_argument("ehrhart_normalized_volume: negative dimension");
    const auto& c = poly.coefficients();
    Rational lead = static_cast<std::size_t>(dim) < c.size() ? c[static_cast<std::size_t>(dim)]
                                                             : Rational(0);
    Rational v = lead * Rational(factorial(dim));
    if (boost::multiprecision::denominator(v) != 1)
        throw std::domain_error("ehrhart_normalized_volume: volume is not an integer");
    return boost::multiprecision::numerator(v);
}

}  // namespace thrackle
