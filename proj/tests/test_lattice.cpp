#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "thrackle/exact_linalg.hpp"
#include "thrackle/lattice.hpp"
#include "thrackle/thrackle.hpp"

using namespace thrackle;

TEST_CASE("b_points") {
    auto pts = b_points(2, 5);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0] == LatticePoint{1, 0, 1, 0, 0});  // e_1 + e_3
    CHECK(b_points(1, 2) == std::vector<LatticePoint>{{1, 1}});
    CHECK_THROWS_AS(b_points(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(b_points(0, 5), std::invalid_argument);
}

TEST_CASE("b_points are the incidence matrix columns of K_{r,n-r}") {
    for (auto [r, n] : {std::pair{2, 5}, {3, 6}, {1, 4}}) {
        EmbeddedBipartite g(r, n - r);
        auto pts = b_points(r, n);
        auto edges = all_edges(g);
        REQUIRE(pts.size() == edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            CHECK(pts[i] == b_point_for_edge(edges[i], r, n));
            int ones = 0;
            for (auto c : pts[i]) ones += c == 1;
            CHECK(ones == 2);
            CHECK(pts[i][static_cast<std::size_t>(edges[i].left) - 1] == 1);
            CHECK(pts[i][static_cast<std::size_t>(edges[i].right) - 1] == 1);
        }
    }
}

TEST_CASE("e_points and the involution") {
    auto e = e_points(2, 5);
    CHECK(e[0] == LatticePoint{-1, 0, 1, 0, 0});  // e_3 - e_1
    CHECK(e_points(1, 2) == std::vector<LatticePoint>{{-1, 1}});

    CHECK(involution_map(LatticePoint{-1, 0, 1, 0, 0}, 2) == LatticePoint{1, 0, 1, 0, 0});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        LatticePoint p(6);
        for (auto& c : p) c = static_cast<std::int64_t>(rng() % 21) - 10;
        CHECK(involution_map(involution_map(p, 3), 3) == p);
    }

    // the involution carries the e-points onto the b-points setwise
    auto b = b_points(2, 5);
    std::set<LatticePoint> b_set(b.begin(), b.end());
    std::set<LatticePoint> image;
    for (const auto& p : e) image.insert(involution_map(p, 2));
    CHECK(image == b_set);
}

TEST_CASE("involution matrix is unimodular") {
    for (int n : {4, 5, 6}) {
        int r = n / 2;
        IntMatrix m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i < r ? -1 : 1;
        BigInt det = det_bareiss(m);
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("affine_dim") {
    CHECK(affine_dim(b_points(2, 5)) == 3);
    CHECK(affine_dim(b_points(1, 2)) == 0);
    CHECK(affine_dim(b_points(3, 6)) == 4);
    for (int n = 3; n <= 8; ++n)
        for (int r = 1; r < n; ++r) CHECK(affine_dim(b_points(r, n)) == n - 2);
    CHECK_THROWS_AS(affine_dim({}), std::invalid_argument);
}

TEST_CASE("chart_project") {
    CHECK(chart_project(LatticePoint{1, 0, 1, 0, 0}, 2, 5) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(chart_project(LatticePoint{0, 1, 0, 1, 0}, 2, 5) == std::vector<std::int64_t>{1, 1, 0});
    CHECK_THROWS_AS(chart_project(LatticePoint{1, 1, 0, 0, 0}, 2, 5), std::invalid_argument);

    // dropped coordinates are recoverable from the sum constraints
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 3, n = 7;
        LatticePoint p(n, 0);
        // random point in the affine span: unit sums on both blocks
        for (int i = 0; i < r - 1; ++i)
            p[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % 9) - 4;
        for (int j = r; j < n - 1; ++j)
            p[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rng() % 9) - 4;
        std::int64_t left = 0, right = 0;
        for (int i = 0; i < r - 1; ++i) left += p[static_cast<std::size_t>(i)];
        for (int j = r; j < n - 1; ++j) right += p[static_cast<std::size_t>(j)];
        p[r - 1] = 1 - left;
        p[n - 1] = 1 - right;
        // rotate so the dropped coordinates (1 and r+1) are the dependent ones
        std::swap(p[0], p[r - 1]);
        std::swap(p[static_cast<std::size_t>(r)], p[n - 1]);
        auto q = chart_project(p, r, n);
        REQUIRE(q.size() == n - 2);
        std::int64_t rec_left = 0, rec_right = 0;
        for (int i = 0; i < r - 1; ++i) rec_left += q[static_cast<std::size_t>(i)];
        for (int j = r - 1; j < n - 2; ++j) rec_right += q[static_cast<std::size_t>(j)];
        CHECK(1 - rec_left == p[0]);
        CHECK(1 - rec_right == p[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("normalized_simplex_volume") {
    // the thrackle {(1,3),(1,4),(2,4),(2,5)} of K_{2,3} spans a unimodular cell
    Simplex sx;
    for (auto e : {Edge{1, 3}, Edge{1, 4}, Edge{2, 4}, Edge{2, 5}})
        sx.vertices.push_back(b_point_for_edge(e, 2, 5));
    CHECK(normalized_simplex_volume(sx, 2, 5) == 1);

    Simplex degenerate = sx;
    degenerate.vertices[1] = degenerate.vertices[0];
    CHECK(normalized_simplex_volume(degenerate, 2, 5) == 0);

    Simplex wrong;
    wrong.vertices = {b_point_for_edge(Edge{1, 3}, 2, 5)};
    CHECK_THROWS_AS(normalized_simplex_volume(wrong, 2, 5), std::invalid_argument);
}

TEST_CASE("every spanning thrackle cell is unimodular, several sizes") {
    for (auto [r, n] : {std::pair{2, 5}, {2, 6}, {3, 6}, {3, 7}}) {
        for (const auto& th : enumerate_spanning_thrackles(r, n - r)) {
            Simplex sx;
            for (const Edge& e : th.edges()) sx.vertices.push_back(b_point_for_edge(e, r, n));
            CHECK(normalized_simplex_volume(sx, r, n) == 1);
        }
    }
}

TEST_CASE("chart choice does not change volumes") {
    // alternative chart: drop coordinates r and n instead of 1 and r+1
    auto chart2 = [](const LatticePoint& p, int r, int n) {
        std::vector<std::int64_t> out;
        for (int i = 0; i < n; ++i)
            if (i != r - 1 && i != n - 1) out.push_back(p[static_cast<std::size_t>(i)]);
        return out;
    };
    for (auto [r, n] : {std::pair{2, 5}, {3, 6}}) {
        for (const auto& th : enumerate_spanning_thrackles(r, n - r)) {
            Simplex sx;
            for (const Edge& e : th.edges()) sx.vertices.push_back(b_point_for_edge(e, r, n));
            const std::size_t d = static_cast<std::size_t>(n) - 2;
            IntMatrix m(d, std::vector<BigInt>(d));
            auto base = chart2(sx.vertices[0], r, n);
            for (std::size_t i = 0; i < d; ++i) {
                auto row = chart2(sx.vertices[i + 1], r, n);
                for (std::size_t j = 0; j < d; ++j) m[i][j] = row[j] - base[j];
            }
            BigInt det = det_bareiss(std::move(m));
            if (det < 0) det = -det;
            CHECK(det == normalized_simplex_volume(sx, r, n));
        }
    }
}

TEST_CASE("lattice point counts") {
    CHECK(count_lattice_points(2, 5, 0) == 1);
    CHECK(count_lattice_points(2, 5, 1) == 6);
    CHECK(count_lattice_points(2, 5, 2) == 18);
    CHECK(count_lattice_points(2, 5, 3) == 40);
    CHECK_THROWS_AS(count_lattice_points(2, 5, -1), std::invalid_argument);
}

TEST_CASE("H-description validated at dilation 1") {
    for (int n = 3; n <= 7; ++n)
        for (int r = 1; r < n; ++r) {
            auto pts = enumerate_lattice_points(r, n, 1);
            CHECK(BigInt(pts.size()) == BigInt(r) * (n - r));
            std::set<LatticePoint> expected;
            for (const auto& p : b_points(r, n)) expected.insert(p);
            std::set<LatticePoint> got(pts.begin(), pts.end());
            CHECK(got == expected);
        }
}

TEST_CASE("ehrhart_fit on (2,5)") {
    EhrhartPoly poly = ehrhart_fit(2, 5);
    CHECK(poly.degree() == 3);
    CHECK(poly.eval(0) == 1);
    CHECK(poly.eval(1) == 6);
    CHECK(poly.eval(2) == 18);
    CHECK(poly.eval(3) == 40);
    CHECK(poly.leading_coefficient() == Rational(1, 2));
    CHECK(ehrhart_normalized_volume(poly, 3) == 3);
    // degree certification at dilations beyond the fit
    for (int k = 4; k <= 6; ++k)
        CHECK(Rational(BigInt(count_lattice_points(2, 5, k))) == poly.eval(k));
}

TEST_CASE("ehrhart volumes match the closed-form count") {
    CHECK(ehrhart_normalized_volume(ehrhart_fit(1, 3), 1) == 1);
    CHECK(ehrhart_normalized_volume(ehrhart_fit(3, 6), 4) == 6);
    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r < n; ++r) {
            EhrhartPoly poly = ehrhart_fit(r, n);
            CHECK(ehrhart_normalized_volume(poly, n - 2) == count_closed_form(r, n - r));
            for (int k = n - 1; k <= n + 1; ++k)
                CHECK(Rational(BigInt(count_lattice_points(r, n, k))) == poly.eval(k));
        }
    CHECK_THROWS_AS(ehrhart_fit(2, 11), std::invalid_argument);
}

TEST_CASE("ehrhart polynomials take integer values with i(0) = 1") {
    for (auto [r, n] : {std::pair{2, 5}, {2, 6}, {3, 7}}) {
        EhrhartPoly poly = ehrhart_fit(r, n);
        CHECK(poly.eval(0) == 1);
        for (int k = 0; k <= n + 2; ++k)
            CHECK(boost::multiprecision::denominator(poly.eval(k)) == 1);
    }
}

TEST_CASE("exact linear algebra basics") {
    IntMatrix m{{BigInt(0), BigInt(1), BigInt(0)},
                {BigInt(1), BigInt(1), BigInt(0)},
                {BigInt(1), BigInt(0), BigInt(1)}};
    CHECK(det_bareiss(m) == -1);
    CHECK(rank_bareiss(m) == 3);
    IntMatrix singular{{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
    CHECK(det_bareiss(singular) == 0);
    CHECK(rank_bareiss(singular) == 1);
    auto sol = solve_rational({{Rational(2), Rational(0)}, {Rational(0), Rational(4)}},
                              {Rational(1), Rational(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(1, 2));
    CHECK((*sol)[1] == Rational(1, 4));
    CHECK_FALSE(solve_rational({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                               {Rational(0), Rational(0)})
                    .has_value());
}
