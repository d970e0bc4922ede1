// Acceptance suite: runs every project-level criterion and prints one
// pass/fail line per criterion.  Exit code 0 iff all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "thrackle/bipartite.hpp"
#include "thrackle/groebner.hpp"
#include "thrackle/lattice.hpp"
#include "thrackle/matroid.hpp"
#include "thrackle/numeric.hpp"
#include "thrackle/thrackle.hpp"
#include "thrackle/triangulation.hpp"

using namespace thrackle;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = no limit
    std::function<bool(std::string&)> body;
};

bool check_eq(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

// 1. enumerated count == recurrence == closed form for all s+t <= 14
bool count_identity(std::string& why) {
    bool ok = true;
    for (int s = 1; s <= 13; ++s)
        for (int t = 1; s + t <= 14; ++t) {
            BigInt closed = count_closed_form(s, t);
            BigInt rec = count_recurrence(s, t);
            SpanningThrackleEnumerator en(s, t);
            BigInt enumerated = 0;
            while (en.next()) ++enumerated;
            ok &= check_eq(enumerated == rec && rec == closed, why,
                           "mismatch at s=" + std::to_string(s) + " t=" + std::to_string(t));
        }
    return ok;
}

// 2. brute-force filtered subsets set-equal the interval enumerator, s+t <= 9
bool oracle_equivalence(std::string& why) {
    bool ok = true;
    for (int s = 1; s <= 8; ++s)
        for (int t = 1; s + t <= 9; ++t) {
            auto brute = brute_force_spanning_thrackles(s, t);
            auto fast = enumerate_spanning_thrackles(s, t);
            std::sort(fast.begin(), fast.end());
            ok &= check_eq(brute == fast, why,
                           "sets differ at s=" + std::to_string(s) + " t=" + std::to_string(t));
        }
    return ok;
}

// 3. the six K_{2,3} weights
bool weight_example(std::string& why) {
    EmbeddedBipartite g(2, 3);
    const std::vector<std::pair<Edge, int>> table{
        {{1, 3}, 0}, {{1, 4}, 1}, {{1, 5}, 2}, {{2, 3}, 2}, {{2, 4}, 1}, {{2, 5}, 0}};
    bool ok = true;
    for (const auto& [e, expected] : table)
        ok &= check_eq(weight(e, g) == expected, why, "weight table mismatch");
    return ok;
}

// 4. C_g(2,5): three binomials on the documented variable pairs
bool cg_example(std::string& why) {
    auto cg = generate_cg(2, 5);
    if (!check_eq(cg.size() == 3, why, "expected 3 binomials")) return false;
    auto pair_set = [](const Binomial& b) {
        std::set<std::vector<Edge>> s;
        s.insert(b.plus.support());
        s.insert(b.minus.support());
        return s;
    };
    std::set<std::set<std::vector<Edge>>> got;
    for (const Binomial& b : cg) got.insert(pair_set(b));
    std::set<std::set<std::vector<Edge>>> expected{
        {{Edge{1, 3}, Edge{2, 5}}, {Edge{1, 5}, Edge{2, 3}}},
        {{Edge{1, 3}, Edge{2, 4}}, {Edge{1, 4}, Edge{2, 3}}},
        {{Edge{1, 4}, Edge{2, 5}}, {Edge{1, 5}, Edge{2, 4}}}};
    bool ok = check_eq(got == expected, why, "variable pairs differ from the worked example");
    // initial term is the non-crossing pair in every binomial
    for (const Binomial& b : cg) {
        auto sup = b.plus.support();
        ok &= check_eq(!crosses(sup[0], sup[1]), why, "initial term is not the non-crossing pair");
    }
    return ok;
}

// 5. Groebner certification for the listed sizes
bool groebner_certification(std::string& why) {
    bool ok = true;
    for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 8}})
        ok &= check_eq(buchberger_check(r, n), why,
                       "buchberger_check failed at r=" + std::to_string(r) +
                           " n=" + std::to_string(n));
    return ok;
}

// 6. standard monomial <=> thrackle support, squarefree degree <= 4
bool standard_thrackle_equivalence(std::string& why) {
    bool ok = true;
    for (int n = 2; n <= 13; ++n)
        for (int r = 1; r < n; ++r) {
            if (r * (n - r) > 12) continue;
            EmbeddedBipartite g(r, n - r);
            auto cg = generate_cg(r, n);
            auto edges = all_edges(g);
            const int m = static_cast<int>(edges.size());
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                if (std::popcount(mask) > 4) continue;
                std::vector<Edge> support;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) support.push_back(edges[static_cast<std::size_t>(i)]);
                if (is_standard(Monomial::product(support), cg) != is_thrackle(g, support)) {
                    ok = check_eq(false, why,
                                  "equivalence fails at r=" + std::to_string(r) +
                                      " n=" + std::to_string(n));
                }
            }
        }
    return ok;
}

// 7. unimodularity of every simplex, 2 <= r < n <= 10
bool unimodularity(std::string& why) {
    bool ok = true;
    for (int n = 3; n <= 10; ++n)
        for (int r = 2; r < n; ++r) {
            Triangulation t = build_triangulation(r, n);
            for (const Simplex& sx : t.simplices)
                if (normalized_simplex_volume(sx, r, n) != 1)
                    ok = check_eq(false, why,
                                  "non-unimodular simplex at r=" + std::to_string(r) +
                                      " n=" + std::to_string(n));
        }
    return ok;
}

// 8. volume additivity against the Ehrhart oracle, 2 <= r < n <= 8
bool volume_additivity(std::string& why) {
    bool ok = true;
    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r < n; ++r) {
            Triangulation t = build_triangulation(r, n);
            BigInt cells(t.simplices.size());
            BigInt expected = count_closed_form(r, n - r);
            BigInt oracle = ehrhart_normalized_volume(ehrhart_fit(r, n), n - 2);
            ok &= check_eq(oracle == expected && cells == expected, why,
                           "volume mismatch at r=" + std::to_string(r) +
                               " n=" + std::to_string(n));
        }
    return ok;
}

// 9. Ehrhart spot values for (2,5) and out-of-sample reproduction
bool ehrhart_spot_values(std::string& why) {
    bool ok = true;
    const std::vector<BigInt> expected{1, 6, 18, 40};
    for (int k = 0; k <= 3; ++k)
        ok &= check_eq(count_lattice_points(2, 5, k) == expected[static_cast<std::size_t>(k)],
                       why, "count differs at k=" + std::to_string(k));
    EhrhartPoly poly = ehrhart_fit(2, 5);
    for (int k = 4; k <= 5; ++k)
        ok &= check_eq(poly.eval(k) == Rational(BigInt(count_lattice_points(2, 5, k))), why,
                       "fitted cubic misses brute-force count at k=" + std::to_string(k));
    return ok;
}

// 10. phi is a bijection onto the balanced strings, s+t <= 10
bool bijection(std::string& why) {
    bool ok = true;
    for (int s = 1; s <= 9; ++s)
        for (int t = 1; s + t <= 10; ++t) {
            std::set<std::string> images;
            auto all = enumerate_spanning_thrackles(s, t);
            for (const auto& th : all) {
                std::string bits = phi(th);
                int zeros = static_cast<int>(std::count(bits.begin(), bits.end(), '0'));
                int ones = static_cast<int>(bits.size()) - zeros;
                ok &= check_eq(zeros == s - 1 && ones == t - 1, why, "unbalanced string");
                ok &= check_eq(phi_inverse(bits, s, t) == th, why, "phi_inverse(phi(h)) != h");
                images.insert(bits);
            }
            ok &= check_eq(images.size() == all.size(), why, "phi not injective");
            ok &= check_eq(BigInt(images.size()) == count_closed_form(s, t), why,
                           "phi not surjective");
        }
    return ok;
}

// 11. structural propositions over the criterion-1 enumeration range
bool structural_propositions(std::string& why) {
    bool ok = true;
    for (int s = 1; s <= 13; ++s)
        for (int t = 1; s + t <= 14; ++t) {
            EmbeddedBipartite g(s, t);
            SpanningThrackleEnumerator en(s, t);
            while (auto h = en.next()) {
                const auto& edges = h->edges();
                ok &= check_eq(
                    std::find(edges.begin(), edges.end(), Edge{1, s + 1}) != edges.end(), why,
                    "missing edge (1, s+1)");
                ok &= check_eq(is_acyclic(g, edges), why, "cycle found");
                for (int k = 1; k <= s; ++k) {
                    std::vector<int> nbrs;
                    for (const Edge& e : edges)
                        if (e.left == k) nbrs.push_back(e.right);
                    bool interval = !nbrs.empty() &&
                                    nbrs.back() - nbrs.front() + 1 ==
                                        static_cast<int>(nbrs.size());
                    ok &= check_eq(interval, why, "right-neighborhood not an interval");
                }
                if (!ok) return ok;
            }
        }
    return ok;
}

// 12. central binomial instances
bool central_binomial(std::string& why) {
    bool ok = true;
    ok &= check_eq(count_closed_form(6, 6) == 252, why, "closed form at (6,12) != 252");
    ok &= check_eq(count_closed_form(8, 8) == 3432, why, "closed form at (8,16) != 3432");
    ok &= check_eq(enumerate_spanning_thrackles(6, 6).size() == 252, why,
                   "enumeration at (6,12) != 252");
    return ok;
}

// 13. matroid layer: uniform matroids and the 4-cycle graphic matroid
bool matroid_layer(std::string& why) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            auto m = uniform_bases(r, n);
            EmbeddedBipartite g(r, n - r);
            for (const auto& basis : m.bases()) {
                ok &= check_eq(tangent_subgraph(basis, m).edges == all_edges(g), why,
                               "tangent subgraph is not the full K_{r,n-r}");
                ok &= check_eq(
                    tangent_cone_simplex_count(basis, m).count == count_closed_form(r, n - r),
                    why, "uniform count differs from C(n-2, r-1)");
            }
        }
    MatroidBases cyc(4, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    for (const auto& basis : cyc.bases())
        ok &= check_eq(tangent_cone_simplex_count(basis, cyc).count == 1, why,
                       "4-cycle count != 1");
    return ok;
}

// 14. negative controls
bool negative_controls(std::string& why) {
    auto cg = generate_cg(2, 5);
    cg[1].minus = Monomial::product({Edge{1, 3}, Edge{2, 4}});  // swapped trailing term
    bool ok = check_eq(!check_groebner(cg, TermOrder::lex()), why,
                       "corrupted basis still certifies");
    Triangulation t = build_triangulation(2, 5);
    t.simplices[0].vertices[1] = t.simplices[0].vertices[0];
    ok &= check_eq(!verify_unimodular(t), why, "degenerate simplex not detected");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "count identity (enumerated = recurrence = closed form), s+t <= 14", 60,
         count_identity},
        {2, "oracle equivalence (brute force = enumerator), s+t <= 9", 120, oracle_equivalence},
        {3, "K_{2,3} weight table (0,1,2,2,1,0)", 0, weight_example},
        {4, "C_g(2,5) contents and initial terms", 0, cg_example},
        {5, "Groebner certification for the seven listed sizes", 300, groebner_certification},
        {6, "standard monomial <=> thrackle support, r(n-r) <= 12, degree <= 4", 0,
         standard_thrackle_equivalence},
        {7, "unimodularity of every simplex, 2 <= r < n <= 10", 0, unimodularity},
        {8, "volume additivity vs Ehrhart oracle, 2 <= r < n <= 8", 300, volume_additivity},
        {9, "Ehrhart spot values for (2,5) and k=4,5 reproduction", 0, ehrhart_spot_values},
        {10, "phi bijection onto balanced bit strings, s+t <= 10", 0, bijection},
        {11, "structural propositions on every enumerated thrackle", 0, structural_propositions},
        {12, "central binomial instances (6,12) and (8,16)", 0, central_binomial},
        {13, "matroid layer: uniform and 4-cycle", 0, matroid_layer},
        {14, "negative controls: corrupted basis, degenerate simplex", 0, negative_controls},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.body(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
            ok = false;
            why = "time limit exceeded";
        }
        std::printf("[%2d] %-70s %s (%.2fs)%s%s\n", c.id, c.name.c_str(),
                    ok ? "PASS" : "FAIL", elapsed, why.empty() ? "" : " -- ",
                    why.c_str());
        if (!ok) ++failures;
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
