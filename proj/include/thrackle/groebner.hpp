#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thrackle/bipartite.hpp"

namespace thrackle {

// A monomial in the edge-indexed variables x[i,j]: a finitely supported
// exponent map.  The empty map is the constant 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(const Edge& e);
    static Monomial product(const std::vector<Edge>& edges);

    int exponent(const Edge& e) const;
    int degree() const;
    bool is_one() const { return exponents_.empty(); }
    std::vector<Edge> support() const;
    const std::map<Edge, int>& exponents() const { return exponents_; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& m) const;
    Monomial divide_by(const Monomial& d) const;  // exact; throws otherwise
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    std::string str() const;  // "x[1,5]*x[2,3]"; "1" for the empty monomial

private:
    std::map<Edge, int> exponents_;
};

// plus - minus with coefficients +1/-1; plus is the marked initial term.
struct Binomial {
    Monomial plus;
    Monomial minus;

    bool operator==(const Binomial&) const = default;
    std::string str() const;
};

// Variable precedence: x[i,j] > x[k,l] iff i < k, or i = k and j > l.
// Returns greater when e1 precedes (is larger than) e2.
std::strong_ordering var_compare(const Edge& e1, const Edge& e2);

// lex: pure lexicographic extension of var_compare.  weight_lex: compare
// total weights first (heavier is larger), ties broken by lex; the weights
// come from the attached graph.
struct TermOrder {
    enum class Kind { lex, weight_lex };
    Kind kind = Kind::lex;
    std::optional<EmbeddedBipartite> graph;

    static TermOrder lex() { return TermOrder{Kind::lex, std::nullopt}; }
    static TermOrder weight_lex(const EmbeddedBipartite& g) {
        return TermOrder{Kind::weight_lex, g};
    }
};

std::strong_ordering mono_compare(const Monomial& m1, const Monomial& m2, const TermOrder& o);

// One binomial per unordered pair of vertex-disjoint non-crossing edges
// {(i,j),(k,l)}: the non-crossing product minus the crossing completion
// x[i,l]*x[k,j].  The non-crossing product is the initial term under both
// the lex and the weight order.  Empty for r < 2 or n-r < 2;
// C(r,2)*C(n-r,2) binomials otherwise.
std::vector<Binomial> generate_cg(int r, int n);

// Normal form: while some basis initial term divides m, replace it by that
// binomial's trailing term.  Strictly decreasing in the order, so it
// terminates.
Monomial reduce(Monomial m, const std::vector<Binomial>& basis, const TermOrder& o);

// Buchberger S-pair criterion for pure-difference binomials: with
// L = lcm(in(b1), in(b2)), the S-polynomial is the difference of the two
// monomials (L/in(b1))*trail(b1) and (L/in(b2))*trail(b2); it reduces to
// zero iff their normal forms coincide.  Coprime initial terms reduce to
// zero without work.
bool s_poly_reduces_to_zero(const Binomial& b1, const Binomial& b2,
                            const std::vector<Binomial>& basis, const TermOrder& o);

// No monomial of any basis element is divisible by the initial term of
// another element (and no trailing term by any initial term).
bool is_reduced_basis(const std::vector<Binomial>& basis);

// All S-pairs reduce to zero and the basis is reduced.
bool check_groebner(const std::vector<Binomial>& basis, const TermOrder& o);

// check_groebner on generate_cg(r,n) under the lex order.  Guarded to
// r*(n-r) <= 20.
bool buchberger_check(int r, int n);

// True iff no initial term of the basis divides m; for the basis C_g this
// coincides with the support of m being a thrackle.
bool is_standard(const Monomial& m, const std::vector<Binomial>& cg);
bool is_standard(const Monomial& m, int r, int n);

// The binomial of an even closed walk (v_1, v_2, ..., v_{2k}, v_1) given as
// a vertex sequence whose last entry repeats the first: product of the odd
// edges minus the product of the even edges.  The walk must alternate
// between left vertices (odd positions) and right vertices (even
// positions).
Binomial walk_binomial(const std::vector<int>& walk, int r, int n);

// True iff both monomials have the same image under x[i,j] -> t_i*t_j,
// i.e. equal vertex-degree vectors.
bool in_kernel(const Binomial& b, int r, int n);

// [{"initial": [[i,j],[k,l]], "trailing": [[i,l],[k,j]]}, ...]
nlohmann::json cg_to_json(const std::vector<Binomial>& cg);

}  // namespace thrackle
