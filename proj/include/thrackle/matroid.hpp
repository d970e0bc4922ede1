#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "thrackle/bipartite.hpp"
#include "thrackle/numeric.hpp"

namespace thrackle {

// A matroid given by an explicit basis list: r-subsets of {1..n}.  Bases
// are stored sorted (each basis ascending, the list lexicographic).  By
// default construction verifies the basis-exchange property; pass
// validate_exchange = false to hold a candidate set for inspection with
// validate_bases().
class MatroidBases {
public:
    MatroidBases(int n, int r, std::vector<std::vector<int>> bases,
                 bool validate_exchange = true);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<std::vector<int>>& bases() const { return bases_; }
    bool contains(std::vector<int> basis) const;

private:
    int n_;
    int r_;
    std::vector<std::vector<int>> bases_;
};

// All C(n,r) r-subsets.
MatroidBases uniform_bases(int r, int n);

// Basis exchange: for every pair B1, B2 and every i in B1\B2 there is a
// j in B2\B1 with B1\{i} u {j} a basis.
bool validate_bases(const MatroidBases& m);

// Bases differing from B by a single exchange: the polytope neighbors of
// e_B.
std::vector<std::vector<int>> adjacent_bases(const std::vector<int>& B, const MatroidBases& m);

// The valid exchanges at B, relabeled onto K_{r,n-r}: B maps
// order-preservingly onto rows 1..r and the complement onto columns
// r+1..n.  Equals all of K_{r,n-r} iff every exchange at B is a basis.
struct TangentSubgraph {
    std::vector<int> base;
    std::vector<int> left_labels;   // left_labels[a] is the element at row a+1
    std::vector<int> right_labels;  // right_labels[b] is the element at column r+1+b
    std::vector<Edge> edges;
};
TangentSubgraph tangent_subgraph(const std::vector<int>& B, const MatroidBases& m);

// Counts the inclusion-maximal thrackles of the tangent subgraph.  For a
// uniform matroid this is C(n-2, r-1) at every basis.  When the maximal
// thrackles do not all have the same cardinality the triangulation-style
// reading of the count is not justified, so the report carries the flag.
struct ThrackleCountReport {
    TangentSubgraph subgraph;
    BigInt count;
    bool equal_cardinality = true;
    int max_cardinality = 0;
    std::vector<std::vector<Edge>> thrackles;
};
ThrackleCountReport tangent_cone_simplex_count(const std::vector<int>& B, const MatroidBases& m);

// The incidence vector e_B: 1 at the elements of B.
std::vector<int> incidence_vector(const std::vector<int>& B, int n);

// {"n":..., "r":..., "bases":[[...],...]}; validates shape and the
// exchange property, throwing std::invalid_argument with a diagnostic on
// the first failed invariant.
MatroidBases matroid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatroidBases& m);
nlohmann::json report_to_json(const ThrackleCountReport& report);

}  // namespace thrackle
