#pragma once

#include <cstdint>
#include <vector>

#include "thrackle/bipartite.hpp"
#include "thrackle/numeric.hpp"

namespace thrackle {

using LatticePoint = std::vector<std::int64_t>;

// The points e_i + e_j in Z^n for 1 <= i <= r < j <= n, in edge order.
// Stacked as columns they form the vertex-edge incidence matrix of
// K_{r,n-r}.
std::vector<LatticePoint> b_points(int r, int n);

// The points e_j - e_i, same index range: the edge directions from the
// vertex e_{1..r} of the uniform matroid base polytope toward its adjacent
// vertices.
std::vector<LatticePoint> e_points(int r, int n);

// The b-point of a single edge of K_{r,n-r}.
LatticePoint b_point_for_edge(const Edge& e, int r, int n);

// Negates coordinates 1..r: the unimodular involution diag(-I_r, I_{n-r})
// carrying conv(e-points) onto conv(b-points).  An involution: applying it
// twice is the identity.
LatticePoint involution_map(const LatticePoint& p, int r);

// Dimension of the affine hull, as the exact rank of the difference
// vectors against the first point.
int affine_dim(const std::vector<LatticePoint>& points);

// Unimodular chart for the affine lattice of conv(b_points(r,n)): drops
// coordinates 1 and r+1, which are recoverable from the two unit sum
// constraints.  On difference vectors this is a lattice bijection onto
// Z^(n-2).  Rejects points with sum(coords 1..r) != 1 or
// sum(coords r+1..n) != 1.
std::vector<std::int64_t> chart_project(const LatticePoint& p, int r, int n);

// Vertex list of a maximal simplex of the triangulation: n-1 points.
struct Simplex {
    std::vector<LatticePoint> vertices;
};

// Volume in the lattice normalization where a unimodular simplex has
// volume 1: the absolute determinant of the (n-2)x(n-2) matrix of
// chart-projected difference vectors.  0 signals a degenerate simplex.
BigInt normalized_simplex_volume(const Simplex& sx, int r, int n);

// All lattice points of the k-th dilate of conv(b_points(r,n)):
// nonnegative integer vectors with sum(coords 1..r) = k and
// sum(coords r+1..n) = k, enumerated by brute force.
std::vector<LatticePoint> enumerate_lattice_points(int r, int n, int k);
BigInt count_lattice_points(int r, int n, int k);

// Exact-rational polynomial, coefficients[i] multiplying k^i.
class EhrhartPoly {
public:
    explicit EhrhartPoly(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    int degree() const;
    Rational leading_coefficient() const;
    Rational eval(long long k) const;

private:
    std::vector<Rational> coefficients_;
};

// Lagrange interpolation through the exact counts at k = 0..n-2; guarded
// to n <= 10.
EhrhartPoly ehrhart_fit(int r, int n);

// (coefficient of k^dim) * dim!, the normalized volume; throws if the
// product is not an integer.
BigInt ehrhart_normalized_volume(const EhrhartPoly& poly, int dim);

}  // namespace thrackle
