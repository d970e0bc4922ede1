#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "thrackle/lattice.hpp"
#include "thrackle/thrackle.hpp"

namespace thrackle {

// The triangulation of conv(b_points(r,n)) whose maximal cells are the
// spanning thrackles of K_{r,n-r}: simplices[i] has the b-points of
// thrackles[i]'s edges as vertices.  |simplices| = C(n-2, r-1).
struct Triangulation {
    int r = 0;
    int n = 0;
    std::vector<SpanningThrackle> thrackles;
    std::vector<Simplex> simplices;
};

// A maximal simplicial cone of the tangent cone at the vertex e_{1..r} of
// the uniform matroid base polytope: apex e_B plus n-1 ray generators from
// the e-points.
struct ConeDescription {
    LatticePoint apex;
    std::vector<LatticePoint> generators;
};

// Guarded to n <= 12.
Triangulation build_triangulation(int r, int n);

// Every simplex has normalized volume exactly 1.
bool verify_unimodular(const Triangulation& t);

// The simplex volumes add up to the polytope volume obtained from the
// independent Ehrhart oracle: with unimodular cells this certifies that
// the cells fill the polytope without overlap.  Guarded to n <= 8.
bool verify_volume(const Triangulation& t);

// Barycentric coordinates of q (length-n rational vector in the affine
// span) with respect to a simplex: n-1 nonnegative-iff-inside rationals
// summing to 1.  Throws on a degenerate simplex.
std::vector<Rational> barycentric_coordinates(const std::vector<Rational>& q,
                                              const Simplex& sx, int r, int n);

// Indices of all simplices containing q (all barycentric coordinates
// >= 0).  Throws when q is outside the affine span.
std::vector<std::size_t> locate_point(const std::vector<Rational>& q, const Triangulation& t);

// Samples random rational convex combinations of the b-points (fixed seed)
// and checks each lies in exactly one simplex; points with a zero
// barycentric coordinate in some containing simplex sit on a shared face
// and are skipped.
struct CoveringSampleReport {
    int tested = 0;
    int skipped = 0;
    int failures = 0;

    bool ok() const { return failures == 0; }
};
CoveringSampleReport sample_covering(const Triangulation& t, int samples, std::uint64_t seed);

// The involution carries each simplex back to a simplicial cone at e_B,
// B = {1..r}.
std::vector<ConeDescription> tangent_cone_view(const Triangulation& t);

// {"r":..., "n":..., "count":..., "simplices":[{"thrackle":[[i,j],...],
//  "vertices":[[...],...], "volume":1}, ...]}
nlohmann::json to_json(const Triangulation& t);

// One row per simplex: index, edges as "i-j" joined with ';', volume.
std::string to_csv(const Triangulation& t);

}  // namespace thrackle
