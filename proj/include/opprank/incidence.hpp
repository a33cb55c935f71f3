#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "opprank/bitmat.hpp"

namespace opprank {

/// Point-line incidence structure; lines are lists of point indices.
struct IncidenceGeometry {
    int n_points = 0;
    int n_lines = 0;
    std::vector<std::vector<int>> lines;
};

/// Parse the `ig` text format:
///   ig 1
///   points N
///   lines M
///   <M lines of space-separated 0-based point indices>
/// `#` starts a comment line.  Malformed input throws std::runtime_error
/// with the offending line number.
IncidenceGeometry load_geometry(std::istream& in);

struct PolygonCertificate {
    int n = 0;   // gonality
    int s = 0;   // points per line - 1
    int r = 0;   // lines per point - 1
    bool ok = false;
    std::string witness;  // first violated axiom, empty when ok
};

/// Exact check of the generalized n-gon axioms of order (s,r): line sizes,
/// point degrees, and diameter n / girth 2n of the bipartite incidence
/// graph (breadth-first search from every vertex).
PolygonCertificate verify_generalized_polygon(const IncidenceGeometry& G,
                                              int n, int s, int r);

/// Distance-relation matrices A_0..A_4 on points: A_i[a][b] = 1 iff the
/// incidence-graph distance of points a,b is 2i.  Requires a geometry that
/// passes verify_generalized_polygon with n = 8; A_4 is the oppositeness
/// matrix.
std::vector<BitMatrix> distance_relation_matrices(const IncidenceGeometry& G);

}  // namespace opprank
