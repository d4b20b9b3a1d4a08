#pragma once

#include "fig/pregeo.hpp"

namespace fig {

/// Rank-3 geometry of vertices (type 1), edges (2) and faces (3) of the
/// tetrahedron; flag-transitive under S4, simply connected.
Pregeometry tetrahedron_geometry();

/// Vertices/edges/faces of the 3-cube; simply connected.
Pregeometry cube_geometry();

/// Antipodal quotient of the cube: 4 vertices, 6 edges, 3 faces. Its flag
/// complex is the projective plane, so the fundamental group has order 2.
/// Used as the 2-fold-quotient fixture for the covering pipeline.
Pregeometry hemicube_geometry();

/// Rank-2 geometry whose incidence graph is a 2k-cycle (k points, k lines).
/// k = 3 is the triangle fixture with H1 = Z.
Pregeometry polygon_geometry(int k);

/// Point-line geometry of the projective plane PG(2,2) (Fano plane).
Pregeometry pg22_geometry();

/// Points/lines/planes of PG(3,2), the rank-3 projective space over F_2
/// (15 + 35 + 15 elements). A building, hence simply connected.
Pregeometry pg32_geometry();

}  // namespace fig
