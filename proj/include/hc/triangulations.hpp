#pragma once

#include "hc/simplicial.hpp"

#include <vector>

namespace hc::tri {

/// Facets of the boundary of the k-simplex on vertices 0..k (a (k-1)-sphere).
std::vector<Simplex> simplex_boundary(int k);

/// 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
std::vector<Simplex> torus7();

/// Cone on x with the given apex.
std::vector<Simplex> cone(const std::vector<Simplex>& x, int apex);

/// Suspension of x with apexes a and b.
std::vector<Simplex> suspension(const std::vector<Simplex>& x, int a, int b);

/// Staircase triangulation of x × y; vertex (u, v) becomes u * y_vertices + v.
std::vector<Simplex> product(const std::vector<Simplex>& x, const std::vector<Simplex>& y, int y_vertices);

/// The 9-vertex complex projective plane.
std::vector<Simplex> cp2();

/// Facets not containing v (the complement of the open star of v).
std::vector<Simplex> remove_star(const std::vector<Simplex>& x, int v);

/// (n-1)-faces that lie in exactly one facet.
std::vector<Simplex> boundary_faces(const std::vector<Simplex>& x);

std::vector<Simplex> mobius_band();
std::vector<Simplex> cylinder();
std::vector<Simplex> disk();
std::vector<Simplex> torus_minus_disk();
/// Connected sum of two 7-vertex tori with the star of one vertex removed.
std::vector<Simplex> genus2_minus_disk();

}  // namespace hc::tri
