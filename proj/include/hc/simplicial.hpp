#pragma once

#include "hc/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hc {

/// Sorted vertex list.
using Simplex = std::vector<int>;

/// All faces generated by a list of simplices, grouped by dimension and
/// sorted lexicographically within each dimension.
struct SimplicialComplex {
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::map<Simplex, Index>> index;

    static SimplicialComplex generated_by(const std::vector<Simplex>& tops);

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    Index count(int k) const;
    /// Position of s among faces of its dimension, or -1.
    Index find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s) >= 0; }
};

Simplex sorted(Simplex s);

/// Sign of the permutation sorting s (s must have distinct entries).
int permutation_sign(const Simplex& s);

/// Faces of s obtained by deleting one vertex; the r-th has incidence (-1)^r.
std::vector<Simplex> codim_one_faces(const Simplex& s);

/// Boundary C_k -> C_{k-1} between the kept faces (all faces when the masks are empty),
/// rows and columns in face order. Faces of a kept k-simplex that are not kept are dropped.
Mat boundary_matrix(const SimplicialComplex& sc, int k, const std::vector<bool>& keep_rows = {},
                    const std::vector<bool>& keep_cols = {});

/// Rational Betti numbers b_0 ... b_dim.
std::vector<Index> betti_numbers(const SimplicialComplex& sc);

/// Coherent orientation of n-simplices across shared (n-1)-faces that pass
/// the given test. Each connected component takes the orientation of its first
/// simplex, times its given sign. Returns std::nullopt when no coherent choice exists.
/// Signs are relative to the sorted vertex order.
std::optional<std::vector<int>> coherent_orientation(const std::vector<Simplex>& tops, const std::vector<int>& given,
                                                     const std::vector<bool>& shared_face_allowed,
                                                     const SimplicialComplex& sc);

}  // namespace hc
