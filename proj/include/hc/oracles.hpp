#pragma once

// Independent reference computations for the tests and the check suite. None of these
// call into the library's elimination, subspace or homology code.

#include "hc/linalg.hpp"
#include "hc/pairs.hpp"

#include <vector>

namespace oracle {

using hc::Index;
using hc::Mat;
using hc::Rational;

/// Rank by fraction-free column elimination (Bareiss style).
Index rank(const Mat& m);

/// Inertia from the characteristic polynomial: Sturm sequences counted with multiplicity.
hc::Inertia sturm_inertia(const Mat& s);

/// Characteristic polynomial det(x I - a), coefficients low degree first.
std::vector<Rational> characteristic_polynomial(const Mat& a);

/// dim Ker(D_i|V_i) - dim ran(D_{i-1}|V_{i-1}) from ranks alone.
std::vector<Index> cohomology_dims(const hc::FiniteComplex& c);

/// dim Ker D_j - dim(ran L_{j-1} ∩ V_j) from ranks alone.
std::vector<Index> image_dims(const hc::ComplexPair& p);

/// Rational Betti numbers of the complex generated by the given top simplices.
std::vector<Index> betti(const std::vector<std::vector<int>>& tops);

/// Rational Betti numbers of (K, L) where L is the subcomplex generated by sub_tops.
std::vector<Index> relative_betti(const std::vector<std::vector<int>>& tops,
                                  const std::vector<std::vector<int>>& sub_tops);

/// dim im(H^j(K, L) -> H^j(K)) over Q by ranks of cochain maps.
std::vector<Index> relative_to_absolute_image(const std::vector<std::vector<int>>& tops,
                                              const std::vector<std::vector<int>>& sub_tops);

/// Intersection homology of the suspension of an m-dimensional space X with
/// Betti numbers b, both suspension points given perversity value p.
std::vector<Index> suspension_ih(const std::vector<Index>& b, int p);

}  // namespace oracle
