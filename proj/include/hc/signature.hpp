#pragma once

#include "hc/pairs.hpp"
#include "hc/stratified.hpp"

#include <string>

namespace hc {

/// Sum of the coherently oriented n-simplices, in face order. Its R_0 boundary
/// is zero. Throws ValidationError if no coherent orientation exists.
Vec fundamental_cycle(const StratifiedComplex& x, int flip = 1);

/// A compact triangulated manifold, possibly with boundary, and the cochain
/// pair D ⊆ L where D is the subcomplex of cochains vanishing on the boundary.
struct RelAbsPair {
    std::vector<Simplex> tops;        // sorted
    SimplicialComplex sc;
    std::vector<Simplex> boundary;    // boundary (n-1)-faces
    ComplexPair pair;
    std::optional<std::vector<int>> orientation;   // relative to sorted vertex order
};

/// Requires a pure complex whose (n-1)-faces lie in one or two facets.
RelAbsPair build_rel_abs_pair(const std::vector<Simplex>& tops, int flip = 1);

/// <a ∪ b, Σ ε_σ σ> with the front-face/back-face product a(v_0..v_k) b(v_k..v_n)
/// on sorted vertices. a and b are k-cochains in face order.
Rational cup_evaluate(const SimplicialComplex& sc, const std::vector<Simplex>& tops, const std::vector<int>& signs,
                      int k, const Vec& a, const Vec& b);

struct PairingReport {
    int degree = 0;
    Mat basis;                 // cochains representing a basis of the image space
    Mat matrix;
    bool symmetric = false;
    Inertia inertia;
    long signature = 0;
    bool nondegenerate = false;
    std::string model;         // "cup" or "model-signature"
};

/// Cup pairing on im(H^k(M, ∂M) -> H^k(M)), n = 2k. Throws ValidationError on odd n
/// or a non-orientable manifold; InvariantError if the form is not symmetric when n = 4m.
PairingReport image_pairing(const RelAbsPair& m, int k);

/// Same pairing with the basis replaced by basis * change (change invertible).
PairingReport image_pairing(const RelAbsPair& m, int k, const Mat& change);

/// Middle-degree pairing on the image of the smaller perversity into the larger
/// (p and q = dual(p)). Requires n = 4m and an orientation.
PairingReport perverse_signature(const StratifiedComplex& x, const Perversity& p, const Perversity& q, int flip = 1);

}  // namespace hc
