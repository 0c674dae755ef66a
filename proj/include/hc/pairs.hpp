#pragma once

#include "hc/complex.hpp"

#include <array>

namespace hc {

/// D ⊆ L: L has full domains, D is L restricted to the subspaces V_i.
struct ComplexPair {
    FiniteComplex big;                // L
    std::vector<Subspace> domains;    // V_i

    int length() const { return big.length(); }
    /// The complex D: L's matrices on the domains V_i.
    FiniteComplex small() const;
};

/// Throws ValidationError unless L is a valid full-domain complex and L_i(V_i) ⊆ V_{i+1}.
void require_valid(const ComplexPair& p);

struct ImageDegree {
    Index dim = 0;                 // dim Ker D_j - dim(ran L_{j-1} ∩ V_j)
    Subspace harmonic_image;       // ran of the projection of ℋ^j(D) onto ℋ^j(L)
    bool injective = false;        // H^j(D) -> H^j(L)
    bool surjective = false;
};

struct ImageReport {
    std::vector<ImageDegree> degrees;
    long euler() const;
};

/// Image of H(D) -> H(L) per degree; throws InvariantError if the harmonic
/// projection disagrees with the quotient dimension.
ImageReport image_cohomology(const ComplexPair& p);

/// Projections between the harmonic spaces of D and L in one degree, in
/// coordinates of their canonical bases.
struct HarmonicProjections {
    Subspace small_harmonic;   // ℋ^j(D)
    Subspace big_harmonic;     // ℋ^j(L)
    Mat onto_big;              // ℋ(D) -> ℋ(L)
    Mat onto_small;            // ℋ(L) -> ℋ(D)
    bool mutually_adjoint = false;
    bool vanishes_on_adjoint_range = false;   // ℋ(D) has no component along ran L_j^*
};

HarmonicProjections harmonic_projections(const ComplexPair& p, int j);

struct LinkMaps {
    std::vector<Mat> phi;          // phi_i: H_i -> H_{n-i}
    std::vector<Rational> c;       // c_0 ... c_{n-1}
};

struct Relatedness {
    bool related = false;
    bool complementary = false;
};

/// L^*_{n-i-1} phi_i == c_i phi_{i+1} D_i on V_i for all i; complementary also needs isometric phi.
Relatedness check_related(const FiniteComplex& d, const FiniteComplex& l, const LinkMaps& links);
Relatedness check_related(const ComplexPair& p, const LinkMaps& links);

/// L_i := adjoint of phi_{n-i} D_{n-i-1} phi_{n-i-1}^{-1}. d must have full domains.
FiniteComplex build_complementary(const FiniteComplex& d, const LinkMaps& links);

struct FriedrichsReport {
    Subspace kernel;                     // Ker(A_max A_min) inside ⊕ H_i
    std::vector<Subspace> expected;      // Ker D_i ∩ Ker L^*_{i-1}
    bool kernel_identity = false;
    bool range_equal = false;            // ran(A_max A_min) == ran(A_max)
    Index range_composite = 0;
    Index range_max = 0;
};

FriedrichsReport friedrichs_identities(const ComplexPair& p);

/// The five harmonic-splitting conditions in degree i; they must always agree.
struct SplittingConditions {
    std::array<bool, 5> holds{};
    bool agree() const;
};

SplittingConditions splitting_conditions(const ComplexPair& p, int i);

/// Offsets of each degree in the total space ⊕ H_i.
std::vector<Index> degree_offsets(const FiniteComplex& c);

}  // namespace hc
