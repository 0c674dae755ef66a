#pragma once

#include "hc/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hc {

struct StratumDecl {
    std::string label;
    int dim = 0;
    bool operator==(const StratumDecl&) const = default;
};

/// Raw contents of a stratified file. Simplices not listed in `labels` lie in
/// the regular stratum.
struct StratifiedInput {
    int vertices = 0;
    std::vector<Simplex> tops;
    std::vector<int> signs;                                 // orientation of each top as written
    std::vector<StratumDecl> strata;                        // singular strata only
    std::vector<std::pair<Simplex, std::string>> labels;    // minimal stratum of the interior
    std::map<std::string, Rational> weights;

    /// Sorted simplices with the sort permutation folded into the sign; tops and labels in order.
    StratifiedInput canonical() const;
    bool operator==(const StratifiedInput&) const = default;
};

struct Stratum {
    std::string label;
    int dim = 0;
    int codim = 0;
};

struct StratifiedComplex {
    StratifiedInput input;                 // canonical form
    int n = 0;
    SimplicialComplex sc;
    std::vector<Stratum> strata;
    std::vector<std::vector<int>> label;   // per dimension, per face: stratum index or -1

    bool regular(int k, Index face) const { return label[static_cast<size_t>(k)][static_cast<size_t>(face)] < 0; }
    std::vector<bool> regular_mask(int k) const;
    /// Index of a singular stratum by label; throws ValidationError.
    int stratum_index(const std::string& name) const;
};

/// Checks purity, the two-facet condition on regular (n-1)-faces, and that the
/// labels form a filtration meeting every simplex in a single face. Throws
/// ValidationError naming the offending simplex.
StratifiedComplex load_validate(const StratifiedInput& in);

/// Input for a complex with no singular strata; every top written with sign +.
StratifiedInput manifold_input(const std::vector<Simplex>& tops);

/// Suspension of a complex on vertices 0..v-1 with apexes v ("north") and v+1
/// ("south") as two point strata.
StratifiedInput suspension_input(const std::vector<Simplex>& tops, int v);

/// Integer value per singular stratum label.
struct Perversity {
    std::map<std::string, int> values;
    bool operator==(const Perversity&) const = default;
};

/// "zero", "top", "lower-middle", "upper-middle", or a table "a=1,b=-2".
Perversity perversity_by_name(const StratifiedComplex& x, const std::string& spec);
/// Throws ValidationError unless every singular stratum has exactly one value.
void require_total(const StratifiedComplex& x, const Perversity& p);
/// t - p, with t(Y) = cod(Y) - 2.
Perversity dual(const StratifiedComplex& x, const Perversity& p);
/// Greatest integer strictly less than x.
long strict_floor(const Rational& x);
/// The weight formula for a link of dimension l and weight c > 0.
int pg_value(int l, const Rational& c);
/// p_g from weights c_Y, with l_Y = cod(Y) - 1. Throws on a missing or nonpositive weight.
Perversity from_weights(const StratifiedComplex& x, const std::map<std::string, Rational>& weights);
/// p(Y) <= q(Y) for every stratum.
bool leq(const Perversity& p, const Perversity& q);

/// Allowability of every i-face (singular faces are never allowable).
std::vector<bool> allowable_faces(const StratifiedComplex& x, int i, const Perversity& p);

/// Span of allowable generators inside the R_0 chain space (regular i-faces, in face order).
Subspace allowable_subspace(const StratifiedComplex& x, int i, const Perversity& p);

/// R_0 boundary C_i -> C_{i-1} on regular faces; singular faces are dropped.
Mat r0_boundary(const StratifiedComplex& x, int i);

/// I^pS_i = A_i ∩ ∂^{-1}(A_{i-1}) together with the R_0 boundaries.
struct IntersectionChains {
    std::vector<Subspace> chains;
    std::vector<Mat> boundary;   // boundary[i]: C_i -> C_{i-1}; boundary[0] has no rows
};

IntersectionChains intersection_chains(const StratifiedComplex& x, const Perversity& p);

struct IHReport {
    std::vector<Index> dims;
    long euler() const;
};

IHReport intersection_homology(const StratifiedComplex& x, const Perversity& p);

struct ImageIH {
    std::vector<Index> source;   // I^pH_i, p the smaller perversity
    std::vector<Index> target;   // I^qH_i
    std::vector<Index> image;    // dim im(I^pH_i -> I^qH_i)
    long euler() const;
};

/// Image of I^pH -> I^qH induced by I^pS ⊆ I^qS. Requires p <= q.
ImageIH image_ih(const StratifiedComplex& x, const Perversity& p, const Perversity& q);

/// Coherent signs of the sorted n-simplices across regular (n-1)-faces, each
/// component taking the written sign of its first simplex; nullopt if none exists.
std::optional<std::vector<int>> orientation(const StratifiedComplex& x, int flip = 1);

/// Betti numbers of the full subcomplex on vertices outside the singular set.
std::vector<Index> regular_part_betti(const StratifiedComplex& x);

struct DualityReport {
    ImageIH image;
    bool q_is_dual = false;
    /// p >= 0 on cod >= 2, p = -1 on cod 1, p <= q; or p = 0 on cod 1, p >= q.
    bool hypotheses = false;
    std::vector<bool> mirrored;   // image[j] == image[n-j]
    bool duality = false;
    long euler = 0;
    bool euler_odd_zero = true;   // n odd: euler == 0
    bool euler_parity = true;     // n even: euler ≡ dim middle (mod 2)
    bool euler_literal = true;    // n even: euler == ±dim middle, sign (-1)^{n/2}
    std::vector<Index> regular_betti;
    std::vector<bool> regular_bound_small;   // b_j(reg) <= dim I^pH_j (reported only)
    std::vector<bool> regular_bound_large;   // b_j(reg) <= dim I^qH_j (reported only)
};

/// The image of the smaller of (p, q) into the larger, with duality and χ checks.
/// Throws ValidationError if x has no coherent orientation or p, q are incomparable.
DualityReport duality_chi_report(const StratifiedComplex& x, const Perversity& p, const Perversity& q);

}  // namespace hc
