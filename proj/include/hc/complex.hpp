#pragma once

#include "hc/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hc {

/// Finite model of a Hilbert complex H_0 -> H_1 -> ... -> H_n.
/// D_i is stored as a total d_{i+1} x d_i matrix; only its restriction to
/// domains[i] carries meaning. domains[n] is the space the last differential
/// must land in.
struct FiniteComplex {
    std::vector<Mat> grams;          // n+1 entries
    std::vector<Mat> diffs;          // n entries
    std::vector<Subspace> domains;   // n+1 entries

    int length() const { return static_cast<int>(grams.size()) - 1; }
    Index dim(int i) const { return grams[static_cast<size_t>(i)].rows(); }
    const Mat& gram(int i) const { return grams[static_cast<size_t>(i)]; }
    const Mat& diff(int i) const { return diffs[static_cast<size_t>(i)]; }
    const Subspace& domain(int i) const { return domains[static_cast<size_t>(i)]; }
    bool full_domains() const;

    /// Standard grams and full domains.
    static FiniteComplex with_standard_grams(const std::vector<Index>& dims, std::vector<Mat> diffs);
};

/// Exact equality of grams, differentials and domains (shapes compared first).
bool operator==(const FiniteComplex& a, const FiniteComplex& b);

/// Exact equality that tolerates differing shapes.
bool same_matrix(const Mat& a, const Mat& b);

/// Shape check only (sizes of grams, differentials, domains). Throws ValidationError.
void check_shapes(const FiniteComplex& c);

struct Violation {
    int degree;
    std::string what;
};

/// Checks D_i(V_i) in V_{i+1} and D_{i+1} D_i = 0 on V_i; grams must be positive definite.
std::optional<Violation> validate(const FiniteComplex& c);

/// Throws ValidationError carrying the violation.
void require_valid(const FiniteComplex& c);

/// D_i^*: H_{i+1} -> H_i with <D v, w> = <v, D^* w> for v in V_i and range inside V_i.
Mat adjoint(const FiniteComplex& c, int i);

/// Ker(D_i) restricted to V_i (V_n itself at the top degree).
Subspace kernel(const FiniteComplex& c, int i);

/// D_{i-1}(V_{i-1}) as a subspace of H_i (zero for i == 0).
Subspace incoming_range(const FiniteComplex& c, int i);

struct DegreeCohomology {
    Index dim = 0;
    Subspace harmonic;
    Subspace incoming;       // ran D_{i-1}
    Subspace adjoint_range;  // ran D_i^*
    bool kodaira_exact = false;
};

struct CohomologyReport {
    std::vector<DegreeCohomology> degrees;
    long euler() const;
};

CohomologyReport cohomology(const FiniteComplex& c);

struct LaplacianReport {
    Mat matrix;
    Subspace kernel;
};

/// Delta_i = D_i^* D_i + D_{i-1} D_{i-1}^*. Requires full domains.
LaplacianReport laplacian(const FiniteComplex& c, int i);

/// Spaces H_{n-i}, differentials D^*_{n-i-1}. Requires full domains.
FiniteComplex dual_complex(const FiniteComplex& c);

}  // namespace hc
