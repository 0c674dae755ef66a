#pragma once

#include "hc/pairs.hpp"

namespace hc {

/// Subspaces produced while building one degree of the intermediate complex.
/// Orthogonality is taken in the graph inner product G_i + L_i^T G_{i+1} L_i.
struct ConstructionTrace {
    Subspace kernel_big;          // Ker L_i
    Subspace kernel_complement;   // graph-orthocomplement of Ker L_i
    Subspace pullback;            // {a : L_i a in V_{i+1}}
    Subspace w;                   // pullback ∩ kernel_complement
    Subspace a;                   // graph-orthocomplement of Ker D_i inside V_i
    Subspace projected_a;         // projection of a onto kernel_complement
    Subspace n;                   // graph-orthocomplement of projected_a inside w
    Subspace m;                   // graph-orthocomplement of Ker D_i inside B_i
    bool shortcut = false;        // Ker D_i == Ker L_i, so B_i = pullback
};

struct IntermediateComplex {
    ComplexPair base;
    std::vector<Subspace> b;      // B_i
    FiniteComplex p;              // L restricted to B
    std::vector<ConstructionTrace> trace;
};

Mat graph_gram(const FiniteComplex& l, int i);

IntermediateComplex build_intermediate(const ComplexPair& pair);

/// Checks the structural invariants (inclusions, kernels, ranges, P∘P = 0,
/// the graph-orthogonal splittings). Returns a description of the first failure.
std::optional<std::string> check_invariants(const IntermediateComplex& ic);

/// dim H^i(P) from complex-core against the image dimension from complex-pairs.
std::optional<int> verify_against_oracle(const IntermediateComplex& ic);

struct KernelReport {
    Mat matrix;
    Index kernel_dim = 0;
    Index expected = 0;    // dim H^i(P)
};

/// Delta_i = P_i^* P_i + P_{i-1} P_{i-1}^* restricted to B_i.
KernelReport laplacian_m(const IntermediateComplex& ic, int i);

struct IndexReport {
    Index kernel = 0;
    Index cokernel = 0;
    long index = 0;
    long euler = 0;
};

/// Index of (P + P^*) from even to odd degrees on the complex (B_i, P_i).
IndexReport index_even(const IntermediateComplex& ic);

}  // namespace hc
