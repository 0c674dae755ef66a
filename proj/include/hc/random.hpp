#pragma once

#include "hc/pairs.hpp"

#include <cstdint>
#include <random>

namespace hc {

/// Seeded source of random exact instances. The same seed yields the same
/// sequence on every platform (mt19937_64 plus modular reduction only).
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);   // inclusive
    bool coin(int numerator, int denominator);

    /// Small rational: mostly integers in [-2, 2], sometimes halves and thirds.
    Rational entry();
    Mat matrix(Index rows, Index cols);
    Mat matrix_of_rank(Index rows, Index cols, Index r);
    Mat invertible(Index n);
    Mat spd(Index n);
    Mat antisymmetric(Index n);
    /// (I - S)(I + S)^{-1} for a random antisymmetric S: orthogonal for the standard gram.
    Mat cayley_orthogonal(Index n);

    Subspace subspace(Index ambient, Index dim);
    /// A random subspace of the given dimension containing u (dimension clamped to [dim u, ambient]).
    Subspace superspace(const Subspace& u, Index dim);

    /// Full-domain complex of length n with dims in [0, max_dim]; L_{i+1} L_i = 0 by construction.
    FiniteComplex full_complex(int n, Index max_dim, bool random_grams);
    /// Same, but with prescribed dims.
    FiniteComplex full_complex(const std::vector<Index>& dims, bool random_grams);
    /// Random pair D ⊆ L; each V_i contains L_{i-1}(V_{i-1}).
    ComplexPair pair(int n, Index max_dim, bool random_grams);
    /// Domains U_i with V_i ⊆ U_i and L_i(U_i) ⊆ U_{i+1}.
    std::vector<Subspace> between(const ComplexPair& p);

private:
    std::mt19937_64 rng_;
};

}  // namespace hc
