#pragma once

// Exact linear algebra over an ordered field Scalar (in practice hc::Rational).
// Everything here is a free function on Eigen dense types; no tolerances.

#include "hc/errors.hpp"
#include "hc/rational.hpp"

#include <utility>
#include <vector>

namespace hc {

template <typename S>
bool is_zero(const S& x) {
    return x == 0;
}

/// Reduces m to reduced row echelon form in place and returns the pivot columns.
template <typename S>
std::vector<Index> rref_in_place(Matrix<S>& m) {
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Index p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) m.row(p).swap(m.row(r));
        if (m(r, c) != 1) {
            const S inv = S(1) / m(r, c);
            for (Index j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(r, j) *= inv;
        }
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const S f = m(i, c);
            for (Index j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// a * b, skipping zero entries of a (the matrices here are mostly sparse).
template <typename S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw InvariantError("mul: shape mismatch");
    Matrix<S> out = Matrix<S>::Zero(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (Index j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <typename S>
Index rank(Matrix<S> m) {
    return static_cast<Index>(rref_in_place(m).size());
}

/// A linear subspace of S^n held by a canonical basis: the basis matrix B
/// (n x dim) is such that B^T is in reduced row echelon form. Equal subspaces
/// therefore have identical bases.
template <typename S>
class BasicSubspace {
public:
    BasicSubspace() = default;

    static BasicSubspace span(const Matrix<S>& columns) {
        Matrix<S> t = columns.transpose();
        auto piv = rref_in_place(t);
        BasicSubspace out;
        out.ambient_ = columns.rows();
        out.basis_ = t.topRows(static_cast<Index>(piv.size())).transpose();
        out.pivots_ = std::move(piv);
        return out;
    }
    static BasicSubspace zero(Index n) { return span(Matrix<S>::Zero(n, 0)); }
    static BasicSubspace full(Index n) { return span(Matrix<S>::Identity(n, n)); }

    Index ambient() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    bool is_zero_space() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Matrix<S>& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    /// Coefficients c with basis * c == v; the second member is false when v is not in the span.
    std::pair<Vector<S>, bool> coordinates(const Vector<S>& v) const {
        Vector<S> c(dim());
        for (Index j = 0; j < dim(); ++j) c(j) = v(pivots_[static_cast<size_t>(j)]);
        const Vector<S> r = v - basis_ * c;
        bool inside = true;
        for (Index i = 0; i < r.size() && inside; ++i) inside = is_zero(r(i));
        return {c, inside};
    }

    /// Coordinates of each column of m; throws when some column is outside.
    Matrix<S> coordinates_of(const Matrix<S>& m) const {
        Matrix<S> out(dim(), m.cols());
        for (Index j = 0; j < m.cols(); ++j) {
            auto [c, inside] = coordinates(m.col(j));
            if (!inside) throw InvariantError("vector outside subspace");
            out.col(j) = c;
        }
        return out;
    }

    bool contains(const Vector<S>& v) const { return coordinates(v).second; }

    bool contains(const BasicSubspace& other) const {
        check_ambient(other);
        for (Index j = 0; j < other.dim(); ++j)
            if (!contains(Vector<S>(other.basis_.col(j)))) return false;
        return true;
    }

    /// Rows spanning the annihilator {w : w^T v = 0 for v in this subspace}.
    Matrix<S> annihilator() const;

    bool operator==(const BasicSubspace& o) const {
        return ambient_ == o.ambient_ && dim() == o.dim() && basis_ == o.basis_;
    }
    bool operator!=(const BasicSubspace& o) const { return !(*this == o); }

    void check_ambient(const BasicSubspace& o) const {
        if (ambient_ != o.ambient_) throw ValidationError("subspace ambient dimension mismatch");
    }

private:
    Index ambient_ = 0;
    Matrix<S> basis_ = Matrix<S>::Zero(0, 0);
    std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

/// {v : m v = 0}.
template <typename S>
BasicSubspace<S> kernel_basis(const Matrix<S>& m) {
    Matrix<S> r = m;
    const auto piv = rref_in_place(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (Index c : piv) is_pivot[static_cast<size_t>(c)] = true;
    Matrix<S> k = Matrix<S>::Zero(m.cols(), m.cols() - static_cast<Index>(piv.size()));
    Index col = 0;
    for (Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        k(f, col) = 1;
        for (size_t row = 0; row < piv.size(); ++row)
            if (!is_zero(r(static_cast<Index>(row), f))) k(piv[row], col) = -r(static_cast<Index>(row), f);
        ++col;
    }
    return BasicSubspace<S>::span(k);
}

/// Column span of m.
template <typename S>
BasicSubspace<S> image_basis(const Matrix<S>& m) {
    return BasicSubspace<S>::span(m);
}

template <typename S>
Matrix<S> BasicSubspace<S>::annihilator() const {
    return kernel_basis(Matrix<S>(basis_.transpose())).basis().transpose();
}

template <typename S>
BasicSubspace<S> join(const BasicSubspace<S>& a, const BasicSubspace<S>& b) {
    a.check_ambient(b);
    Matrix<S> m(a.ambient(), a.dim() + b.dim());
    m << a.basis(), b.basis();
    return BasicSubspace<S>::span(m);
}

template <typename S>
BasicSubspace<S> meet(const BasicSubspace<S>& a, const BasicSubspace<S>& b) {
    a.check_ambient(b);
    if (b.is_full()) return a;
    if (a.is_full()) return b;
    const Matrix<S> k = kernel_basis(mul(b.annihilator(), a.basis())).basis();
    return BasicSubspace<S>::span(mul(a.basis(), k));
}

template <typename S>
struct MeetJoin {
    BasicSubspace<S> meet;
    BasicSubspace<S> join;
};

template <typename S>
MeetJoin<S> meet_join(const BasicSubspace<S>& a, const BasicSubspace<S>& b) {
    return {meet(a, b), join(a, b)};
}

/// m(U).
template <typename S>
BasicSubspace<S> apply(const Matrix<S>& m, const BasicSubspace<S>& u) {
    if (u.is_full()) return BasicSubspace<S>::span(m);
    return BasicSubspace<S>::span(mul(m, u.basis()));
}

/// {v : m v in U}.
template <typename S>
BasicSubspace<S> preimage(const Matrix<S>& m, const BasicSubspace<S>& u) {
    if (u.is_full()) return BasicSubspace<S>::full(m.cols());
    return kernel_basis(mul(u.annihilator(), m));
}

/// Kernel of m restricted to the subspace u.
template <typename S>
BasicSubspace<S> kernel_on(const Matrix<S>& m, const BasicSubspace<S>& u) {
    if (u.is_full()) return kernel_basis(m);
    const Matrix<S> k = kernel_basis(mul(m, u.basis())).basis();
    return BasicSubspace<S>::span(mul(u.basis(), k));
}

/// True iff the parts are independent and together span target.
template <typename S>
bool is_direct_sum(const std::vector<BasicSubspace<S>>& parts, const BasicSubspace<S>& target) {
    Index total = 0;
    BasicSubspace<S> sum = BasicSubspace<S>::zero(target.ambient());
    for (const auto& p : parts) {
        total += p.dim();
        sum = join(sum, p);
    }
    return total == target.dim() && sum == target;
}

template <typename S>
bool is_zero_matrix(const Matrix<S>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <typename S>
bool is_symmetric(const Matrix<S>& m) {
    if (m.rows() != m.cols()) return false;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// Gauss-Jordan inverse. Throws ValidationError when m is singular or not square.
template <typename S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<S> aug(n, 2 * n);
    aug << m, Matrix<S>::Identity(n, n);
    const auto piv = rref_in_place(aug);
    if (static_cast<Index>(piv.size()) < n || (n > 0 && piv.back() >= n))
        throw ValidationError("singular matrix");
    return aug.rightCols(n);
}

/// Solves a x = b for square invertible a.
template <typename S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw ValidationError("solve: shape mismatch");
    const Index n = a.rows();
    Matrix<S> aug(n, n + b.cols());
    aug << a, b;
    const auto piv = rref_in_place(aug);
    if (static_cast<Index>(piv.size()) < n || (n > 0 && piv.back() >= n))
        throw ValidationError("singular matrix");
    return aug.rightCols(b.cols());
}

/// Pivots of the exact LDL^T factorization without pivoting. Stops at the first
/// non-positive pivot; the returned vector then ends with that pivot.
template <typename S>
std::vector<S> ldlt_pivots(Matrix<S> g) {
    std::vector<S> d;
    const Index n = g.rows();
    for (Index k = 0; k < n; ++k) {
        const S pivot = g(k, k);
        d.push_back(pivot);
        if (!(pivot > 0)) break;
        for (Index i = k + 1; i < n; ++i) {
            if (is_zero(g(i, k))) continue;
            const S f = g(i, k) / pivot;
            for (Index j = k + 1; j < n; ++j)
                if (!is_zero(g(k, j))) g(i, j) -= f * g(k, j);
        }
    }
    return d;
}

template <typename S>
bool is_positive_definite(const Matrix<S>& g) {
    if (!is_symmetric(g)) return false;
    const auto d = ldlt_pivots(g);
    return static_cast<Index>(d.size()) == g.rows() && (d.empty() || d.back() > 0);
}

template <typename S>
void require_gram(const Matrix<S>& g) {
    if (!is_positive_definite(g)) throw ValidationError("gram matrix is not symmetric positive definite");
}

/// {x in w : <a, x>_g = 0}.
template <typename S>
BasicSubspace<S> complement_within(const BasicSubspace<S>& a, const BasicSubspace<S>& w, const Matrix<S>& gram) {
    a.check_ambient(w);
    const Matrix<S> k = kernel_basis(mul(mul(Matrix<S>(a.basis().transpose()), gram), w.basis())).basis();
    return BasicSubspace<S>::span(mul(w.basis(), k));
}

/// The gram-orthogonal projector onto a: B (B^T G B)^{-1} B^T G.
template <typename S>
Matrix<S> projector(const BasicSubspace<S>& a, const Matrix<S>& gram) {
    const Matrix<S>& b = a.basis();
    if (a.dim() == 0) return Matrix<S>::Zero(a.ambient(), a.ambient());
    if (a.is_full()) return Matrix<S>::Identity(a.ambient(), a.ambient());
    const Matrix<S> btg = mul(Matrix<S>(b.transpose()), gram);
    return mul(b, solve(mul(btg, b), btg));
}

template <typename S>
struct Orth {
    BasicSubspace<S> complement;
    Matrix<S> projector;
};

/// Gram-orthogonal complement of a and the orthogonal projector onto a.
template <typename S>
Orth<S> orth(const BasicSubspace<S>& a, const Matrix<S>& gram) {
    if (gram.rows() != a.ambient()) throw ValidationError("orth: gram size does not match ambient dimension");
    require_gram(gram);
    return {complement_within(a, BasicSubspace<S>::full(a.ambient()), gram), projector(a, gram)};
}

struct Inertia {
    Index pos = 0;
    Index neg = 0;
    Index zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Inertia of a symmetric matrix by symmetric Gaussian (congruence) reduction.
template <typename S>
Inertia congruence_signature(Matrix<S> s) {
    if (!is_symmetric(s)) throw ValidationError("congruence_signature: matrix is not symmetric");
    Inertia out;
    Index n = s.rows();
    Index k = 0;
    auto sym_swap = [&](Index a, Index b) {
        s.row(a).swap(s.row(b));
        s.col(a).swap(s.col(b));
    };
    while (k < n) {
        if (is_zero(s(k, k))) {
            Index j = k + 1;
            while (j < n && is_zero(s(j, j))) ++j;
            if (j < n) {
                sym_swap(k, j);
            } else {
                j = k + 1;
                while (j < n && is_zero(s(k, j))) ++j;
                if (j == n) {
                    // Row k is zero: it contributes to the radical.
                    ++out.zero;
                    sym_swap(k, n - 1);
                    --n;
                    continue;
                }
                // s(k,k) = s(j,j) = 0, s(k,j) != 0: add row/col j to row/col k.
                s.row(k) += s.row(j);
                s.col(k) += s.col(j);
            }
        }
        const S pivot = s(k, k);
        (pivot > 0 ? out.pos : out.neg) += 1;
        for (Index i = k + 1; i < n; ++i) {
            if (is_zero(s(i, k))) continue;
            const S f = s(i, k) / pivot;
            for (Index j = k; j < n; ++j)
                if (!is_zero(s(k, j))) s(i, j) -= f * s(k, j);
        }
        ++k;
    }
    return out;
}

}  // namespace hc
